"""Chessboard complexes, shellings, homology and constrained Tverberg partitions."""

import json
from fractions import Fraction

from . import _chessplex
from ._chessplex import (
    CertificationFailure,
    InvalidInput,
    ResourceLimit,
    default_thread_count,
    in_symmetrized_deleted_join,
    model_poset_dim,
)

__all__ = [
    "CertificationFailure",
    "InvalidInput",
    "ResourceLimit",
    "admissible",
    "antichain",
    "build",
    "connectivity",
    "default_thread_count",
    "homology",
    "in_symmetrized_deleted_join",
    "model_poset_dim",
    "random_configuration",
    "shell",
    "tverberg",
    "unavoidable",
]


def build(m, n, nu=0, s=0, caps=None, symmetrize=False):
    return json.loads(_chessplex.build(m, n, nu, s, caps, symmetrize))


def shell(m, n, nu, s, pairs=64, threads=1):
    return json.loads(_chessplex.shell(m, n, nu, s, pairs, threads))


def homology(vertex_count, facets, fields=(), simplify=True):
    return json.loads(_chessplex.homology(vertex_count, [list(f) for f in facets], list(fields), simplify))


def connectivity(m, n, nu=0, s=0, caps=None, fields=()):
    return json.loads(_chessplex.connectivity(m, n, nu, s, caps, list(fields)))


def _rational(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def tverberg(points, caps, threads=1):
    """Search for pairwise disjoint faces with dimension caps whose images meet.

    `points` is a list of coordinate lists (int, str "p/q" or Fraction).
    """
    d = len(points[0]) if points else 0
    config = {"d": d, "points": [[_rational(x) for x in p] for p in points]}
    return json.loads(_chessplex.tverberg(json.dumps(config), list(caps), threads))


def random_configuration(d, count, seed):
    return json.loads(_chessplex.random_configuration(d, count, seed))


def admissible(d, dims):
    return json.loads(_chessplex.admissible(d, list(dims)))


def unavoidable(m, dims):
    return json.loads(_chessplex.unavoidable(m, list(dims)))


def antichain(m, r, nu, s):
    return json.loads(_chessplex.antichain(m, r, nu, s))
