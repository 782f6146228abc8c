#include <array>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "chessplex/error.hpp"
#include "chessplex/homology.hpp"

using namespace chessplex;

namespace {

std::vector<std::int64_t> with_minus_one(const ReducedHomology& h) {
  std::vector<std::int64_t> out = {h.degree_minus_one};
  out.insert(out.end(), h.ranks.begin(), h.ranks.end());
  return out;
}

std::vector<std::int64_t> oracle_betti(const SimplicialComplex& k, long p) {
  const auto b = oracle::reduced_betti(k.facets(), p);
  return {b.begin(), b.end()};
}

std::vector<SimplicialComplex> sample_complexes() {
  std::vector<SimplicialComplex> out = {
      SimplicialComplex(4, {0b0011, 0b1100}),
      SimplicialComplex(3, {0b011, 0b101, 0b110}),
      SimplicialComplex(3, {0b111}),
      SimplicialComplex::skeleton_of_simplex(5, 2),
      SimplicialComplex::skeleton_of_simplex(4, -1),
      // RP^2, six-vertex triangulation: torsion shows up over F2 only
      SimplicialComplex(6, {0b000111, 0b001101, 0b011001, 0b110001, 0b100011, 0b010110,
                            0b101100, 0b011010, 0b110100, 0b101010}),
      enumerate_facets(ComplexSpec::chessboard(3, 2, {1, 1})),
      enumerate_facets(ComplexSpec::chessboard(4, 3, {1, 1, 1})),
      enumerate_facets(ComplexSpec::chessboard(5, 2, {1, 1})),
      enumerate_facets(ComplexSpec::symmetric(4, 2, 1, 1)),
      enumerate_facets(ComplexSpec::symmetric(3, 3, 1, 1)),
      enumerate_facets(ComplexSpec::chessboard(4, 2, {2, 2})),
  };
  std::mt19937_64 rng(5);
  for (int t = 0; t < 12; ++t) {
    std::vector<VertexSet> gens;
    for (int g = 0; g < 6; ++g) {
      VertexSet f = 0;
      while (cardinality(f) < 3) f |= singleton(static_cast<int>(rng() % 7));
      gens.push_back(f);
    }
    out.push_back(SimplicialComplex::from_generators(7, gens));
  }
  return out;
}

}  // namespace

TEST_CASE("field parsing") {
  CHECK(CoefficientField::parse("Q").is_rational());
  CHECK(CoefficientField::parse("F7").characteristic == 7);
  CHECK(CoefficientField::parse("F7").name() == "F7");
  CHECK_THROWS_AS(CoefficientField::parse("F4"), InvalidInput);
  CHECK_THROWS_AS(CoefficientField::parse("Z"), InvalidInput);
}

TEST_CASE("small reduced homology examples") {
  const SimplicialComplex two_edges(4, {0b0011, 0b1100});
  CHECK(with_minus_one(reduced_homology_ranks(two_edges, CoefficientField::rationals())) ==
        std::vector<std::int64_t>{0, 1, 0});
  const SimplicialComplex circle(3, {0b011, 0b101, 0b110});
  CHECK(reduced_homology_ranks(circle, CoefficientField::prime(2)).ranks == std::vector<std::int64_t>{0, 1});
  const auto k52 = enumerate_facets(ComplexSpec::chessboard(5, 2, {1, 1}));
  CHECK(reduced_homology_ranks(k52, CoefficientField::rationals()).rank(0) == 0);
  const auto empty = SimplicialComplex::skeleton_of_simplex(3, -1);
  const auto he = reduced_homology_ranks(empty, CoefficientField::rationals());
  CHECK(he.degree_minus_one == 1);
  CHECK(he.ranks.empty());
  CHECK(reduced_homology_ranks(SimplicialComplex(), CoefficientField::rationals()).ranks.empty());
}

TEST_CASE("ranks agree with the dense oracle, with and without simplification") {
  const std::array<long, 4> primes = {0, 2, 3, 5};
  for (const auto& k : sample_complexes()) {
    for (long p : primes) {
      const auto field = p == 0 ? CoefficientField::rationals() : CoefficientField::prime(p);
      const auto want = oracle_betti(k, p);
      HomologyOptions full;
      full.simplify = false;
      CHECK(with_minus_one(reduced_homology_ranks(k, field)) == want);
      CHECK(with_minus_one(reduced_homology_ranks(k, field, full)) == want);
    }
  }
}

TEST_CASE("projective plane distinguishes F2 from Q") {
  const auto rp2 = sample_complexes()[5];
  CHECK(reduced_homology_ranks(rp2, CoefficientField::rationals()).ranks == std::vector<std::int64_t>{0, 0, 0});
  CHECK(reduced_homology_ranks(rp2, CoefficientField::prime(2)).ranks == std::vector<std::int64_t>{0, 1, 1});
}

TEST_CASE("boundary of boundary vanishes") {
  for (const auto& k : sample_complexes()) {
    const FaceTable t = face_table(k);
    for (int d = 1; d <= t.top_dimension(); ++d) {
      const auto lower = boundary_matrix(t, d - 1);
      const auto upper = boundary_matrix(t, d);
      for (const auto& field : default_fields()) CHECK(composition_vanishes(lower, upper, field));
    }
  }
}

TEST_CASE("matrix_rank agrees with the dense oracle") {
  for (const auto& k : sample_complexes()) {
    const FaceTable t = face_table(k);
    for (int d = 0; d <= t.top_dimension(); ++d) {
      const auto b = boundary_matrix(t, d);
      std::vector<std::vector<long>> dense(b.rows, std::vector<long>(b.columns.size(), 0));
      for (std::size_t j = 0; j < b.columns.size(); ++j)
        for (auto [r, e] : b.columns[j]) dense[r][j] = e;
      for (long p : {0L, 2L, 3L}) {
        const auto field = p == 0 ? CoefficientField::rationals() : CoefficientField::prime(p);
        CHECK(matrix_rank(b, field) == oracle::dense_rank(dense, p));
      }
    }
  }
}

TEST_CASE("Euler characteristic: f-vector against homology") {
  for (const auto& k : sample_complexes()) {
    for (const auto& field : default_fields()) {
      CHECK(euler_characteristic(k) == reduced_homology_ranks(k, field).euler_characteristic());
    }
  }
  const SimplicialComplex two_edges(4, {0b0011, 0b1100});
  CHECK(euler_characteristic(two_edges) == 2);
  CHECK(euler_characteristic(SimplicialComplex(3, {0b011, 0b101, 0b110})) == 0);
  const auto k = enumerate_facets(ComplexSpec::symmetric(5, 2, 1, 1));
  CHECK(euler_characteristic(k) == reduced_homology_ranks(k, CoefficientField::rationals()).euler_characteristic());
}

TEST_CASE("connectivity evidence") {
  const auto fields = default_fields();
  const auto r = connectivity_evidence(ComplexSpec::symmetric(5, 2, 1, 1), fields);
  CHECK(r.mu == 1);
  CHECK(r.hypothesis_ok);
  REQUIRE(r.verdict.has_value());
  CHECK(*r.verdict);
  CHECK(r.top_concentrated);

  const auto below = connectivity_evidence(ComplexSpec::symmetric(3, 2, 1, 1), fields);
  CHECK_FALSE(below.hypothesis_ok);
  CHECK_FALSE(below.verdict.has_value());

  const auto board = connectivity_evidence(ComplexSpec::chessboard(5, 2, {1, 1}), fields);
  CHECK(board.mu == 0);
  CHECK(board.verdict.value_or(false));
}

TEST_CASE("connectivity grid up to the moderate sizes") {
  const auto fields = default_fields();
  for (int n : {2, 3}) {
    for (int nu : {1, 2}) {
      for (int s = 0; s < n; ++s) {
        for (int extra : {0, 1}) {
          const int m = n * (nu + 1) + s - 1 + extra;
          if (n == 3 && nu == 2 && m > 9) continue;  // covered by the acceptance run
          const auto r = connectivity_evidence(ComplexSpec::symmetric(m, n, nu, s), fields);
          CHECK(r.mu == nu * n + s - 2);
          CHECK(r.verdict.value_or(false));
          CHECK(r.top_concentrated);
          const auto& q = r.betti.at("Q");
          for (const auto& [name, h] : r.betti) CHECK(h == q);
        }
      }
    }
  }
}

TEST_CASE("face limit guard") {
  HomologyOptions tiny;
  tiny.face_limit = 10;
  CHECK_THROWS_AS(reduced_homology_ranks(SimplicialComplex::skeleton_of_simplex(6, 2),
                                         CoefficientField::rationals(), tiny),
                  ResourceLimit);
}
