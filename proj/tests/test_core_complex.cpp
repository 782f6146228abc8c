#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "chessplex/complex.hpp"
#include "chessplex/error.hpp"

using namespace chessplex;

namespace {

VertexSet cells(BoardShape b, std::initializer_list<Cell> cs) {
  VertexSet s = 0;
  for (Cell c : cs) s |= singleton(b.vertex_of(c));
  return s;
}

std::set<VertexSet> facet_set(const SimplicialComplex& k) {
  return {k.facets().begin(), k.facets().end()};
}

}  // namespace

TEST_CASE("lex_less agrees with comparison of sorted vertex lists") {
  for (VertexSet a = 0; a < 64; ++a) {
    for (VertexSet b = 0; b < 64; ++b) {
      CHECK(lex_less(a, b) == (vertices_of(a) < vertices_of(b)));
    }
  }
}

TEST_CASE("is_simplex on small boards") {
  const ComplexSpec sq = ComplexSpec::chessboard(2, 2, {1, 1}, {1, 1});
  CHECK(is_simplex(sq, RookPlacement{{{1, 1}, {2, 2}}}));
  CHECK_FALSE(is_simplex(sq, RookPlacement{{{1, 1}, {1, 2}}}));

  ComplexSpec sym = ComplexSpec::chessboard(4, 2, {2, 1});
  sym.symmetrized = true;
  CHECK(is_simplex(sym, RookPlacement{{{1, 1}, {2, 2}, {3, 2}}}));
  ComplexSpec plain = ComplexSpec::chessboard(4, 2, {2, 1});
  CHECK_FALSE(is_simplex(plain, RookPlacement{{{1, 1}, {2, 2}, {3, 2}}}));
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(ComplexSpec::chessboard(2, 2, {1}), InvalidInput);
  CHECK_THROWS_AS(ComplexSpec::chessboard(2, 2, {1, -1}), InvalidInput);
  CHECK_THROWS_AS(ComplexSpec::chessboard(9, 8, {1, 1, 1, 1, 1, 1, 1, 1}), InvalidInput);
  CHECK_THROWS_AS(ComplexSpec::symmetric(4, 2, 1, 3), InvalidInput);
}

TEST_CASE("enumerate_facets examples") {
  const BoardShape b{2, 2};
  const auto sq = enumerate_facets(ComplexSpec::chessboard(2, 2, {1, 1}, {1, 1}));
  CHECK(facet_set(sq) == std::set<VertexSet>{cells(b, {{1, 1}, {2, 2}}), cells(b, {{2, 1}, {1, 2}})});

  const auto row = enumerate_facets(ComplexSpec::chessboard(3, 1, {2}));
  CHECK(row.facet_count() == 3);
  CHECK(facet_set(row) == facet_set(SimplicialComplex::skeleton_of_simplex(3, 1)));

  const auto sym = enumerate_facets(ComplexSpec::symmetric(4, 2, 1, 1));
  CHECK(sym.facet_count() == 2 * binomial(4, 2) * 2);
}

TEST_CASE("enumerate_facets matches the brute-force placement oracle") {
  struct Case {
    int m, n;
    std::vector<int> caps;
    bool sym;
  };
  const std::vector<Case> cases = {
      {3, 2, {1, 1}, false}, {4, 2, {2, 1}, false}, {4, 2, {2, 1}, true}, {5, 2, {2, 1}, true},
      {4, 3, {1, 1, 1}, false}, {4, 3, {2, 1, 1}, true}, {3, 3, {2, 2, 1}, true},
      {5, 3, {1, 1, 0}, true}, {2, 4, {1, 1, 1, 1}, true}, {6, 2, {3, 2}, true},
      {4, 4, {2, 1, 1, 0}, true},
  };
  for (const auto& c : cases) {
    CAPTURE(c.m);
    CAPTURE(c.n);
    ComplexSpec spec = ComplexSpec::chessboard(c.m, c.n, c.caps);
    spec.symmetrized = c.sym;
    const auto got = enumerate_facets(spec);
    const auto want = oracle::facets(c.m, c.n, c.caps, c.sym);
    CHECK(facet_set(got) == std::set<VertexSet>(want.begin(), want.end()));
    CHECK(got.facet_count() == want.size());
  }
}

TEST_CASE("canonical facet order: descending size vector, then lex") {
  const ComplexSpec spec = ComplexSpec::symmetric(5, 3, 1, 1);
  const auto k = enumerate_facets(spec);
  const BoardShape b = spec.board();
  for (std::size_t i = 1; i < k.facet_count(); ++i) {
    const auto a = b.row_sizes(k.facets()[i - 1]);
    const auto c = b.row_sizes(k.facets()[i]);
    CHECK(a >= c);
    if (a == c) CHECK(lex_less(k.facets()[i - 1], k.facets()[i]));
  }
}

TEST_CASE("is_simplex is downward closed and agrees with the permutation oracle") {
  struct Case {
    int m, n;
    std::vector<int> caps;
  };
  for (const auto& c : std::vector<Case>{{4, 2, {2, 1}}, {4, 3, {2, 1, 0}}, {4, 4, {1, 1, 1, 0}},
                                         {3, 4, {2, 1, 1, 0}}, {5, 3, {2, 2, 1}}}) {
    ComplexSpec spec = ComplexSpec::chessboard(c.m, c.n, c.caps);
    spec.symmetrized = true;
    const int cellsn = c.m * c.n;
    std::vector<char> member(std::size_t{1} << cellsn);
    for (VertexSet p = 0; p < member.size(); ++p) {
      member[p] = is_simplex(spec, p);
      REQUIRE(static_cast<bool>(member[p]) == oracle::is_placement(p, c.m, c.n, c.caps, true));
    }
    for (VertexSet p = 0; p < member.size(); ++p) {
      if (!member[p]) continue;
      for_each_vertex(p, [&](int v) { CHECK(member[p & ~singleton(v)]); });
    }
  }
}

TEST_CASE("row relabeling maps facets of the symmetrization onto themselves") {
  const ComplexSpec spec = ComplexSpec::symmetric(5, 3, 1, 2);
  const auto k = enumerate_facets(spec);
  const auto all = facet_set(k);
  std::vector<int> perm = {0, 1, 2};
  do {
    std::set<VertexSet> image;
    for (VertexSet f : k.facets()) {
      VertexSet g = 0;
      for_each_vertex(f, [&](int v) {
        const Cell c = spec.board().cell_of(v);
        g |= singleton(spec.board().vertex_of({c.column, perm[c.row - 1] + 1}));
      });
      image.insert(g);
    }
    CHECK(image == all);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("purity under the working hypothesis and antichain of facets") {
  for (int n : {2, 3}) {
    for (int nu : {0, 1, 2}) {
      for (int s = 0; s < n; ++s) {
        const int lo = n * (nu + 1) + s - 1;
        for (int m = std::max(lo, 1); m <= lo + 1 && m * n <= 24; ++m) {
          const auto k = enumerate_facets(ComplexSpec::symmetric(m, n, nu, s));
          CHECK(k.is_pure());
          CHECK(k.dimension() == n * nu + s - 1);
          for (VertexSet a : k.facets())
            for (VertexSet b : k.facets()) CHECK((a == b || !is_subset(a, b)));
        }
      }
    }
  }
}

TEST_CASE("below the working hypothesis the symmetrization may be non-pure") {
  const auto k = enumerate_facets(ComplexSpec::symmetric(3, 2, 1, 1));
  const auto want = oracle::facets(3, 2, {2, 1}, true);
  CHECK(facet_set(k) == std::set<VertexSet>(want.begin(), want.end()));
}

TEST_CASE("f_vector examples and brute-force closure") {
  const SimplicialComplex two_edges(4, {0b0011, 0b1100});
  CHECK(f_vector(two_edges).counts == std::vector<std::int64_t>{4, 2});
  CHECK(f_vector(two_edges).euler_characteristic() == 2);
  const SimplicialComplex triangle(3, {0b111});
  CHECK(f_vector(triangle).counts == std::vector<std::int64_t>{3, 3, 1});

  const auto k = enumerate_facets(ComplexSpec::chessboard(3, 2, {1, 1}));
  const auto faces = oracle::closure(k.facets());
  std::vector<std::int64_t> want(k.dimension() + 1, 0);
  for (auto f : faces)
    if (f != 0) ++want[oracle::popcount(f) - 1];
  CHECK(f_vector(k).counts == want);
  const FaceTable table = face_table(k);
  CHECK(table.total() == faces.size());
  for (auto f : faces) CHECK(table.index_of(f) >= 0);
}

TEST_CASE("void and empty-simplex complexes are distinct") {
  const SimplicialComplex v;
  const SimplicialComplex e = SimplicialComplex::skeleton_of_simplex(3, -1);
  CHECK(v.is_void());
  CHECK(v.dimension() == -2);
  CHECK_FALSE(e.is_void());
  CHECK(e.dimension() == -1);
  CHECK(face_table(v).total() == 0);
  CHECK(face_table(e).total() == 1);
}

TEST_CASE("SimplicialComplex rejects comparable facets") {
  CHECK_THROWS_AS(SimplicialComplex(3, {0b011, 0b001}), InvalidInput);
  CHECK_THROWS_AS(SimplicialComplex(2, {0b100}), InvalidInput);
  CHECK(SimplicialComplex::from_generators(3, {0b011, 0b001, 0b100}).facet_count() == 2);
}

TEST_CASE("deleted_join_membership examples") {
  const auto k = SimplicialComplex::skeleton_of_simplex(3, 0);
  const std::vector<SimplicialComplex> kk = {k, k};
  CHECK(deleted_join_membership(kk, LabeledPartition{{{1}, {2}}}));
  CHECK_FALSE(deleted_join_membership(kk, LabeledPartition{{{1, 2}, {3}}}));
  const std::vector<SimplicialComplex> mixed = {SimplicialComplex::skeleton_of_simplex(3, 0),
                                                SimplicialComplex::skeleton_of_simplex(3, 1)};
  CHECK(deleted_join_membership(mixed, LabeledPartition{{{1}, {2, 3}}}));
  CHECK_FALSE(deleted_join_membership(mixed, LabeledPartition{{{2, 3}, {1}}}));
}

TEST_CASE("labeled partitions round-trip through placements") {
  LabeledPartition a{{{3, 1}, {}, {2}}};
  a.normalize();
  CHECK(a.blocks[0] == std::vector<int>{1, 3});
  CHECK(a.sizes() == std::vector<int>{2, 0, 1});
  const VertexSet p = a.to_placement(4);
  CHECK(LabeledPartition::from_placement(p, {4, 3}) == a);
  LabeledPartition bad{{{1}, {1}}};
  CHECK_THROWS_AS(bad.normalize(), InvalidInput);
}

TEST_CASE("symmetrized_complex_as_labeled") {
  const auto none = symmetrized_complex_as_labeled(ComplexSpec::symmetric(3, 2, 0, 0));
  REQUIRE(none.size() == 1);
  CHECK(none[0].sizes() == std::vector<int>{0, 0});

  const ComplexSpec spec = ComplexSpec::symmetric(5, 2, 1, 1);
  const auto labeled = symmetrized_complex_as_labeled(spec);
  const auto k = enumerate_facets(spec);
  REQUIRE(labeled.size() == k.facet_count());
  for (std::size_t i = 0; i < labeled.size(); ++i) CHECK(labeled[i].to_placement(5) == k.facets()[i]);
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_facets(ComplexSpec::symmetric(12, 3, 2, 2), {1000}), ResourceLimit);
}
