#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "chessplex/error.hpp"
#include "chessplex/homology.hpp"
#include "chessplex/shelling.hpp"

using namespace chessplex;

namespace {

FacetOrder identity_order(const SimplicialComplex& k) {
  FacetOrder o;
  o.facet_ids.resize(k.facet_count());
  std::iota(o.facet_ids.begin(), o.facet_ids.end(), 0);
  return o;
}

std::vector<VertexSet> ordered(const SimplicialComplex& k, const FacetOrder& o) {
  std::vector<VertexSet> out;
  for (auto id : o.facet_ids) out.push_back(k.facets()[id]);
  return out;
}

/// Checks the relation F cap F' subset F'' cap F' = F' minus {v}.
bool witness_relation(VertexSet f, VertexSet fp, VertexSet fpp, int v) {
  return is_subset(f & fp, fpp & fp) && (fpp & fp) == (fp & ~singleton(v)) && (fp >> v & 1);
}

}  // namespace

TEST_CASE("verify_shelling on tiny complexes") {
  const SimplicialComplex two_edges(4, {0b0011, 0b1100});
  CHECK(std::holds_alternative<ShellingRefutation>(verify_shelling(two_edges, identity_order(two_edges))));

  const SimplicialComplex circle(3, {0b011, 0b101, 0b110});
  std::vector<std::size_t> ids = {0, 1, 2};
  do {
    CHECK(std::holds_alternative<ShellingCertificate>(verify_shelling(circle, {ids, {}})));
  } while (std::next_permutation(ids.begin(), ids.end()));

  const SimplicialComplex single(3, {0b111});
  CHECK(std::holds_alternative<ShellingCertificate>(verify_shelling(single, identity_order(single))));
}

TEST_CASE("verify_shelling rejects non-pure complexes and bad orders") {
  const SimplicialComplex mixed(4, {0b0111, 0b1000});
  CHECK_THROWS_AS(verify_shelling(mixed, identity_order(mixed)), InvalidInput);
  const SimplicialComplex circle(3, {0b011, 0b101, 0b110});
  CHECK_THROWS_AS(verify_shelling(circle, {{0, 0, 1}, {}}), InvalidInput);
  CHECK_THROWS_AS(verify_shelling(circle, {{0, 1}, {}}), InvalidInput);
}

TEST_CASE("verify_shelling agrees with the definition on random orders") {
  std::mt19937_64 rng(11);
  const std::vector<SimplicialComplex> complexes = {
      enumerate_facets(ComplexSpec::chessboard(3, 2, {1, 1})),
      enumerate_facets(ComplexSpec::chessboard(4, 2, {1, 1})),
      enumerate_facets(ComplexSpec::symmetric(4, 2, 1, 1)),
      SimplicialComplex::skeleton_of_simplex(5, 1),
      SimplicialComplex(6, {0b000111, 0b001110, 0b011100, 0b111000, 0b110001, 0b100011}),
      SimplicialComplex(6, {0b000011, 0b001100, 0b110000, 0b000110}),
  };
  int agree_yes = 0, agree_no = 0;
  for (const auto& k : complexes) {
    for (int t = 0; t < 40; ++t) {
      FacetOrder o = identity_order(k);
      std::shuffle(o.facet_ids.begin(), o.facet_ids.end(), rng);
      const bool got = std::holds_alternative<ShellingCertificate>(verify_shelling(k, o));
      const bool want = oracle::is_shelling(ordered(k, o));
      CHECK(got == want);
      (want ? agree_yes : agree_no)++;
    }
  }
  CHECK(agree_yes > 0);
  CHECK(agree_no > 0);
}

TEST_CASE("certificate witnesses satisfy the shelling relation for every pair") {
  const ComplexSpec spec = ComplexSpec::symmetric(5, 2, 1, 1);
  const auto k = enumerate_facets(spec);
  const auto verdict = verify_shelling(k, paper_shelling_order(spec));
  REQUIRE(std::holds_alternative<ShellingCertificate>(verdict));
  const auto& cert = std::get<ShellingCertificate>(verdict);
  CHECK(cert.pair_count() == k.facet_count() * (k.facet_count() - 1) / 2);
  const auto& ids = cert.order().facet_ids;
  for (std::size_t j = 0; j < ids.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto w = cert.witness(ids[j], ids[i]);
      REQUIRE(w.has_value());
      CHECK(cert.position_of(w->witness_id) < j);
      CHECK(witness_relation(k.facets()[ids[i]], k.facets()[ids[j]], k.facets()[w->witness_id], w->vertex));
    }
    if (j > 0) CHECK_FALSE(cert.witness(ids[0], ids[j]).has_value());
  }
}

TEST_CASE("paper_precedes compares size vectors") {
  const ComplexSpec spec = ComplexSpec::symmetric(5, 2, 1, 1);
  const LabeledPartition f{{{1, 2}, {3}}};
  const LabeledPartition fp{{{4}, {1, 2}}};
  CHECK(paper_precedes(spec, f, fp) == Precedence::before);
  CHECK(paper_precedes(spec, fp, f) == Precedence::after);
  CHECK(paper_precedes(spec, f, f) == Precedence::same_block);
}

TEST_CASE("constituent orders are shellings") {
  const ComplexSpec spec = ComplexSpec::chessboard(3, 2, {1, 1});
  const auto k = enumerate_facets(spec);
  const std::vector<int> sizes = {1, 1};
  std::vector<LabeledPartition> labeled;
  for (VertexSet f : k.facets()) labeled.push_back(LabeledPartition::from_placement(f, spec.board()));
  const FacetOrder o = constituent_order(3, sizes, labeled);
  CHECK(o.facet_ids.size() == 6);
  CHECK(oracle::is_shelling(ordered(k, o)));

  const std::vector<LabeledPartition> one = {labeled.front()};
  CHECK(constituent_order(3, sizes, one).facet_ids == std::vector<std::size_t>{0});
}

TEST_CASE("lexicographic order of the 3x2 board is not a shelling") {
  // The six facets form a hexagon; in lexicographic order the fourth edge
  // meets its predecessors in two isolated vertices.
  const auto k = enumerate_facets(ComplexSpec::chessboard(3, 2, {1, 1}));
  std::vector<VertexSet> lex = k.facets();
  std::vector<LabeledPartition> labeled;
  for (auto f : lex) labeled.push_back(LabeledPartition::from_placement(f, {3, 2}));
  std::vector<std::size_t> perm(lex.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return labeled[a].blocks < labeled[b].blocks; });
  std::vector<VertexSet> seq;
  for (auto i : perm) seq.push_back(lex[i]);
  CHECK_FALSE(oracle::is_shelling(seq));
}

TEST_CASE("constituent_sequence covers every facet once and shells") {
  for (const auto& sizes : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 2, 1}, {2, 2}, {0, 2}, {3, 1}}) {
    const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    const int n = static_cast<int>(sizes.size());
    for (int m = total + n - 1; m <= total + n && m * n <= 18; ++m) {
      const auto seq = constituent_sequence(m, sizes);
      const auto want = oracle::facets(m, n, sizes, false);
      CHECK(std::set<VertexSet>(seq.begin(), seq.end()) == std::set<VertexSet>(want.begin(), want.end()));
      CHECK(seq.size() == want.size());
      CHECK(oracle::is_shelling(seq));
    }
  }
}

TEST_CASE("paper_shelling_order on small grid cases matches the definition") {
  for (auto [m, n, nu, s] : std::vector<std::array<int, 4>>{
           {3, 2, 1, 0}, {4, 2, 1, 0}, {4, 2, 1, 1}, {5, 2, 1, 1}, {5, 3, 1, 0}, {6, 2, 2, 0}}) {
    CAPTURE(m);
    CAPTURE(n);
    const ComplexSpec spec = ComplexSpec::symmetric(m, n, nu, s);
    const auto k = enumerate_facets(spec);
    const FacetOrder o = paper_shelling_order(spec);
    CHECK(oracle::is_shelling(ordered(k, o)));
    CHECK(std::holds_alternative<ShellingCertificate>(verify_shelling(k, o)));
    // blocks appear in descending size-vector order
    for (std::size_t i = 1; i < o.labeled.size(); ++i) CHECK(o.labeled[i - 1].sizes() >= o.labeled[i].sizes());
  }
}

TEST_CASE("paper_shelling_order requires the working hypothesis") {
  CHECK_THROWS_AS(paper_shelling_order(ComplexSpec::symmetric(3, 2, 1, 1)), InvalidInput);
}

TEST_CASE("shellable implies homology concentrated in the top degree") {
  for (auto [m, n, nu, s] : std::vector<std::array<int, 4>>{{5, 2, 1, 1}, {6, 2, 1, 1}, {5, 3, 1, 0}}) {
    const ComplexSpec spec = ComplexSpec::symmetric(m, n, nu, s);
    const auto k = enumerate_facets(spec);
    REQUIRE(std::holds_alternative<ShellingCertificate>(verify_shelling(k, paper_shelling_order(spec))));
    for (const auto& field : default_fields()) {
      const auto h = reduced_homology_ranks(k, field);
      for (int d = -1; d < k.dimension(); ++d) CHECK(h.rank(d) == 0);
    }
  }
}

TEST_CASE("case_a_witness example and exhaustive relation check") {
  const LabeledPartition f{{{1, 2}, {4}}};
  const LabeledPartition fp{{{4}, {1, 2}}};
  const auto [fpp, v] = case_a_witness(f, fp);
  CHECK(fpp == LabeledPartition{{{1, 4}, {2}}});
  CHECK(v == Cell{1, 2});
  CHECK_THROWS_AS(case_a_witness(f, f), InvalidInput);

  for (auto [m, n, nu, s] : std::vector<std::array<int, 4>>{{5, 2, 1, 1}, {6, 3, 1, 1}, {6, 3, 1, 2}}) {
    const ComplexSpec spec = ComplexSpec::symmetric(m, n, nu, s);
    const auto labeled = symmetrized_complex_as_labeled(spec);
    const auto k = enumerate_facets(spec);
    const std::set<VertexSet> all(k.facets().begin(), k.facets().end());
    const BoardShape b = spec.board();
    int checked = 0;
    for (const auto& a : labeled) {
      for (const auto& bp : labeled) {
        if (paper_precedes(spec, a, bp) != Precedence::before) continue;
        const auto [w, cell] = case_a_witness(a, bp);
        const VertexSet pf = a.to_placement(m), pfp = bp.to_placement(m), pw = w.to_placement(m);
        CHECK(all.count(pw) == 1);
        CHECK(paper_precedes(spec, w, bp) == Precedence::before);
        CHECK(witness_relation(pf, pfp, pw, b.vertex_of(cell)));
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
}
