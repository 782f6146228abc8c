#include "chessplex/poset.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "chessplex/error.hpp"

namespace chessplex {

namespace {

bool size_then_lex(VertexSet a, VertexSet b) {
  const int ca = cardinality(a), cb = cardinality(b);
  return ca != cb ? ca < cb : lex_less(a, b);
}

VertexSet rotate(VertexSet z, int r, int power) {
  VertexSet out = 0;
  for_each_vertex(z, [&](int v) { out |= singleton((v + power) % r); });
  return out;
}

}  // namespace

FacePosetDifference face_poset_difference(const SimplicialComplex& bigger,
                                          const SimplicialComplex& smaller,
                                          std::uint64_t max_faces) {
  if (smaller.vertex_count() > bigger.vertex_count() || !smaller.is_subcomplex_of(bigger)) {
    throw InvalidInput("smaller complex is not contained in the bigger one");
  }
  const FaceTable big = face_table(bigger, max_faces);
  const FaceTable small = face_table(smaller, max_faces);
  FacePosetDifference q;
  q.vertex_count = bigger.vertex_count();
  for (const auto& level : big.by_dim) {
    for (VertexSet f : level) {
      if (small.index_of(f) < 0) q.elements.push_back(f);
    }
  }
  return q;
}

std::vector<int> x_map(const LabeledPartition& a, const SimplicialComplex& k,
                       const SimplicialComplex& l) {
  if (k.vertex_count() != l.vertex_count() || !k.is_subcomplex_of(l)) {
    throw InvalidInput("K is not a subcomplex of L");
  }
  if (a.max_element() > l.vertex_count()) throw InvalidInput("block mentions a vertex outside [m]");
  std::vector<int> out;
  for (int i = 0; i < a.block_count(); ++i) {
    const VertexSet block = a.block_set(i);
    if (l.contains(block) && !k.contains(block)) out.push_back(i + 1);
  }
  return out;
}

AntichainResult is_antichain(const FacePosetDifference& q) {
  const std::unordered_set<VertexSet> members(q.elements.begin(), q.elements.end());
  for (VertexSet f : q.elements) {
    for (int w = 0; w < q.vertex_count; ++w) {
      if ((f & singleton(w)) != 0) continue;
      if (members.contains(f | singleton(w))) {
        return {false, std::pair{f, f | singleton(w)}};
      }
    }
  }
  return {};
}

AntichainResult is_antichain(const std::vector<VertexSet>& family) {
  std::vector<VertexSet> sorted = family;
  std::sort(sorted.begin(), sorted.end(), size_then_lex);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (cardinality(sorted[i]) < cardinality(sorted[j]) && is_subset(sorted[i], sorted[j])) {
        return {false, std::pair{sorted[i], sorted[j]}};
      }
    }
  }
  return {};
}

std::optional<int> difference_order_complex_dim(const FacePosetDifference& q) {
  if (q.empty()) return std::nullopt;
  // Every chain refines to a chain of covers inside an up-set.
  std::unordered_map<VertexSet, int> longest;
  std::vector<VertexSet> order = q.elements;
  std::sort(order.begin(), order.end(), size_then_lex);
  int best = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int len = 1;
    for (int w = 0; w < q.vertex_count; ++w) {
      if ((*it & singleton(w)) != 0) continue;
      const auto up = longest.find(*it | singleton(w));
      if (up != longest.end()) len = std::max(len, up->second + 1);
    }
    longest[*it] = len;
    best = std::max(best, len);
  }
  return best - 1;
}

std::optional<int> difference_order_complex_dim(const SimplicialComplex& bigger,
                                                const SimplicialComplex& smaller) {
  return difference_order_complex_dim(face_poset_difference(bigger, smaller));
}

std::optional<int> order_complex_dim(const std::vector<VertexSet>& family) {
  if (family.empty()) return std::nullopt;
  std::vector<VertexSet> sorted = family;
  std::sort(sorted.begin(), sorted.end(), size_then_lex);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> len(sorted.size(), 1);
  int best = 1;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (sorted[i] != sorted[j] && is_subset(sorted[i], sorted[j])) {
        len[j] = std::max(len[j], len[i] + 1);
      }
    }
    best = std::max(best, len[j]);
  }
  return best - 1;
}

std::vector<VertexSet> model_poset(int r, int s, int t) {
  if (r < 1 || r > kMaxVertices - 1 || s < 0 || t < s || t > r) {
    throw InvalidInput("model poset needs 0 <= s <= t <= r < 64");
  }
  std::vector<VertexSet> out;
  if (r > 24) throw ResourceLimit("model poset with more than 2^24 candidates");
  for (VertexSet z = 0; z < singleton(r); ++z) {
    const int size = cardinality(z);
    if (size >= s + 1 && size <= t) out.push_back(z);
  }
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

FreenessResult cyclic_action_is_free(int r, const std::vector<VertexSet>& family) {
  if (r < 1 || r >= kMaxVertices) throw InvalidInput("r must lie in [1, 63]");
  for (VertexSet z : family) {
    if ((z >> r) != 0) throw InvalidInput("set mentions an element outside [r]");
    for (int power = 1; power < r; ++power) {
      if (rotate(z, r, power) == z) return {false, std::pair{z, power}};
    }
  }
  return {};
}

}  // namespace chessplex
