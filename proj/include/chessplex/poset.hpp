#pragma once

// Face-poset differences, order-complex dimensions, antichains and the
// subset posets Q_s^t with their cyclic symmetry.

#include <optional>
#include <utility>
#include <vector>

#include "chessplex/complex.hpp"

namespace chessplex {

/// Faces of `bigger` that are not faces of `smaller`, ordered by inclusion.
/// Elements are sorted by size, then lexicographically.
struct FacePosetDifference {
  int vertex_count = 0;
  std::vector<VertexSet> elements;

  bool empty() const { return elements.empty(); }
};

/// Throws InvalidInput unless smaller is a subcomplex of bigger.
FacePosetDifference face_poset_difference(const SimplicialComplex& bigger,
                                          const SimplicialComplex& smaller,
                                          std::uint64_t max_faces = 20'000'000);

/// {i : A_i in L and A_i not in K}, 1-based. Throws InvalidInput unless K is
/// a subcomplex of L.
std::vector<int> x_map(const LabeledPartition& a, const SimplicialComplex& k,
                       const SimplicialComplex& l);

struct AntichainResult {
  bool antichain = true;
  /// (lower, upper) with lower a proper subset of upper.
  std::optional<std::pair<VertexSet, VertexSet>> comparable;
};

/// A difference of a complex and a subcomplex is an up-set of the bigger
/// complex, so comparable elements exist iff a covering pair does.
AntichainResult is_antichain(const FacePosetDifference& q);
/// Pairwise test for an arbitrary family of sets.
AntichainResult is_antichain(const std::vector<VertexSet>& family);

/// Longest inclusion chain minus one; nullopt for the empty poset.
std::optional<int> difference_order_complex_dim(const FacePosetDifference& q);
std::optional<int> difference_order_complex_dim(const SimplicialComplex& bigger,
                                                const SimplicialComplex& smaller);
/// Same for an arbitrary family of sets, by dynamic programming over sizes.
std::optional<int> order_complex_dim(const std::vector<VertexSet>& family);

/// Q_s^t = {Z subset of [r] : s + 1 <= |Z| <= t}, element i as vertex i - 1.
std::vector<VertexSet> model_poset(int r, int s, int t);

struct FreenessResult {
  bool free = true;
  /// An element fixed by the shift power `power`, 0 < power < r.
  std::optional<std::pair<VertexSet, int>> fixed;
};

/// Whether the cyclic shift i -> i + 1 (mod r) generates a free action on
/// the family: no element is fixed by a nonidentity power.
FreenessResult cyclic_action_is_free(int r, const std::vector<VertexSet>& family);

}  // namespace chessplex
