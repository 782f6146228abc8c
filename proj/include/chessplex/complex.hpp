#pragma once

// Multiple chessboard complexes, their row-symmetrizations and a small
// finite simplicial complex carrier shared by every other module.
//
// Faces are stored as 64-bit vertex masks, so a complex has at most 64
// vertices. Board cells (column j, row i), both 1-based, map to the vertex
// index (j - 1) * n + (i - 1).

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chessplex {

using VertexSet = std::uint64_t;
inline constexpr int kMaxVertices = 64;

inline int cardinality(VertexSet s) { return std::popcount(s); }

inline VertexSet singleton(int v) { return VertexSet{1} << v; }

inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

/// Lexicographic order on ascending vertex lists (a proper prefix sorts
/// first).
inline bool lex_less(VertexSet a, VertexSet b) {
  if (a == b) return false;
  const VertexSet diff = a ^ b;
  const VertexSet lowest = diff & (~diff + 1);
  const VertexSet above = ~((lowest << 1) - 1);
  if ((a & lowest) != 0) return (b & above) != 0;
  return (a & above) == 0;
}

template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    const int v = std::countr_zero(s);
    fn(v);
    s &= s - 1;
  }
}

std::vector<int> vertices_of(VertexSet s);
VertexSet vertex_set_of(std::span<const int> vertices);

struct Cell {
  int column = 1;
  int row = 1;
  auto operator<=>(const Cell&) const = default;
};

/// The m x n board: m columns, n rows.
struct BoardShape {
  int m = 0;
  int n = 0;

  int vertex_count() const { return m * n; }
  int vertex_of(Cell c) const { return (c.column - 1) * n + (c.row - 1); }
  Cell cell_of(int vertex) const { return {vertex / n + 1, vertex % n + 1}; }
  bool contains(Cell c) const {
    return c.column >= 1 && c.column <= m && c.row >= 1 && c.row <= n;
  }
  VertexSet row_mask(int row) const;
  VertexSet column_mask(int column) const;
  /// Rook count per row, index i - 1 for row i.
  std::vector<int> row_sizes(VertexSet placement) const;
  auto operator<=>(const BoardShape&) const = default;
};

struct RookPlacement {
  std::vector<Cell> cells;
  int dimension() const { return static_cast<int>(cells.size()) - 1; }
};

/// Parameters of the multiple chessboard complex with row caps k and column
/// caps p, optionally symmetrized over all row permutations.
struct ComplexSpec {
  int m = 0;
  int n = 0;
  std::vector<int> row_caps;
  std::vector<int> col_caps;
  bool symmetrized = false;

  static ComplexSpec chessboard(int m, int n, std::vector<int> row_caps,
                                std::vector<int> col_caps);
  /// Column caps all equal to one.
  static ComplexSpec chessboard(int m, int n, std::vector<int> row_caps);
  /// Symmetrization of the complex with caps nu + 1 in s rows and nu in the
  /// remaining n - s rows.
  static ComplexSpec symmetric(int m, int n, int nu, int s);

  BoardShape board() const { return {m, n}; }
  int cap_total() const;
  bool unit_columns() const;
  /// Throws InvalidInput when the invariants do not hold.
  void validate() const;
};

/// (nu, s) when the caps are a permutation of (nu+1)^s nu^(n-s), 0 <= s < n.
std::optional<std::pair<int, int>> balanced_caps(std::span<const int> caps);

/// Finite simplicial complex given by its facets. The void complex has no
/// facets; the complex consisting of the empty simplex alone has the single
/// facet 0.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Facets must be pairwise incomparable and use vertices below
  /// vertex_count; violations throw InvalidInput.
  SimplicialComplex(int vertex_count, std::vector<VertexSet> facets,
                    std::optional<BoardShape> board = std::nullopt);

  /// Keeps the inclusion-maximal members of `generators`.
  static SimplicialComplex from_generators(
      int vertex_count, std::vector<VertexSet> generators,
      std::optional<BoardShape> board = std::nullopt);
  /// All subsets of [vertex_count] with at most dim + 1 elements; dim = -1
  /// yields the empty-simplex complex, dim < -1 the void complex.
  static SimplicialComplex skeleton_of_simplex(int vertex_count, int dim);

  int vertex_count() const { return vertex_count_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  const std::optional<BoardShape>& board() const { return board_; }

  bool is_void() const { return facets_.empty(); }
  /// -1 for the empty-simplex complex; -2 for the void complex.
  int dimension() const;
  bool is_pure() const;
  bool contains(VertexSet face) const;
  /// Every facet of this complex is a face of `other`.
  bool is_subcomplex_of(const SimplicialComplex& other) const;
  std::string vertex_label(int v) const;

 private:
  int vertex_count_ = 0;
  std::vector<VertexSet> facets_;
  std::optional<BoardShape> board_;
};

struct FVector {
  /// counts[i] = number of i-dimensional faces.
  std::vector<std::int64_t> counts;

  int dimension() const { return static_cast<int>(counts.size()) - 1; }
  std::int64_t euler_characteristic() const;
  bool operator==(const FVector&) const = default;
};

/// Ordered tuple (A_1, ..., A_n) of pairwise disjoint subsets of [m]
/// (elements are 1-based).
struct LabeledPartition {
  std::vector<std::vector<int>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  std::vector<int> sizes() const;
  int max_element() const;
  /// Sorts blocks and throws InvalidInput on overlap or non-positive
  /// elements.
  void normalize();
  /// Block i, as a vertex set over [m] (element e is vertex e - 1).
  VertexSet block_set(int i) const;
  /// Rook placement on the m x n board, n = block count.
  VertexSet to_placement(int m) const;
  static LabeledPartition from_placement(VertexSet placement, BoardShape board);
  bool operator==(const LabeledPartition&) const = default;
};

struct EnumerationLimits {
  std::uint64_t max_facets = 10'000'000;
};

bool is_simplex(const ComplexSpec& spec, const RookPlacement& placement);
bool is_simplex(const ComplexSpec& spec, VertexSet placement);

/// Cheap upper bound on the facet count used by the enumeration guard.
std::uint64_t facet_count_bound(const ComplexSpec& spec);

/// All maximal placements, sorted by descending row-size vector and then by
/// ascending lexicographic cell list.
SimplicialComplex enumerate_facets(const ComplexSpec& spec,
                                   const EnumerationLimits& limits = {});

/// All faces of a complex grouped by dimension; by_dim[k + 1] holds the
/// k-faces in lex_less order, so by_dim[0] is {0} unless the complex is void.
struct FaceTable {
  std::vector<std::vector<VertexSet>> by_dim;

  int top_dimension() const { return static_cast<int>(by_dim.size()) - 2; }
  const std::vector<VertexSet>& faces(int dim) const { return by_dim.at(dim + 1); }
  std::uint64_t total() const;
  /// Position of `face` within faces(cardinality(face) - 1), or -1.
  std::int64_t index_of(VertexSet face) const;
};

/// Downward closure of the facets. Throws ResourceLimit past `max_faces`.
FaceTable face_table(const SimplicialComplex& complex,
                     std::uint64_t max_faces = 20'000'000);

FVector f_vector(const SimplicialComplex& complex);

/// A_i is a face of K_i for every i. Complexes are over [m]: vertex e - 1.
bool deleted_join_membership(std::span<const SimplicialComplex> family,
                             const LabeledPartition& a);

/// Facets of a symmetrized spec as labeled partitions, in the order of
/// enumerate_facets. The callback may return false to stop early.
void for_each_labeled_facet(const ComplexSpec& spec,
                            const std::function<bool(const LabeledPartition&)>& fn,
                            const EnumerationLimits& limits = {});
std::vector<LabeledPartition> symmetrized_complex_as_labeled(
    const ComplexSpec& spec, const EnumerationLimits& limits = {});

std::uint64_t binomial(int n, int k);

}  // namespace chessplex
