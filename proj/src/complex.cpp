#include "chessplex/complex.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "chessplex/error.hpp"

namespace chessplex {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

/// Row sizes admissible for a symmetrized spec: the descending sort is
/// dominated componentwise by the descending caps.
bool dominated(std::vector<int> sizes, const std::vector<int>& caps_desc) {
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] > caps_desc[i]) return false;
  }
  return true;
}

bool row_sizes_admissible(const ComplexSpec& spec, const std::vector<int>& sizes,
                          const std::vector<int>& caps_desc) {
  if (spec.symmetrized) return dominated(sizes, caps_desc);
  for (int i = 0; i < spec.n; ++i) {
    if (sizes[i] > spec.row_caps[i]) return false;
  }
  return true;
}

bool column_caps_ok(const ComplexSpec& spec, VertexSet placement) {
  const BoardShape board = spec.board();
  for (int j = 1; j <= spec.m; ++j) {
    if (cardinality(placement & board.column_mask(j)) > spec.col_caps[j - 1]) return false;
  }
  return true;
}

/// Size vectors of facets when every maximal placement is full.
std::vector<std::vector<int>> full_size_vectors(const ComplexSpec& spec) {
  if (!spec.symmetrized) return {spec.row_caps};
  std::vector<int> perm = spec.row_caps;
  std::sort(perm.begin(), perm.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool has_full_facets(const ComplexSpec& spec) {
  return spec.unit_columns() && spec.m >= spec.cap_total();
}

std::uint64_t multinomial_placements(int m, const std::vector<int>& sizes) {
  std::uint64_t count = 1;
  int remaining = m;
  for (int c : sizes) {
    if (c > remaining) return 0;
    count = saturating_mul(count, binomial(remaining, c));
    remaining -= c;
  }
  return count;
}

/// Ordered disjoint column choices with prescribed row sizes, columns taken
/// from `available` (bit x = column x + 1).
void enumerate_ordered_blocks(const BoardShape& board, const std::vector<int>& sizes,
                              int row, VertexSet available, VertexSet placement,
                              std::vector<VertexSet>& out) {
  if (row == board.n) {
    out.push_back(placement);
    return;
  }
  const int want = sizes[row];
  std::vector<int> cols = vertices_of(available);
  if (static_cast<int>(cols.size()) < want) return;
  std::vector<int> pick(want);
  std::function<void(int, int, VertexSet, VertexSet)> choose =
      [&](int depth, int start, VertexSet used, VertexSet cells) {
        if (depth == want) {
          enumerate_ordered_blocks(board, sizes, row + 1, available & ~used, cells, out);
          return;
        }
        for (int t = start; t <= static_cast<int>(cols.size()) - (want - depth); ++t) {
          const int x = cols[t];
          choose(depth + 1, t + 1, used | singleton(x),
                 cells | singleton(x * board.n + row));
        }
      };
  choose(0, 0, 0, placement);
}

/// Generic path: every placement respecting column caps and per-row maxima,
/// kept when admissible.
void enumerate_all_placements(const ComplexSpec& spec, const std::vector<int>& row_max,
                              int row, std::vector<int>& col_used, VertexSet placement,
                              std::vector<VertexSet>& out) {
  const BoardShape board = spec.board();
  if (row == spec.n) {
    out.push_back(placement);
    return;
  }
  std::function<void(int, int, VertexSet)> extend = [&](int start, int taken,
                                                        VertexSet cells) {
    enumerate_all_placements(spec, row_max, row + 1, col_used, cells, out);
    if (taken == row_max[row]) return;
    for (int x = start; x < spec.m; ++x) {
      if (col_used[x] >= spec.col_caps[x]) continue;
      ++col_used[x];
      extend(x + 1, taken + 1, cells | singleton(x * board.n + row));
      --col_used[x];
    }
  };
  extend(0, 0, placement);
}

bool size_vector_desc_less(const std::vector<int>& a, const std::vector<int>& b) {
  return a > b;
}

}  // namespace

std::vector<int> vertices_of(VertexSet s) {
  std::vector<int> out;
  out.reserve(cardinality(s));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet vertex_set_of(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw InvalidInput("vertex index out of range");
    s |= singleton(v);
  }
  return s;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > kSaturated / num) return kSaturated;
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

VertexSet BoardShape::row_mask(int row) const {
  VertexSet s = 0;
  for (int j = 1; j <= m; ++j) s |= singleton(vertex_of({j, row}));
  return s;
}

VertexSet BoardShape::column_mask(int column) const {
  VertexSet s = 0;
  for (int i = 1; i <= n; ++i) s |= singleton(vertex_of({column, i}));
  return s;
}

std::vector<int> BoardShape::row_sizes(VertexSet placement) const {
  std::vector<int> sizes(n, 0);
  for_each_vertex(placement, [&](int v) { ++sizes[v % n]; });
  return sizes;
}

ComplexSpec ComplexSpec::chessboard(int m, int n, std::vector<int> row_caps,
                                    std::vector<int> col_caps) {
  ComplexSpec spec{m, n, std::move(row_caps), std::move(col_caps), false};
  spec.validate();
  return spec;
}

ComplexSpec ComplexSpec::chessboard(int m, int n, std::vector<int> row_caps) {
  return chessboard(m, n, std::move(row_caps), std::vector<int>(std::max(m, 0), 1));
}

ComplexSpec ComplexSpec::symmetric(int m, int n, int nu, int s) {
  if (nu < 0 || s < 0 || s > n) throw InvalidInput("symmetric spec needs nu >= 0 and 0 <= s <= n");
  std::vector<int> caps(n, nu);
  std::fill(caps.begin(), caps.begin() + s, nu + 1);
  ComplexSpec spec{m, n, std::move(caps), std::vector<int>(std::max(m, 0), 1), true};
  spec.validate();
  return spec;
}

int ComplexSpec::cap_total() const {
  return std::accumulate(row_caps.begin(), row_caps.end(), 0);
}

bool ComplexSpec::unit_columns() const {
  return std::all_of(col_caps.begin(), col_caps.end(), [](int p) { return p == 1; });
}

void ComplexSpec::validate() const {
  if (m < 0 || n < 0) throw InvalidInput("board dimensions must be non-negative");
  if (m * n > kMaxVertices) throw InvalidInput("board has more than 64 cells");
  if (static_cast<int>(row_caps.size()) != n) throw InvalidInput("row_caps must have length n");
  if (static_cast<int>(col_caps.size()) != m) throw InvalidInput("col_caps must have length m");
  auto negative = [](int x) { return x < 0; };
  if (std::any_of(row_caps.begin(), row_caps.end(), negative) ||
      std::any_of(col_caps.begin(), col_caps.end(), negative)) {
    throw InvalidInput("caps must be non-negative");
  }
  if (symmetrized && !unit_columns()) {
    throw InvalidInput("symmetrization is only supported with unit column caps");
  }
}

std::optional<std::pair<int, int>> balanced_caps(std::span<const int> caps) {
  if (caps.empty()) return std::nullopt;
  const auto [lo, hi] = std::minmax_element(caps.begin(), caps.end());
  if (*lo < 0) return std::nullopt;
  if (*hi == *lo) return std::pair{*lo, 0};
  if (*hi != *lo + 1) return std::nullopt;
  return std::pair{*lo, static_cast<int>(std::count(caps.begin(), caps.end(), *hi))};
}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<VertexSet> facets,
                                     std::optional<BoardShape> board)
    : vertex_count_(vertex_count), facets_(std::move(facets)), board_(board) {
  if (vertex_count_ < 0 || vertex_count_ > kMaxVertices) {
    throw InvalidInput("vertex count must lie in [0, 64]");
  }
  if (board_ && board_->vertex_count() != vertex_count_) {
    throw InvalidInput("board shape does not match the vertex count");
  }
  const VertexSet universe =
      vertex_count_ == kMaxVertices ? ~VertexSet{0} : singleton(vertex_count_) - 1;
  bool same_size = true;
  for (VertexSet f : facets_) {
    if (!is_subset(f, universe)) throw InvalidInput("facet uses a vertex outside the complex");
    same_size = same_size && cardinality(f) == cardinality(facets_.front());
  }
  if (same_size) {
    std::vector<VertexSet> sorted = facets_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidInput("duplicate facet");
    }
    return;
  }
  for (std::size_t a = 0; a < facets_.size(); ++a) {
    for (std::size_t b = 0; b < facets_.size(); ++b) {
      if (a != b && is_subset(facets_[a], facets_[b])) {
        throw InvalidInput("a facet is contained in another facet");
      }
    }
  }
}

SimplicialComplex SimplicialComplex::from_generators(int vertex_count,
                                                     std::vector<VertexSet> generators,
                                                     std::optional<BoardShape> board) {
  std::sort(generators.begin(), generators.end(), [](VertexSet a, VertexSet b) {
    if (cardinality(a) != cardinality(b)) return cardinality(a) > cardinality(b);
    return a < b;
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<VertexSet> kept;
  for (VertexSet g : generators) {
    const bool covered = std::any_of(kept.begin(), kept.end(),
                                     [g](VertexSet f) { return is_subset(g, f); });
    if (!covered) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), lex_less);
  return SimplicialComplex(vertex_count, std::move(kept), board);
}

SimplicialComplex SimplicialComplex::skeleton_of_simplex(int vertex_count, int dim) {
  if (dim < -1) return SimplicialComplex(vertex_count, {});
  const int size = std::min(dim + 1, vertex_count);
  std::vector<VertexSet> facets;
  // Gosper's hack over all size-element subsets of [vertex_count].
  if (size == 0) {
    facets.push_back(0);
  } else if (size == vertex_count) {
    facets.push_back(vertex_count == kMaxVertices ? ~VertexSet{0} : singleton(size) - 1);
  } else {
    VertexSet s = singleton(size) - 1;
    const VertexSet limit = vertex_count == kMaxVertices ? 0 : singleton(vertex_count);
    while (true) {
      facets.push_back(s);
      const VertexSet c = s & (~s + 1);
      const VertexSet r = s + c;
      if (r == 0) break;
      s = (((r ^ s) >> 2) / c) | r;
      if (limit != 0 && s >= limit) break;
    }
  }
  std::sort(facets.begin(), facets.end(), lex_less);
  return SimplicialComplex(vertex_count, std::move(facets));
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  int best = 0;
  for (VertexSet f : facets_) best = std::max(best, cardinality(f));
  return best - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](VertexSet f) {
    return cardinality(f) == cardinality(facets_.front());
  });
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [face](VertexSet f) { return is_subset(face, f); });
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](VertexSet f) { return other.contains(f); });
}

std::string SimplicialComplex::vertex_label(int v) const {
  if (!board_) return std::to_string(v);
  const Cell c = board_->cell_of(v);
  return "(" + std::to_string(c.column) + "," + std::to_string(c.row) + ")";
}

std::int64_t FVector::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    chi += (i % 2 == 0 ? 1 : -1) * counts[i];
  }
  return chi;
}

std::vector<int> LabeledPartition::sizes() const {
  std::vector<int> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(static_cast<int>(b.size()));
  return out;
}

int LabeledPartition::max_element() const {
  int best = 0;
  for (const auto& b : blocks) {
    for (int e : b) best = std::max(best, e);
  }
  return best;
}

void LabeledPartition::normalize() {
  VertexSet seen = 0;
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    for (int e : b) {
      if (e < 1 || e > kMaxVertices) throw InvalidInput("partition element out of range");
      if ((seen & singleton(e - 1)) != 0) throw InvalidInput("partition blocks overlap");
      seen |= singleton(e - 1);
    }
  }
}

VertexSet LabeledPartition::block_set(int i) const {
  VertexSet s = 0;
  for (int e : blocks.at(i)) s |= singleton(e - 1);
  return s;
}

VertexSet LabeledPartition::to_placement(int m) const {
  const BoardShape board{m, block_count()};
  VertexSet s = 0;
  for (int i = 0; i < block_count(); ++i) {
    for (int e : blocks[i]) {
      if (e < 1 || e > m) throw InvalidInput("partition element outside [m]");
      s |= singleton(board.vertex_of({e, i + 1}));
    }
  }
  return s;
}

LabeledPartition LabeledPartition::from_placement(VertexSet placement, BoardShape board) {
  LabeledPartition a;
  a.blocks.resize(board.n);
  for_each_vertex(placement, [&](int v) {
    const Cell c = board.cell_of(v);
    a.blocks[c.row - 1].push_back(c.column);
  });
  return a;
}

bool is_simplex(const ComplexSpec& spec, VertexSet placement) {
  const BoardShape board = spec.board();
  const int cells = board.vertex_count();
  if (cells < kMaxVertices && (placement >> cells) != 0) {
    throw InvalidInput("placement uses a cell outside the board");
  }
  if (!column_caps_ok(spec, placement)) return false;
  return row_sizes_admissible(spec, board.row_sizes(placement), sorted_desc(spec.row_caps));
}

bool is_simplex(const ComplexSpec& spec, const RookPlacement& placement) {
  const BoardShape board = spec.board();
  VertexSet s = 0;
  for (const Cell& c : placement.cells) {
    if (!board.contains(c)) throw InvalidInput("cell outside the board");
    const VertexSet bit = singleton(board.vertex_of(c));
    if ((s & bit) != 0) throw InvalidInput("duplicate cell in placement");
    s |= bit;
  }
  return is_simplex(spec, s);
}

std::uint64_t facet_count_bound(const ComplexSpec& spec) {
  spec.validate();
  if (has_full_facets(spec)) {
    std::uint64_t total = 0;
    for (const auto& sizes : full_size_vectors(spec)) {
      total = saturating_add(total, multinomial_placements(spec.m, sizes));
    }
    return total;
  }
  // Count all admissible placements while ignoring column interactions.
  const std::vector<int> caps_desc = sorted_desc(spec.row_caps);
  const int row_max_sym = caps_desc.empty() ? 0 : caps_desc.front();
  std::vector<int> sizes(spec.n, 0);
  std::uint64_t total = 0;
  std::uint64_t visited = 0;
  std::function<void(int)> walk = [&](int row) {
    if (total == kSaturated) return;
    if (++visited > 5'000'000) {
      total = kSaturated;
      return;
    }
    if (row == spec.n) {
      if (!row_sizes_admissible(spec, sizes, caps_desc)) return;
      std::uint64_t term = 1;
      for (int c : sizes) term = saturating_mul(term, binomial(spec.m, c));
      total = saturating_add(total, term);
      return;
    }
    const int hi = std::min(spec.symmetrized ? row_max_sym : spec.row_caps[row], spec.m);
    for (int c = 0; c <= hi; ++c) {
      sizes[row] = c;
      walk(row + 1);
    }
  };
  walk(0);
  return total;
}

SimplicialComplex enumerate_facets(const ComplexSpec& spec, const EnumerationLimits& limits) {
  spec.validate();
  const std::uint64_t bound = facet_count_bound(spec);
  if (bound > limits.max_facets) {
    throw ResourceLimit("facet enumeration refused: bound " + std::to_string(bound) +
                        " exceeds limit " + std::to_string(limits.max_facets));
  }
  const BoardShape board = spec.board();
  const VertexSet all_columns = spec.m == kMaxVertices ? ~VertexSet{0} : singleton(spec.m) - 1;

  std::vector<VertexSet> facets;
  if (has_full_facets(spec)) {
    for (const auto& sizes : full_size_vectors(spec)) {
      std::vector<VertexSet> block;
      enumerate_ordered_blocks(board, sizes, 0, all_columns, 0, block);
      std::sort(block.begin(), block.end(), lex_less);
      facets.insert(facets.end(), block.begin(), block.end());
    }
    return SimplicialComplex(board.vertex_count(), std::move(facets), board);
  }

  const std::vector<int> caps_desc = sorted_desc(spec.row_caps);
  std::vector<int> row_max(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    row_max[i] = spec.symmetrized ? (caps_desc.empty() ? 0 : caps_desc.front()) : spec.row_caps[i];
  }
  std::vector<int> col_used(spec.m, 0);
  std::vector<VertexSet> all;
  enumerate_all_placements(spec, row_max, 0, col_used, 0, all);
  std::vector<VertexSet> faces;
  for (VertexSet p : all) {
    if (row_sizes_admissible(spec, board.row_sizes(p), caps_desc)) faces.push_back(p);
  }
  for (VertexSet p : faces) {
    bool maximal = true;
    for (int v = 0; v < board.vertex_count() && maximal; ++v) {
      if ((p & singleton(v)) == 0 && is_simplex(spec, p | singleton(v))) maximal = false;
    }
    if (maximal) facets.push_back(p);
  }
  std::sort(facets.begin(), facets.end(), [&](VertexSet a, VertexSet b) {
    const auto sa = board.row_sizes(a);
    const auto sb = board.row_sizes(b);
    if (sa != sb) return size_vector_desc_less(sa, sb);
    return lex_less(a, b);
  });
  return SimplicialComplex(board.vertex_count(), std::move(facets), board);
}

std::uint64_t FaceTable::total() const {
  std::uint64_t t = 0;
  for (const auto& level : by_dim) t += level.size();
  return t;
}

std::int64_t FaceTable::index_of(VertexSet face) const {
  const std::size_t level = static_cast<std::size_t>(cardinality(face));
  if (level >= by_dim.size()) return -1;
  const auto& faces = by_dim[level];
  const auto it = std::lower_bound(faces.begin(), faces.end(), face, lex_less);
  if (it == faces.end() || *it != face) return -1;
  return it - faces.begin();
}

FaceTable face_table(const SimplicialComplex& complex, std::uint64_t max_faces) {
  FaceTable table;
  if (complex.is_void()) return table;
  const int top = complex.dimension();
  table.by_dim.resize(static_cast<std::size_t>(top) + 2);
  for (VertexSet f : complex.facets()) table.by_dim[cardinality(f)].push_back(f);
  std::uint64_t total = 0;
  for (int size = top + 1; size >= 0; --size) {
    auto& level = table.by_dim[size];
    if (size < top + 1) {
      for (VertexSet f : table.by_dim[size + 1]) {
        for_each_vertex(f, [&](int v) { level.push_back(f & ~singleton(v)); });
      }
    }
    std::sort(level.begin(), level.end(), lex_less);
    level.erase(std::unique(level.begin(), level.end()), level.end());
    total += level.size();
    if (total > max_faces) {
      throw ResourceLimit("face enumeration exceeds limit " + std::to_string(max_faces));
    }
  }
  return table;
}

FVector f_vector(const SimplicialComplex& complex) {
  const FaceTable table = face_table(complex);
  FVector fv;
  for (std::size_t level = 1; level < table.by_dim.size(); ++level) {
    fv.counts.push_back(static_cast<std::int64_t>(table.by_dim[level].size()));
  }
  return fv;
}

bool deleted_join_membership(std::span<const SimplicialComplex> family,
                             const LabeledPartition& a) {
  if (family.size() != a.blocks.size()) {
    throw InvalidInput("family size must equal the number of blocks");
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (a.max_element() > family[i].vertex_count()) {
      throw InvalidInput("block mentions a vertex outside [m]");
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!family[i].contains(a.block_set(static_cast<int>(i)))) return false;
  }
  return true;
}

void for_each_labeled_facet(const ComplexSpec& spec,
                            const std::function<bool(const LabeledPartition&)>& fn,
                            const EnumerationLimits& limits) {
  if (!spec.symmetrized || !spec.unit_columns()) {
    throw InvalidInput("labeled facets require a symmetrized spec with unit column caps");
  }
  const SimplicialComplex complex = enumerate_facets(spec, limits);
  for (VertexSet f : complex.facets()) {
    if (!fn(LabeledPartition::from_placement(f, spec.board()))) return;
  }
}

std::vector<LabeledPartition> symmetrized_complex_as_labeled(const ComplexSpec& spec,
                                                             const EnumerationLimits& limits) {
  std::vector<LabeledPartition> out;
  for_each_labeled_facet(spec, [&](const LabeledPartition& a) {
    out.push_back(a);
    return true;
  }, limits);
  return out;
}

}  // namespace chessplex
