#include "chessplex/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "chessplex/error.hpp"
#include "chessplex/parallel.hpp"

namespace chessplex {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

struct PrimeOps {
  using Value = std::uint32_t;
  std::uint64_t p;

  Value from_int(int v) const {
    const auto r = static_cast<std::int64_t>(v) % static_cast<std::int64_t>(p);
    return static_cast<Value>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  bool is_zero(Value a) const { return a == 0; }
  Value inverse(Value a) const {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e != 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<Value>(result);
  }
  /// a - f * b
  Value sub_mul(Value a, Value f, Value b) const {
    return static_cast<Value>((a + p - (static_cast<std::uint64_t>(f) * b) % p) % p);
  }
  Value mul(Value a, Value b) const {
    return static_cast<Value>(static_cast<std::uint64_t>(a) * b % p);
  }
};

struct RationalOps {
  using Value = mpq_class;

  Value from_int(int v) const { return Value(v); }
  bool is_zero(const Value& a) const { return sgn(a) == 0; }
  Value inverse(const Value& a) const { return Value(1) / a; }
  Value sub_mul(const Value& a, const Value& f, const Value& b) const { return a - f * b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
};

template <typename Ops>
using Column = std::vector<std::pair<std::uint32_t, typename Ops::Value>>;

/// target -= factor * source, both sorted by row.
template <typename Ops>
void axpy(const Ops& ops, Column<Ops>& target, const typename Ops::Value& factor,
          const Column<Ops>& source) {
  Column<Ops> out;
  out.reserve(target.size() + source.size());
  std::size_t i = 0, j = 0;
  const typename Ops::Value zero = ops.from_int(0);
  while (i < target.size() || j < source.size()) {
    if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
      out.push_back(std::move(target[i++]));
    } else if (i == target.size() || source[j].first < target[i].first) {
      out.emplace_back(source[j].first, ops.sub_mul(zero, factor, source[j].second));
      ++j;
    } else {
      auto v = ops.sub_mul(target[i].second, factor, source[j].second);
      if (!ops.is_zero(v)) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

/// Column reduction; returns the pivot row of every nonzero reduced column.
/// Columns flagged in `skip` are known to reduce to zero.
template <typename Ops>
std::vector<std::uint32_t> reduce_columns(const Ops& ops, std::vector<Column<Ops>> columns,
                                          std::size_t rows, const std::vector<bool>* skip) {
  constexpr std::uint32_t kFree = ~std::uint32_t{0};
  std::vector<std::uint32_t> owner(rows, kFree);
  std::vector<std::uint32_t> pivots;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (skip != nullptr && (*skip)[j]) continue;
    auto& col = columns[j];
    while (!col.empty()) {
      const std::uint32_t low = col.back().first;
      const std::uint32_t k = owner[low];
      if (k == kFree) break;
      const auto& other = columns[k];
      const auto factor = ops.mul(col.back().second, ops.inverse(other.back().second));
      axpy(ops, col, factor, other);
    }
    if (!col.empty()) {
      owner[col.back().first] = static_cast<std::uint32_t>(j);
      pivots.push_back(col.back().first);
    } else {
      col.shrink_to_fit();
    }
  }
  return pivots;
}

template <typename Ops>
std::vector<Column<Ops>> to_field(const Ops& ops, const BoundaryMatrix& m) {
  std::vector<Column<Ops>> out(m.columns.size());
  for (std::size_t j = 0; j < m.columns.size(); ++j) {
    for (const auto& [row, entry] : m.columns[j]) {
      auto v = ops.from_int(entry);
      if (!ops.is_zero(v)) out[j].emplace_back(row, std::move(v));
    }
  }
  return out;
}

/// Open-addressing map from a face to its position within its level.
class LevelIndex {
 public:
  explicit LevelIndex(const std::vector<VertexSet>& faces) {
    std::size_t cap = 16;
    while (cap < 2 * faces.size()) cap <<= 1;
    mask_ = cap - 1;
    slots_.assign(cap, {kEmpty, 0});
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (faces[i] == kEmpty) {
        zero_ = static_cast<std::int64_t>(i);
        continue;
      }
      std::size_t h = hash(faces[i]);
      while (slots_[h].first != kEmpty) h = (h + 1) & mask_;
      slots_[h] = {faces[i], static_cast<std::uint32_t>(i)};
    }
  }
  std::int64_t find(VertexSet face) const {
    if (face == kEmpty) return zero_;
    std::size_t h = hash(face);
    while (slots_[h].first != kEmpty) {
      if (slots_[h].first == face) return slots_[h].second;
      h = (h + 1) & mask_;
    }
    return -1;
  }

 private:
  static constexpr VertexSet kEmpty = 0;
  std::size_t hash(VertexSet x) const {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x) & mask_;
  }
  std::size_t mask_ = 0;
  std::int64_t zero_ = -1;
  std::vector<std::pair<VertexSet, std::uint32_t>> slots_;
};

/// Cells of a face table that survive simplification; level L holds faces
/// with L vertices (level 0 is the empty face). The chain complex of the
/// survivors uses the restricted boundary.
struct CellComplex {
  const FaceTable* table = nullptr;
  std::vector<LevelIndex> index;
  std::vector<std::vector<bool>> alive;

  std::size_t levels() const { return alive.size(); }
  std::int64_t find(std::size_t level, VertexSet face) const {
    return level < index.size() ? index[level].find(face) : -1;
  }
};

/// Removes reduction pairs (a free face with its unique coface) and
/// coreduction pairs (a cell with its unique remaining boundary face). In
/// both cases the boundary of the remaining cells is the restriction of the
/// original one and homology is unchanged over every field.
void simplify(CellComplex& cells, int vertex_count) {
  const auto& by = cells.table->by_dim;
  const std::size_t levels = by.size();
  auto& alive = cells.alive;
  std::vector<std::vector<std::uint32_t>> faces_left(levels), cofaces_left(levels);
  for (std::size_t l = 0; l < levels; ++l) {
    faces_left[l].assign(by[l].size(), static_cast<std::uint32_t>(l));
    cofaces_left[l].assign(by[l].size(), 0);
  }
  for (std::size_t l = 1; l < levels; ++l) {
    for (VertexSet f : by[l]) {
      for_each_vertex(f, [&](int v) { ++cofaces_left[l - 1][cells.find(l - 1, f & ~singleton(v))]; });
    }
  }
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t l = 0; l < levels; ++l) {
    for (std::size_t i = 0; i < by[l].size(); ++i) {
      if (faces_left[l][i] == 1 || cofaces_left[l][i] == 1) queue.emplace_back(l, i);
    }
  }
  auto for_alive_faces = [&](std::size_t l, VertexSet f, auto&& fn) {
    if (l == 0) return;
    for_each_vertex(f, [&](int v) {
      const std::int64_t k = cells.find(l - 1, f & ~singleton(v));
      if (alive[l - 1][k]) fn(static_cast<std::size_t>(k));
    });
  };
  auto for_alive_cofaces = [&](std::size_t l, VertexSet f, auto&& fn) {
    if (l + 1 >= levels) return;
    for (int w = 0; w < vertex_count; ++w) {
      if ((f & singleton(w)) != 0) continue;
      const std::int64_t k = cells.find(l + 1, f | singleton(w));
      if (k >= 0 && alive[l + 1][k]) fn(static_cast<std::size_t>(k));
    }
  };
  auto remove = [&](std::size_t l, std::size_t i) {
    alive[l][i] = false;
    const VertexSet f = by[l][i];
    for_alive_faces(l, f, [&](std::size_t k) {
      if (--cofaces_left[l - 1][k] == 1) queue.emplace_back(l - 1, k);
    });
    for_alive_cofaces(l, f, [&](std::size_t k) {
      if (--faces_left[l + 1][k] == 1) queue.emplace_back(l + 1, k);
    });
  };
  while (!queue.empty()) {
    const auto [l, i] = queue.front();
    queue.pop_front();
    if (!alive[l][i]) continue;
    const VertexSet f = by[l][i];
    std::int64_t partner = -1;
    std::size_t partner_level = 0;
    if (faces_left[l][i] == 1) {
      for_alive_faces(l, f, [&](std::size_t k) { partner = static_cast<std::int64_t>(k); });
      partner_level = l - 1;
    } else if (cofaces_left[l][i] == 1) {
      for_alive_cofaces(l, f, [&](std::size_t k) { partner = static_cast<std::int64_t>(k); });
      partner_level = l + 1;
    }
    if (partner < 0) continue;
    remove(l, i);
    remove(partner_level, static_cast<std::size_t>(partner));
  }
}

/// Boundary of the alive level-l cells into the alive level-(l-1) cells,
/// with both sides renumbered compactly.
BoundaryMatrix restricted_boundary(const CellComplex& cells, std::size_t l,
                                   const std::vector<std::vector<std::uint32_t>>& compact) {
  const auto& by = cells.table->by_dim;
  BoundaryMatrix m;
  m.degree = static_cast<int>(l) - 1;
  m.rows = static_cast<std::size_t>(
      std::count(cells.alive[l - 1].begin(), cells.alive[l - 1].end(), true));
  for (std::size_t i = 0; i < by[l].size(); ++i) {
    if (!cells.alive[l][i]) continue;
    const VertexSet f = by[l][i];
    std::vector<std::pair<std::uint32_t, int>> col;
    int sign = 1;
    for_each_vertex(f, [&](int v) {
      const std::int64_t k = cells.find(l - 1, f & ~singleton(v));
      if (cells.alive[l - 1][k]) col.emplace_back(compact[l - 1][k], sign);
      sign = -sign;
    });
    std::sort(col.begin(), col.end());
    m.columns.push_back(std::move(col));
  }
  return m;
}

template <typename Ops>
ReducedHomology ranks_over(const Ops& ops, const CellComplex& cells, int top_dimension) {
  const std::size_t levels = cells.levels();
  std::vector<std::vector<std::uint32_t>> compact(levels);
  std::vector<std::size_t> counts(levels, 0);
  for (std::size_t l = 0; l < levels; ++l) {
    compact[l].assign(cells.alive[l].size(), 0);
    for (std::size_t i = 0; i < cells.alive[l].size(); ++i) {
      if (cells.alive[l][i]) compact[l][i] = static_cast<std::uint32_t>(counts[l]++);
    }
  }
  // rank_of[l] = rank of the boundary from level l to level l - 1.
  std::vector<std::size_t> rank_of(levels + 1, 0);
  std::vector<bool> cleared;
  for (std::size_t l = levels; l-- > 1;) {
    const BoundaryMatrix m = restricted_boundary(cells, l, compact);
    const std::vector<bool>* skip = cleared.empty() ? nullptr : &cleared;
    const auto pivots = reduce_columns(ops, to_field(ops, m), m.rows, skip);
    rank_of[l] = pivots.size();
    cleared.assign(m.rows, false);
    for (std::uint32_t p : pivots) cleared[p] = true;
  }
  ReducedHomology h;
  auto betti = [&](std::size_t l) {
    return static_cast<std::int64_t>(counts[l]) - static_cast<std::int64_t>(rank_of[l]) -
           static_cast<std::int64_t>(rank_of[l + 1]);
  };
  h.degree_minus_one = betti(0);
  for (int d = 0; d <= top_dimension; ++d) h.ranks.push_back(betti(static_cast<std::size_t>(d) + 1));
  return h;
}

ReducedHomology ranks_for_field(const CoefficientField& field, const CellComplex& cells,
                                int top_dimension) {
  if (field.is_rational()) return ranks_over(RationalOps{}, cells, top_dimension);
  return ranks_over(PrimeOps{field.characteristic}, cells, top_dimension);
}

}  // namespace

CoefficientField CoefficientField::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) {
    throw InvalidInput("field characteristic must be a prime below 2^31");
  }
  return {p};
}

CoefficientField CoefficientField::parse(const std::string& name) {
  if (name == "Q") return rationals();
  if (name.size() >= 2 && name[0] == 'F' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
      name.size() <= 11) {
    const unsigned long long p = std::stoull(name.substr(1));
    if (p < (1ull << 31)) return prime(static_cast<std::uint32_t>(p));
  }
  throw InvalidInput("unknown coefficient field '" + name + "'");
}

std::string CoefficientField::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(characteristic);
}

std::vector<CoefficientField> default_fields() {
  return {CoefficientField::rationals(), CoefficientField::prime(2), CoefficientField::prime(3),
          CoefficientField::prime(5)};
}

BoundaryMatrix boundary_matrix(const FaceTable& table, int degree) {
  if (degree < 0 || degree > table.top_dimension()) {
    throw InvalidInput("boundary degree outside the complex");
  }
  CellComplex all{&table, {}, {}};
  for (const auto& level : table.by_dim) {
    all.index.emplace_back(level);
    all.alive.emplace_back(level.size(), true);
  }
  std::vector<std::vector<std::uint32_t>> compact(table.by_dim.size());
  for (std::size_t l = 0; l < table.by_dim.size(); ++l) {
    compact[l].resize(table.by_dim[l].size());
    std::iota(compact[l].begin(), compact[l].end(), 0u);
  }
  return restricted_boundary(all, static_cast<std::size_t>(degree) + 1, compact);
}

bool composition_vanishes(const BoundaryMatrix& lower, const BoundaryMatrix& upper,
                          const CoefficientField& field) {
  if (lower.degree + 1 != upper.degree || upper.rows != lower.columns.size()) {
    throw InvalidInput("boundary matrices are not composable");
  }
  const std::int64_t p = field.characteristic;
  std::unordered_map<std::uint32_t, std::int64_t> acc;
  for (const auto& col : upper.columns) {
    acc.clear();
    for (const auto& [mid, a] : col) {
      for (const auto& [row, b] : lower.columns[mid]) acc[row] += static_cast<std::int64_t>(a) * b;
    }
    for (const auto& [row, v] : acc) {
      if (p == 0 ? v != 0 : v % p != 0) return false;
    }
  }
  return true;
}

std::size_t matrix_rank(const BoundaryMatrix& matrix, const CoefficientField& field) {
  if (field.is_rational()) {
    const RationalOps ops;
    return reduce_columns(ops, to_field(ops, matrix), matrix.rows, nullptr).size();
  }
  const PrimeOps ops{field.characteristic};
  return reduce_columns(ops, to_field(ops, matrix), matrix.rows, nullptr).size();
}

std::int64_t ReducedHomology::rank(int degree) const {
  if (degree == -1) return degree_minus_one;
  if (degree < -1 || degree >= static_cast<int>(ranks.size())) return 0;
  return ranks[static_cast<std::size_t>(degree)];
}

std::int64_t ReducedHomology::euler_characteristic() const {
  std::int64_t chi = 1 - degree_minus_one;
  for (std::size_t i = 0; i < ranks.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * ranks[i];
  return chi;
}

std::vector<ReducedHomology> reduced_homology_ranks(const SimplicialComplex& complex,
                                                    std::span<const CoefficientField> fields,
                                                    const HomologyOptions& options) {
  std::vector<ReducedHomology> out(fields.size());
  if (complex.is_void()) return out;
  const FaceTable table = face_table(complex, options.face_limit);
  CellComplex cells{&table, {}, {}};
  for (const auto& level : table.by_dim) {
    cells.index.emplace_back(level);
    cells.alive.emplace_back(level.size(), true);
  }
  if (options.simplify) simplify(cells, complex.vertex_count());

  const int top = complex.dimension();
  parallel_chunks(fields.size(), std::min<unsigned>(options.threads, fields.size()),
                  [&](std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      out[i] = ranks_for_field(fields[i], cells, top);
                    }
                  });
  return out;
}

ReducedHomology reduced_homology_ranks(const SimplicialComplex& complex,
                                       const CoefficientField& field,
                                       const HomologyOptions& options) {
  return reduced_homology_ranks(complex, std::span(&field, 1), options).front();
}

std::int64_t euler_characteristic(const SimplicialComplex& complex) {
  return f_vector(complex).euler_characteristic();
}

ConnectivityReport connectivity_evidence(const ComplexSpec& spec,
                                         std::span<const CoefficientField> fields,
                                         const ConnectivityOptions& options) {
  spec.validate();
  ConnectivityReport report;
  report.spec = spec;
  if (spec.symmetrized) {
    const auto balanced = balanced_caps(spec.row_caps);
    if (!balanced) throw InvalidInput("symmetrized caps must be (nu+1)^s nu^(n-s)");
    const auto [nu, s] = *balanced;
    report.mu = nu * spec.n + s - 2;
    report.hypothesis_ok = spec.m >= spec.n * (nu + 1) + s - 1;
  } else {
    if (!spec.unit_columns()) throw InvalidInput("connectivity bound needs unit column caps");
    report.mu = std::min(spec.m - spec.n - 1, spec.cap_total() - 2);
    report.hypothesis_ok = true;
  }
  const SimplicialComplex complex = enumerate_facets(spec, options.limits);
  report.dimension = complex.dimension();
  report.pure = complex.is_pure();
  if (!report.hypothesis_ok) return report;

  const auto ranks = reduced_homology_ranks(complex, fields, options.homology);
  bool pass = !complex.is_void() || report.mu < -1;
  bool concentrated = !complex.is_void();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const ReducedHomology& h = ranks[i];
    report.betti[fields[i].name()] = h;
    for (int d = -1; d <= report.mu; ++d) {
      if (h.rank(d) != 0) pass = false;
    }
    for (int d = -1; d < report.dimension; ++d) {
      if (h.rank(d) != 0) concentrated = false;
    }
  }
  report.verdict = pass;
  report.top_concentrated = concentrated;
  return report;
}

}  // namespace chessplex
