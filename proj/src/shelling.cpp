#include "chessplex/shelling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "chessplex/error.hpp"
#include "chessplex/parallel.hpp"

namespace chessplex {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// Facet masks sorted numerically with their ids, for exact lookups.
class FacetLookup {
 public:
  explicit FacetLookup(const std::vector<VertexSet>& facets) {
    entries_.reserve(facets.size());
    for (std::size_t id = 0; id < facets.size(); ++id) entries_.emplace_back(facets[id], id);
    std::sort(entries_.begin(), entries_.end());
  }
  std::size_t find(VertexSet face) const {
    const auto it = std::lower_bound(entries_.begin(), entries_.end(),
                                     std::pair{face, std::size_t{0}});
    return (it != entries_.end() && it->first == face) ? it->second : kNone;
  }

 private:
  std::vector<std::pair<VertexSet, std::size_t>> entries_;
};

struct RowSpec {
  int row;
  int cap;
};

void recursive_order(const std::vector<int>& cols, std::vector<RowSpec> rows, int n,
                     VertexSet prefix, std::vector<VertexSet>& out) {
  std::erase_if(rows, [](const RowSpec& r) { return r.cap == 0; });
  if (rows.empty()) {
    out.push_back(prefix);
    return;
  }
  if (cols.empty()) return;
  const int last = cols.back();
  const std::vector<int> rest(cols.begin(), cols.end() - 1);
  auto with_last_in = [&](std::size_t i) {
    std::vector<RowSpec> reduced = rows;
    --reduced[i].cap;
    recursive_order(rest, reduced, n, prefix | singleton(last * n + rows[i].row), out);
  };

  // Last column in the first row, then last column empty grouped by the
  // first row's columns, then last column in each later row.
  with_last_in(0);

  const int k = rows.front().cap;
  const std::vector<RowSpec> tail(rows.begin() + 1, rows.end());
  if (static_cast<int>(rest.size()) >= k) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      VertexSet cells = prefix;
      std::vector<int> remaining;
      remaining.reserve(rest.size() - k);
      std::size_t t = 0;
      for (std::size_t idx = 0; idx < rest.size(); ++idx) {
        if (t < pick.size() && pick[t] == static_cast<int>(idx)) {
          cells |= singleton(rest[idx] * n + rows.front().row);
          ++t;
        } else {
          remaining.push_back(rest[idx]);
        }
      }
      recursive_order(remaining, tail, n, cells, out);
      int pos = k - 1;
      while (pos >= 0 && pick[pos] == static_cast<int>(rest.size()) - k + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int q = pos + 1; q < k; ++q) pick[q] = pick[q - 1] + 1;
    }
  }

  for (std::size_t i = 1; i < rows.size(); ++i) with_last_in(i);
}

}  // namespace

ShellingCertificate::ShellingCertificate(const SimplicialComplex& complex, FacetOrder order,
                                         std::vector<std::vector<Ridge>> ridges)
    : facets_(complex.facets()), order_(std::move(order)), ridges_(std::move(ridges)) {
  position_.assign(facets_.size(), kNone);
  for (std::size_t p = 0; p < order_.facet_ids.size(); ++p) position_[order_.facet_ids[p]] = p;
}

std::uint64_t ShellingCertificate::pair_count() const {
  const std::uint64_t n = order_.facet_ids.size();
  return n < 2 ? 0 : n * (n - 1) / 2;
}

std::optional<ShellingCertificate::Witness> ShellingCertificate::witness(
    std::size_t f_prime_id, std::size_t f_id) const {
  const std::size_t later = position_.at(f_prime_id);
  if (position_.at(f_id) >= later) return std::nullopt;
  const VertexSet f = facets_[f_id];
  for (const Ridge& r : ridges_[later]) {
    if ((f & singleton(r.vertex)) == 0) return Witness{r.witness_id, r.vertex};
  }
  return std::nullopt;
}

ShellingVerdict verify_shelling(const SimplicialComplex& complex, const FacetOrder& order,
                                const ShellingOptions& options) {
  const auto& facets = complex.facets();
  const std::size_t count = facets.size();
  if (!complex.is_pure()) throw InvalidInput("shelling verification needs a pure complex");
  if (order.facet_ids.size() != count) throw InvalidInput("order is not a permutation of the facets");
  std::vector<std::size_t> position(count, kNone);
  for (std::size_t p = 0; p < count; ++p) {
    const std::size_t id = order.facet_ids[p];
    if (id >= count || position[id] != kNone) {
      throw InvalidInput("order is not a permutation of the facets");
    }
    position[id] = p;
  }
  using Ridge = ShellingCertificate::Ridge;
  std::vector<std::vector<Ridge>> ridges(count);
  if (count == 0) return ShellingCertificate(complex, order, std::move(ridges));

  const FacetLookup lookup(facets);
  const int vertex_count = complex.vertex_count();

  // Restriction sets: ridge F' \ {v} is covered by an earlier facet
  // F' \ {v} + {w}; all such facets are found by trying every w.
  std::vector<VertexSet> restriction(count, 0);
  parallel_chunks(count, options.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = std::max<std::size_t>(begin, 1); p < end; ++p) {
      const VertexSet f_prime = facets[order.facet_ids[p]];
      for_each_vertex(f_prime, [&](int v) {
        const VertexSet ridge = f_prime & ~singleton(v);
        std::size_t best = kNone;
        for (int w = 0; w < vertex_count; ++w) {
          if ((f_prime & singleton(w)) != 0) continue;
          const std::size_t id = lookup.find(ridge | singleton(w));
          if (id != kNone && position[id] < p && (best == kNone || position[id] < position[best])) {
            best = id;
          }
        }
        if (best != kNone) {
          ridges[p].push_back({v, best});
          restriction[p] |= singleton(v);
        }
      });
    }
  });

  // The order shells iff R(F') is not contained in any earlier facet.
  std::vector<std::size_t> first_container(count, kNone);
  const int facet_size = cardinality(facets.front());
  const double subset_cost = static_cast<double>(count) * std::ldexp(1.0, facet_size) * 8.0;
  const double pair_cost = 0.5 * static_cast<double>(count) * static_cast<double>(count);
  if (facet_size <= 30 && subset_cost < pair_cost) {
    std::vector<std::pair<VertexSet, std::size_t>> wanted;
    wanted.reserve(count);
    for (std::size_t p = 1; p < count; ++p) wanted.emplace_back(restriction[p], p);
    std::sort(wanted.begin(), wanted.end());
    std::vector<VertexSet> keys;
    for (const auto& [mask, p] : wanted) {
      if (keys.empty() || keys.back() != mask) keys.push_back(mask);
    }
    std::vector<std::size_t> earliest(keys.size(), kNone);
    for (std::size_t p = 0; p < count; ++p) {
      const VertexSet f = facets[order.facet_ids[p]];
      // Every subset of f, including f and the empty set.
      VertexSet sub = f;
      while (true) {
        const auto it = std::lower_bound(keys.begin(), keys.end(), sub);
        if (it != keys.end() && *it == sub) {
          auto& e = earliest[static_cast<std::size_t>(it - keys.begin())];
          if (e == kNone) e = p;
        }
        if (sub == 0) break;
        sub = (sub - 1) & f;
      }
    }
    for (std::size_t p = 1; p < count; ++p) {
      const auto it = std::lower_bound(keys.begin(), keys.end(), restriction[p]);
      first_container[p] = earliest[static_cast<std::size_t>(it - keys.begin())];
    }
  } else {
    for (std::size_t p = 1; p < count; ++p) {
      for (std::size_t q = 0; q <= p; ++q) {
        if (is_subset(restriction[p], facets[order.facet_ids[q]])) {
          first_container[p] = q;
          break;
        }
      }
    }
  }
  for (std::size_t p = 1; p < count; ++p) {
    if (first_container[p] < p) {
      return ShellingRefutation{order.facet_ids[p], order.facet_ids[first_container[p]]};
    }
  }
  return ShellingCertificate(complex, order, std::move(ridges));
}

Precedence paper_precedes(const ComplexSpec& spec, const LabeledPartition& f,
                          const LabeledPartition& f_prime) {
  std::vector<int> caps = spec.row_caps;
  std::sort(caps.begin(), caps.end());
  const std::vector<int> a = f.sizes();
  const std::vector<int> b = f_prime.sizes();
  for (const auto* sizes : {&a, &b}) {
    std::vector<int> sorted = *sizes;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != caps) throw InvalidInput("block sizes do not match the cap multiset");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? Precedence::before : Precedence::after;
  }
  return Precedence::same_block;
}

std::vector<VertexSet> constituent_sequence(int m, std::span<const int> sizes) {
  const int n = static_cast<int>(sizes.size());
  if (m < 0 || m * n > kMaxVertices) throw InvalidInput("board has more than 64 cells");
  std::vector<int> cols(m);
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<RowSpec> rows;
  for (int i = 0; i < n; ++i) {
    if (sizes[i] < 0) throw InvalidInput("row sizes must be non-negative");
    rows.push_back({i, sizes[i]});
  }
  std::vector<VertexSet> out;
  recursive_order(cols, rows, n, 0, out);
  return out;
}

FacetOrder constituent_order(int m, std::span<const int> sizes,
                             std::span<const LabeledPartition> facets,
                             const ShellingOptions& options) {
  const std::vector<int> wanted(sizes.begin(), sizes.end());
  const BoardShape board{m, static_cast<int>(sizes.size())};
  std::vector<VertexSet> placements;
  placements.reserve(facets.size());
  for (const auto& a : facets) {
    if (a.sizes() != wanted) throw InvalidInput("facet size vector differs from the block sizes");
    placements.push_back(a.to_placement(m));
  }
  const FacetLookup lookup(placements);
  FacetOrder order;
  for (VertexSet p : constituent_sequence(m, sizes)) {
    const std::size_t id = lookup.find(p);
    if (id != kNone) order.facet_ids.push_back(id);
  }
  if (order.facet_ids.size() != facets.size()) {
    throw InvalidInput("facets are not all facets of the constituent complex");
  }
  for (std::size_t id : order.facet_ids) order.labeled.push_back(facets[id]);

  const SimplicialComplex complex(board.vertex_count(), placements, board);
  const ShellingVerdict verdict = verify_shelling(complex, order, options);
  if (const auto* refuted = std::get_if<ShellingRefutation>(&verdict)) {
    throw CertificationFailure("constituent order refuted at facet " +
                               std::to_string(refuted->f_prime_id) + " against facet " +
                               std::to_string(refuted->f_id));
  }
  return order;
}

FacetOrder paper_shelling_order(const ComplexSpec& spec, const ShellingOptions& options) {
  spec.validate();
  if (!spec.symmetrized) throw InvalidInput("shelling order needs a symmetrized spec");
  const auto balanced = balanced_caps(spec.row_caps);
  if (!balanced) throw InvalidInput("caps must be (nu+1)^s nu^(n-s)");
  const auto [nu, s] = *balanced;
  if (spec.m < spec.n * (nu + 1) + s - 1) {
    throw InvalidInput("shelling order needs m >= n(nu+1) + s - 1");
  }
  const SimplicialComplex complex = enumerate_facets(spec);
  const BoardShape board = spec.board();
  const auto& facets = complex.facets();

  FacetOrder order;
  std::size_t begin = 0;
  while (begin < facets.size()) {
    const std::vector<int> sizes = board.row_sizes(facets[begin]);
    std::size_t end = begin;
    std::vector<LabeledPartition> block;
    while (end < facets.size() && board.row_sizes(facets[end]) == sizes) {
      block.push_back(LabeledPartition::from_placement(facets[end], board));
      ++end;
    }
    const FacetOrder inner = constituent_order(spec.m, sizes, block, options);
    for (std::size_t k = 0; k < inner.facet_ids.size(); ++k) {
      order.facet_ids.push_back(begin + inner.facet_ids[k]);
      order.labeled.push_back(inner.labeled[k]);
    }
    begin = end;
  }
  return order;
}

std::pair<LabeledPartition, Cell> case_a_witness(const LabeledPartition& f,
                                                 const LabeledPartition& f_prime) {
  if (f.block_count() != f_prime.block_count()) throw InvalidInput("block counts differ");
  const std::vector<int> a = f.sizes();
  const std::vector<int> b = f_prime.sizes();
  std::size_t pivot = 0;
  while (pivot < a.size() && a[pivot] == b[pivot]) ++pivot;
  if (pivot == a.size() || a[pivot] < b[pivot]) {
    throw InvalidInput("size-vector precedence does not apply to this pair");
  }
  for (std::size_t j = pivot + 1; j < a.size(); ++j) {
    if (b[j] <= a[j]) continue;
    const auto& bj = f_prime.blocks[j];
    const auto& aj = f.blocks[j];
    for (int x : bj) {
      if (std::find(aj.begin(), aj.end(), x) != aj.end()) continue;
      LabeledPartition moved = f_prime;
      std::erase(moved.blocks[j], x);
      moved.blocks[pivot].push_back(x);
      std::sort(moved.blocks[pivot].begin(), moved.blocks[pivot].end());
      return {moved, Cell{x, static_cast<int>(j) + 1}};
    }
  }
  throw InvalidInput("no block gains size after the pivot");
}

}  // namespace chessplex
