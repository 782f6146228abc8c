#include "chessplex/tverberg.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>

#include "chessplex/complex.hpp"
#include "chessplex/error.hpp"
#include "chessplex/parallel.hpp"

namespace chessplex {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

int rank_of(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

int affine_dimension(const std::vector<RationalPoint>& pts) {
  if (pts.empty()) return -1;
  std::vector<std::vector<Rational>> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> row(pts[i].size());
    for (std::size_t c = 0; c < row.size(); ++c) row[c] = pts[i][c] - pts[0][c];
    diffs.push_back(std::move(row));
  }
  return rank_of(std::move(diffs));
}

/// Nonempty vertex sets with at most `max_size` of `count` vertices, in
/// lexicographic order of vertex lists.
std::vector<VertexSet> faces_up_to(int count, int max_size) {
  std::vector<VertexSet> out;
  for (int size = 1; size <= std::min(count, max_size); ++size) {
    VertexSet v = singleton(size) - 1;
    const VertexSet limit = count == 64 ? 0 : singleton(count);
    while (true) {
      out.push_back(v);
      const VertexSet c = v & (~v + 1);
      const VertexSet r = v + c;
      if (r == 0 || (limit != 0 && r >= limit)) break;
      v = (((r ^ v) >> 2) / c) | r;
      if (limit != 0 && v >= limit) break;
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<RationalPoint> points_of(const PointConfiguration& config, VertexSet face) {
  std::vector<RationalPoint> pts;
  for_each_vertex(face, [&](int v) { pts.push_back(config.points[v]); });
  return pts;
}

}  // namespace

void PointConfiguration::validate() const {
  if (points.empty()) throw InvalidInput("configuration has no points");
  if (d < 1) throw InvalidInput("dimension must be positive");
  if (points.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw InvalidInput("at most 64 points are supported");
  }
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != d) throw InvalidInput("point dimension differs from d");
  }
}

std::vector<int> DimensionProfile::dim_caps() const {
  std::vector<int> caps(r, k);
  for (int i = 0; i < s; ++i) caps[i] = k + 1;
  return caps;
}

void DimensionProfile::validate() const {
  if (r < 2 || k < 0 || s < 0 || s >= r) {
    throw InvalidInput("profile needs r >= 2, k >= 0 and 0 <= s < r");
  }
}

SearchResult search_partition(const PointConfiguration& config, std::vector<int> dim_caps,
                              const SearchOptions& options) {
  config.validate();
  if (dim_caps.size() < 2) throw InvalidInput("at least two parts are needed");
  for (int c : dim_caps) {
    if (c < 0) throw InvalidInput("dimension caps must be non-negative");
  }
  std::sort(dim_caps.begin(), dim_caps.end(), std::greater<>());
  const int count = static_cast<int>(config.points.size());
  const int parts = static_cast<int>(dim_caps.size());

  std::vector<std::vector<VertexSet>> lists(parts);
  std::uint64_t bound = 1;
  for (int i = 0; i < parts; ++i) {
    lists[i] = faces_up_to(count, dim_caps[i] + 1);
    const std::uint64_t size = lists[i].size();
    bound = (size != 0 && bound > kSaturated / size) ? kSaturated : bound * size;
  }
  if (bound > options.max_lp_calls) {
    throw ResourceLimit("face-tuple bound " + std::to_string(bound) + " exceeds LP limit " +
                        std::to_string(options.max_lp_calls));
  }

  const std::size_t heads = lists[0].size();
  std::vector<std::uint64_t> calls(heads, 0);
  std::vector<std::optional<std::pair<std::vector<VertexSet>, HullIntersection>>> hits(heads);
  std::atomic<std::size_t> best{heads};

  parallel_chunks(heads, options.threads, [&](std::size_t begin, std::size_t end) {
    std::vector<VertexSet> chosen(parts);
    std::vector<std::size_t> index(parts);
    std::uint64_t* counter = nullptr;
    std::optional<std::pair<std::vector<VertexSet>, HullIntersection>>* slot = nullptr;
    std::function<bool(int, VertexSet)> dfs = [&](int part, VertexSet used) -> bool {
      if (part == parts) {
        ++*counter;
        std::vector<std::vector<RationalPoint>> sets;
        for (VertexSet f : chosen) sets.push_back(points_of(config, f));
        if (auto hit = hulls_intersect(sets)) {
          *slot = std::pair{chosen, std::move(*hit)};
          return true;
        }
        return false;
      }
      const bool tied = dim_caps[part] == dim_caps[part - 1];
      const auto& list = lists[part];
      for (std::size_t i = tied ? index[part - 1] + 1 : 0; i < list.size(); ++i) {
        if ((list[i] & used) != 0) continue;
        chosen[part] = list[i];
        index[part] = i;
        if (dfs(part + 1, used | list[i])) return true;
      }
      return false;
    };
    for (std::size_t h = begin; h < end; ++h) {
      if (h > best.load()) return;
      counter = &calls[h];
      slot = &hits[h];
      chosen[0] = lists[0][h];
      index[0] = h;
      if (dfs(1, lists[0][h])) {
        std::size_t cur = best.load();
        while (h < cur && !best.compare_exchange_weak(cur, h)) {
        }
        return;
      }
    }
  });

  SearchResult result;
  result.dim_caps = dim_caps;
  result.below_threshold = false;
  const std::size_t found = best.load();
  for (std::size_t h = 0; h < heads && h <= found; ++h) result.lp_calls += calls[h];
  if (found < heads) {
    auto& [faces, hit] = *hits[found];
    TverbergPartition p;
    bool exact = true;
    for (int i = 0; i < parts; ++i) {
      p.faces.push_back(vertices_of(faces[i]));
      result.achieved_dims.push_back(cardinality(faces[i]) - 1);
      if (cardinality(faces[i]) != dim_caps[i] + 1) exact = false;
    }
    p.witness = std::move(hit.point);
    p.weights = std::move(hit.weights);
    result.partition = std::move(p);
    result.dims_exact = exact;
  }
  return result;
}

SearchResult search_partition(const PointConfiguration& config, const DimensionProfile& profile,
                              const SearchOptions& options) {
  profile.validate();
  SearchResult result = search_partition(config, profile.dim_caps(), options);
  result.below_threshold = config.N() < profile.n_min(config.d);
  return result;
}

bool validate_partition(const PointConfiguration& config, const std::vector<int>& dim_caps,
                        const TverbergPartition& partition) {
  std::vector<int> caps = dim_caps;
  std::sort(caps.begin(), caps.end(), std::greater<>());
  if (partition.faces.size() != caps.size() || partition.weights.size() != caps.size()) {
    return false;
  }
  if (partition.witness.size() != static_cast<std::size_t>(config.d)) return false;
  VertexSet used = 0;
  for (std::size_t i = 0; i < caps.size(); ++i) {
    const auto& face = partition.faces[i];
    const auto& w = partition.weights[i];
    if (face.empty() || static_cast<int>(face.size()) > caps[i] + 1 || w.size() != face.size()) {
      return false;
    }
    Rational total = 0;
    RationalPoint point(config.d, Rational(0));
    for (std::size_t j = 0; j < face.size(); ++j) {
      const int v = face[j];
      if (v < 0 || v > config.N() || (used & singleton(v)) != 0) return false;
      used |= singleton(v);
      if (w[j] < 0) return false;
      total += w[j];
      for (int c = 0; c < config.d; ++c) point[c] += w[j] * config.points[v][c];
    }
    if (total != 1 || point != partition.witness) return false;
  }
  return true;
}

DimensionProfile reduce_to_tight(const DimensionProfile& profile, int d) {
  profile.validate();
  if (d < 1) throw InvalidInput("dimension must be positive");
  if (!profile.admissible(d)) throw InvalidInput("profile violates r k + s >= (r - 1) d");
  const int target = (profile.r - 1) * d;
  return {profile.r, target / profile.r, target % profile.r};
}

bool is_prime_power(int q) {
  if (q < 2) return false;
  for (int p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    while (q % p == 0) q /= p;
    return q == 1;
  }
  return true;
}

AdmissibilityReport check_admissible(const AdmissibleTuple& t) {
  const int r = static_cast<int>(t.dims.size());
  if (r < 2 || t.d < 1) throw InvalidInput("tuple needs r >= 2 and d >= 1");
  AdmissibilityReport report;
  int deficit = 0;
  bool ranges = true;
  for (int di : t.dims) {
    if (di < t.d / 2 || di > t.d) ranges = false;
    deficit += t.d - di;
  }
  report.admissible = ranges && deficit <= t.d;
  const auto [lo, hi] = std::minmax_element(t.dims.begin(), t.dims.end());
  report.balanced = *hi - *lo <= 1;
  report.r_prime_power = is_prime_power(r);
  report.N_used = (r - 1) * (t.d + 2);
  if (report.balanced) {
    const int k = *lo;
    const int s = *hi == k ? 0 : static_cast<int>(std::count(t.dims.begin(), t.dims.end(), k + 1));
    if (k >= 0) {
      report.profile = DimensionProfile{r, k, s};
      report.cap_inequality = report.profile->admissible(t.d);
    }
  }
  report.tverberg_prescribable_by_thm72 =
      report.admissible && report.balanced && report.r_prime_power && report.cap_inequality;
  return report;
}

bool in_general_position(const PointConfiguration& config) {
  const int count = static_cast<int>(config.points.size());
  const int size = std::min(config.d + 1, count);
  if (size <= 1) return true;
  std::vector<int> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    std::vector<RationalPoint> pts;
    for (int i : pick) pts.push_back(config.points[i]);
    if (affine_dimension(pts) != size - 1) return false;
    int pos = size - 1;
    while (pos >= 0 && pick[pos] == count - size + pos) --pos;
    if (pos < 0) return true;
    ++pick[pos];
    for (int q = pos + 1; q < size; ++q) pick[q] = pick[q - 1] + 1;
  }
}

PointConfiguration random_general_position(int d, int point_count, std::mt19937_64& rng,
                                           int bound) {
  if (d < 1 || point_count < 1 || point_count > kMaxVertices || bound < 1) {
    throw InvalidInput("invalid random configuration parameters");
  }
  std::uniform_int_distribution<int> coord(-bound, bound);
  while (true) {
    PointConfiguration config{d, {}};
    for (int i = 0; i < point_count; ++i) {
      RationalPoint p(d);
      for (auto& x : p) x = coord(rng);
      config.points.push_back(std::move(p));
    }
    if (in_general_position(config)) return config;
  }
}

RationalPoint AffineMap::apply(const RationalPoint& p) const {
  RationalPoint out = translation;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) out[i] += matrix[i][j] * p[j];
  }
  return out;
}

PointConfiguration AffineMap::apply(const PointConfiguration& c) const {
  PointConfiguration out{c.d, {}};
  for (const auto& p : c.points) out.points.push_back(apply(p));
  return out;
}

AffineMap random_invertible_affine_map(int d, std::mt19937_64& rng, int bound) {
  if (d < 1 || bound < 1) throw InvalidInput("invalid affine map parameters");
  std::uniform_int_distribution<int> entry(-bound, bound);
  while (true) {
    AffineMap map;
    map.matrix.assign(d, std::vector<Rational>(d));
    for (auto& row : map.matrix) {
      for (auto& x : row) x = entry(rng);
    }
    map.translation.resize(d);
    for (auto& x : map.translation) x = Rational(entry(rng), 1 + (entry(rng) + bound) % 7);
    for (auto& x : map.translation) x.canonicalize();
    if (rank_of(map.matrix) == d) return map;
  }
}

CodimensionReport codimension_necessity_check(int d, int N, const DimensionProfile& profile,
                                              int trials, std::uint64_t seed,
                                              const SearchOptions& options) {
  profile.validate();
  if (profile.admissible(d)) {
    throw InvalidInput("profile satisfies r k + s >= (r - 1) d; nothing to refute");
  }
  if (trials < 0) throw InvalidInput("trials must be non-negative");
  std::mt19937_64 rng(seed);
  CodimensionReport report;
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const PointConfiguration config = random_general_position(d, N + 1, rng);
    const SearchResult r = search_partition(config, profile, options);
    report.lp_calls += r.lp_calls;
    if (r.partition) {
      ++report.found;
    } else {
      ++report.exhausted;
    }
  }
  return report;
}

}  // namespace chessplex
