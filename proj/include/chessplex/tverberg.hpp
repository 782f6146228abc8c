#pragma once

// Constrained Tverberg partitions of affine maps of a simplex, decided
// exactly, plus the parameter logic around balanced dimension caps.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "chessplex/lp.hpp"

namespace chessplex {

/// N + 1 points in R^d: the images of the vertices of the N-simplex.
struct PointConfiguration {
  int d = 0;
  std::vector<RationalPoint> points;

  int N() const { return static_cast<int>(points.size()) - 1; }
  /// Throws InvalidInput on a dimension mismatch or an empty configuration.
  void validate() const;
};

/// r parts, s of them with dimension cap k + 1 and r - s with cap k.
struct DimensionProfile {
  int r = 2;
  int k = 0;
  int s = 0;

  int nu() const { return k + 1; }
  /// (r - 1)(d + 2)
  int n_min(int d) const { return (r - 1) * (d + 2); }
  bool admissible(int d) const { return r * k + s >= (r - 1) * d; }
  bool tight(int d) const { return r * k + s == (r - 1) * d; }
  /// Caps in part order: k + 1 for the first s parts, then k.
  std::vector<int> dim_caps() const;
  /// Throws InvalidInput unless r >= 2, k >= 0 and 0 <= s < r.
  void validate() const;
};

struct TverbergPartition {
  /// 0-based vertex indices, one face per part in cap order.
  std::vector<std::vector<int>> faces;
  RationalPoint witness;
  std::vector<std::vector<Rational>> weights;
};

struct SearchOptions {
  std::uint64_t max_lp_calls = 100'000'000;
  unsigned threads = 1;
};

struct SearchResult {
  std::optional<TverbergPartition> partition;
  std::vector<int> dim_caps;
  std::uint64_t lp_calls = 0;
  /// N < (r - 1)(d + 2): the theorem does not apply.
  bool below_threshold = false;
  /// Affine dimension of each found face's image.
  std::vector<int> achieved_dims;
  /// Each face has exactly cap + 1 vertices.
  bool dims_exact = false;
};

/// Enumerates r-tuples of pairwise disjoint faces with |face_i| <= cap_i + 1,
/// parts of equal cap taken in increasing face order, faces in
/// lexicographic order of their vertex lists; returns the first tuple whose
/// hulls meet. Throws ResourceLimit when the tuple bound exceeds
/// max_lp_calls.
SearchResult search_partition(const PointConfiguration& config, std::vector<int> dim_caps,
                              const SearchOptions& options = {});
SearchResult search_partition(const PointConfiguration& config, const DimensionProfile& profile,
                              const SearchOptions& options = {});

/// Exact check: disjoint faces within caps, weights non-negative summing to
/// one, every part reproducing the witness.
bool validate_partition(const PointConfiguration& config, const std::vector<int>& dim_caps,
                        const TverbergPartition& partition);

/// The tight (k', s') with r k' + s' = (r - 1) d and 0 <= s' < r. Throws
/// InvalidInput when r k + s < (r - 1) d.
DimensionProfile reduce_to_tight(const DimensionProfile& profile, int d);

struct AdmissibleTuple {
  int d = 0;
  std::vector<int> dims;
};

struct AdmissibilityReport {
  bool admissible = false;
  bool balanced = false;
  bool r_prime_power = false;
  bool tverberg_prescribable_by_thm72 = false;
  /// Extracted from balanced tuples: k = min dims, s = #(dims == k + 1).
  std::optional<DimensionProfile> profile;
  /// r k + s >= (r - 1) d for the extracted profile.
  bool cap_inequality = false;
  int N_used = 0;
};

AdmissibilityReport check_admissible(const AdmissibleTuple& t);

bool is_prime_power(int q);

/// Integer coordinates uniform in [-bound, bound], resampled until every
/// d + 1 of the points are affinely independent.
PointConfiguration random_general_position(int d, int point_count, std::mt19937_64& rng,
                                           int bound = 1000);

/// Every min(d + 1, |points|) points are affinely independent.
bool in_general_position(const PointConfiguration& config);

struct AffineMap {
  std::vector<std::vector<Rational>> matrix;
  RationalPoint translation;

  RationalPoint apply(const RationalPoint& p) const;
  PointConfiguration apply(const PointConfiguration& c) const;
};

/// Integer matrix entries in [-bound, bound], resampled until invertible.
AffineMap random_invertible_affine_map(int d, std::mt19937_64& rng, int bound = 5);

struct CodimensionReport {
  int trials = 0;
  int exhausted = 0;
  int found = 0;
  std::uint64_t lp_calls = 0;
};

/// Runs the search on `trials` random configurations of N + 1 points when
/// r k + s < (r - 1) d. Throws InvalidInput for admissible profiles.
CodimensionReport codimension_necessity_check(int d, int N, const DimensionProfile& profile,
                                              int trials, std::uint64_t seed,
                                              const SearchOptions& options = {});

}  // namespace chessplex
