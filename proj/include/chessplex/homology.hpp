#pragma once

// Reduced simplicial homology over prime fields and the rationals, and the
// connectivity evidence built on it.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chessplex/complex.hpp"

namespace chessplex {

/// Q or the prime field F_p.
struct CoefficientField {
  std::uint32_t characteristic = 0;

  static CoefficientField rationals() { return {0}; }
  /// Throws InvalidInput unless p is a prime below 2^31.
  static CoefficientField prime(std::uint32_t p);
  /// Accepts "Q" and "F<p>", e.g. "F2".
  static CoefficientField parse(const std::string& name);

  bool is_rational() const { return characteristic == 0; }
  std::string name() const;
  auto operator<=>(const CoefficientField&) const = default;
};

/// Default field list: Q, F2, F3, F5.
std::vector<CoefficientField> default_fields();

/// Integer boundary matrix of the augmented chain complex. Rows index the
/// (degree - 1)-faces and columns the degree-faces of a FaceTable; degree 0
/// is the augmentation onto the empty face. Entries are +-1.
struct BoundaryMatrix {
  int degree = 0;
  std::size_t rows = 0;
  /// columns[j] lists (row, entry) pairs in increasing row order.
  std::vector<std::vector<std::pair<std::uint32_t, int>>> columns;
};

BoundaryMatrix boundary_matrix(const FaceTable& table, int degree);

/// True iff lower * upper vanishes over the field (degrees must be
/// consecutive: lower.degree + 1 == upper.degree).
bool composition_vanishes(const BoundaryMatrix& lower, const BoundaryMatrix& upper,
                          const CoefficientField& field);

std::size_t matrix_rank(const BoundaryMatrix& matrix, const CoefficientField& field);

struct HomologyOptions {
  /// Remove reduction and coreduction pairs before elimination; ranks over
  /// every field are unchanged.
  bool simplify = true;
  std::uint64_t face_limit = 20'000'000;
  /// Fields are reduced concurrently; each elimination is sequential.
  unsigned threads = 1;
};

struct ReducedHomology {
  /// Rank in degree -1: 1 for the complex {empty face}, else 0.
  std::int64_t degree_minus_one = 0;
  /// ranks[i] is the reduced rank in degree i, 0 <= i <= dim.
  std::vector<std::int64_t> ranks;

  /// Rank in degree i >= -1 (0 past the top dimension).
  std::int64_t rank(int degree) const;
  /// 1 + sum (-1)^i rank_i, including degree -1.
  std::int64_t euler_characteristic() const;
  bool operator==(const ReducedHomology&) const = default;
};

/// Reduced ranks for each field; the collapse is shared across fields. The
/// void complex yields empty ranks. Throws ResourceLimit past the face limit.
std::vector<ReducedHomology> reduced_homology_ranks(const SimplicialComplex& complex,
                                                    std::span<const CoefficientField> fields,
                                                    const HomologyOptions& options = {});
ReducedHomology reduced_homology_ranks(const SimplicialComplex& complex,
                                       const CoefficientField& field,
                                       const HomologyOptions& options = {});

/// Alternating face count sum (the empty face excluded).
std::int64_t euler_characteristic(const SimplicialComplex& complex);

/// Homology evidence for the connectivity bound of a chessboard complex or
/// of a balanced symmetrization. Vanishing reduced homology through mu is
/// evidence for mu-connectivity, not a proof of it.
struct ConnectivityReport {
  ComplexSpec spec;
  int mu = 0;
  bool hypothesis_ok = true;
  int dimension = 0;
  bool pure = true;
  std::map<std::string, ReducedHomology> betti;
  /// nullopt when the working hypothesis fails.
  std::optional<bool> verdict;
  /// Every field's reduced homology vanishes below the top dimension.
  bool top_concentrated = false;
};

struct ConnectivityOptions {
  HomologyOptions homology;
  EnumerationLimits limits;
};

/// mu = min(m - n - 1, sum k - 2) for unit-column chessboard specs and
/// mu = nu n + s - 2 for balanced symmetrizations, whose working hypothesis
/// is m >= n(nu + 1) + s - 1. Homology is skipped when the hypothesis fails.
ConnectivityReport connectivity_evidence(const ComplexSpec& spec,
                                         std::span<const CoefficientField> fields,
                                         const ConnectivityOptions& options = {});

}  // namespace chessplex
