#pragma once

// Epsilon graphs of labeled partitions, the perfect-matching membership test
// for symmetrized deleted joins, and collective unavoidability.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "chessplex/complex.hpp"

namespace chessplex {

/// Bipartite graph on blocks (rows) and complexes (columns), 0-based.
struct EpsilonGraph {
  int n = 0;
  std::vector<std::vector<bool>> adjacency;

  bool edge(int block, int complex) const { return adjacency.at(block).at(complex); }
  bool operator==(const EpsilonGraph&) const = default;
};

/// Edge (i, j) iff A_i is a face of K_j. All complexes must live on the same
/// vertex set [m] and a must use only elements of [m].
EpsilonGraph epsilon_graph(const LabeledPartition& a, std::span<const SimplicialComplex> family);
/// Edge (i, j) iff A_i is not a face of K_j.
EpsilonGraph non_epsilon_graph(const LabeledPartition& a,
                               std::span<const SimplicialComplex> family);

struct MatchingResult {
  bool perfect = false;
  /// partner[i] is the column matched to row i (size n when perfect).
  std::vector<int> partner;
  /// Hall violator when not perfect: rows S with |N(S)| < |S|.
  std::vector<int> violator_rows;
  std::vector<int> violator_neighborhood;
};

MatchingResult has_perfect_matching(const EpsilonGraph& graph);

bool in_symmetrized_deleted_join(const LabeledPartition& a,
                                 std::span<const SimplicialComplex> family);

/// Direct definition: some permutation pi has A_i in K_pi(i) for all i.
bool in_symmetrized_deleted_join_by_permutations(const LabeledPartition& a,
                                                 std::span<const SimplicialComplex> family);

struct UnavoidabilityLimits {
  std::uint64_t max_partitions = 16'777'216;  // 4^12
};

struct UnavoidabilityResult {
  bool unavoidable = true;
  /// First ordered partition (B_1, ..., B_n) of [m] with B_i not in K_i for
  /// every i, in enumeration order.
  std::optional<LabeledPartition> violating;
  std::uint64_t partitions_checked = 0;
};

/// Enumerates every ordered partition of [m] into n possibly empty blocks.
/// The empty block is a face of every nonvoid complex. Throws ResourceLimit
/// when n^m exceeds the limit.
UnavoidabilityResult is_collectively_unavoidable(std::span<const SimplicialComplex> family,
                                                 const UnavoidabilityLimits& limits = {},
                                                 unsigned threads = 1);

/// The symmetrized deleted join of the family as a complex on the m x n
/// board: element e in block i is the cell (e, i). Found by testing all
/// (n + 1)^m labeled partitions; throws ResourceLimit past the limit.
SimplicialComplex symmetrized_deleted_join(std::span<const SimplicialComplex> family,
                                           std::uint64_t max_partitions = 10'000'000);

}  // namespace chessplex
