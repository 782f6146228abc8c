#include "chessplex/matching.hpp"

#include <algorithm>
#include <numeric>

#include "chessplex/error.hpp"
#include "chessplex/parallel.hpp"

namespace chessplex {

namespace {

int common_vertex_count(std::span<const SimplicialComplex> family) {
  if (family.empty()) return 0;
  const int m = family.front().vertex_count();
  for (const auto& k : family) {
    if (k.vertex_count() != m) throw InvalidInput("family complexes use different vertex sets");
  }
  return m;
}

EpsilonGraph membership_graph(const LabeledPartition& a,
                              std::span<const SimplicialComplex> family, bool member) {
  const int n = a.block_count();
  if (static_cast<std::size_t>(n) != family.size()) {
    throw InvalidInput("family size must equal the number of blocks");
  }
  const int m = common_vertex_count(family);
  if (a.max_element() > m) throw InvalidInput("block mentions a vertex outside [m]");
  EpsilonGraph g{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  for (int i = 0; i < n; ++i) {
    const VertexSet block = a.block_set(i);
    for (int j = 0; j < n; ++j) g.adjacency[i][j] = family[j].contains(block) == member;
  }
  return g;
}

bool augment(const EpsilonGraph& g, int row, std::vector<int>& col_owner,
             std::vector<bool>& seen) {
  for (int c = 0; c < g.n; ++c) {
    if (!g.adjacency[row][c] || seen[c]) continue;
    seen[c] = true;
    if (col_owner[c] < 0 || augment(g, col_owner[c], col_owner, seen)) {
      col_owner[c] = row;
      return true;
    }
  }
  return false;
}

}  // namespace

EpsilonGraph epsilon_graph(const LabeledPartition& a, std::span<const SimplicialComplex> family) {
  return membership_graph(a, family, true);
}

EpsilonGraph non_epsilon_graph(const LabeledPartition& a,
                               std::span<const SimplicialComplex> family) {
  return membership_graph(a, family, false);
}

MatchingResult has_perfect_matching(const EpsilonGraph& graph) {
  const int n = graph.n;
  std::vector<int> col_owner(n, -1);
  int unmatched = -1;
  for (int r = 0; r < n; ++r) {
    std::vector<bool> seen(n, false);
    if (!augment(graph, r, col_owner, seen) && unmatched < 0) unmatched = r;
  }
  MatchingResult result;
  if (unmatched < 0) {
    result.perfect = true;
    result.partner.assign(n, -1);
    for (int c = 0; c < n; ++c) result.partner[col_owner[c]] = c;
    return result;
  }
  // Rows reachable from an unmatched row by alternating paths; every
  // column they see is matched back into the set, so |N(S)| = |S| - 1.
  std::vector<bool> in_rows(n, false), in_cols(n, false);
  std::vector<int> stack{unmatched};
  in_rows[unmatched] = true;
  while (!stack.empty()) {
    const int r = stack.back();
    stack.pop_back();
    for (int c = 0; c < n; ++c) {
      if (!graph.adjacency[r][c] || in_cols[c]) continue;
      in_cols[c] = true;
      const int owner = col_owner[c];
      if (owner >= 0 && !in_rows[owner]) {
        in_rows[owner] = true;
        stack.push_back(owner);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (in_rows[i]) result.violator_rows.push_back(i);
    if (in_cols[i]) result.violator_neighborhood.push_back(i);
  }
  return result;
}

bool in_symmetrized_deleted_join(const LabeledPartition& a,
                                 std::span<const SimplicialComplex> family) {
  return has_perfect_matching(epsilon_graph(a, family)).perfect;
}

bool in_symmetrized_deleted_join_by_permutations(const LabeledPartition& a,
                                                 std::span<const SimplicialComplex> family) {
  std::vector<SimplicialComplex> permuted(family.begin(), family.end());
  std::vector<int> pi(family.size());
  std::iota(pi.begin(), pi.end(), 0);
  do {
    for (std::size_t i = 0; i < pi.size(); ++i) permuted[i] = family[pi[i]];
    if (deleted_join_membership(permuted, a)) return true;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

UnavoidabilityResult is_collectively_unavoidable(std::span<const SimplicialComplex> family,
                                                 const UnavoidabilityLimits& limits,
                                                 unsigned threads) {
  const int n = static_cast<int>(family.size());
  const int m = common_vertex_count(family);
  if (n == 0) throw InvalidInput("family must not be empty");
  std::uint64_t total = 1;
  for (int e = 0; e < m; ++e) {
    if (total > limits.max_partitions / static_cast<std::uint64_t>(n)) {
      throw ResourceLimit("partition enumeration exceeds limit " +
                          std::to_string(limits.max_partitions));
    }
    total *= static_cast<std::uint64_t>(n);
  }

  // Element e + 1 goes to block digit[e]; element 1 is the most significant
  // digit, so chunks over it keep enumeration order.
  auto violates = [&](std::uint64_t code) {
    std::vector<VertexSet> blocks(n, 0);
    for (int e = m - 1; e >= 0; --e) {
      blocks[code % n] |= singleton(e);
      code /= n;
    }
    for (int i = 0; i < n; ++i) {
      if (family[i].contains(blocks[i])) return false;
    }
    return true;
  };
  const std::uint64_t heads = m == 0 ? 1 : static_cast<std::uint64_t>(n);
  const std::uint64_t per_head = total / heads;
  std::vector<std::optional<std::uint64_t>> found(heads);
  std::vector<std::uint64_t> checked(heads, 0);
  parallel_chunks(heads, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t h = begin; h < end; ++h) {
      for (std::uint64_t c = h * per_head; c < (h + 1) * per_head; ++c) {
        ++checked[h];
        if (violates(c)) {
          found[h] = c;
          break;
        }
      }
    }
  });
  UnavoidabilityResult result;
  for (std::uint64_t h = 0; h < heads; ++h) {
    result.partitions_checked += checked[h];
    if (!found[h]) continue;
    LabeledPartition p;
    p.blocks.resize(n);
    std::uint64_t code = *found[h];
    for (int e = m; e >= 1; --e) {
      p.blocks[code % n].push_back(e);
      code /= n;
    }
    p.normalize();
    result.unavoidable = false;
    result.violating = std::move(p);
    break;
  }
  return result;
}

SimplicialComplex symmetrized_deleted_join(std::span<const SimplicialComplex> family,
                                           std::uint64_t max_partitions) {
  const int n = static_cast<int>(family.size());
  const int m = common_vertex_count(family);
  if (n == 0) throw InvalidInput("family must not be empty");
  const BoardShape board{m, n};
  if (board.vertex_count() > kMaxVertices) throw InvalidInput("board has more than 64 cells");
  std::uint64_t total = 1;
  for (int e = 0; e < m; ++e) {
    if (total > max_partitions / static_cast<std::uint64_t>(n + 1)) {
      throw ResourceLimit("labeled partition enumeration exceeds limit " +
                          std::to_string(max_partitions));
    }
    total *= static_cast<std::uint64_t>(n + 1);
  }
  std::vector<VertexSet> members;
  LabeledPartition a;
  for (std::uint64_t code = 0; code < total; ++code) {
    a.blocks.assign(n, {});
    std::uint64_t c = code;
    for (int e = 1; e <= m; ++e) {
      const int slot = static_cast<int>(c % (n + 1));
      c /= n + 1;
      if (slot < n) a.blocks[slot].push_back(e);
    }
    if (in_symmetrized_deleted_join(a, family)) members.push_back(a.to_placement(m));
  }
  return SimplicialComplex::from_generators(board.vertex_count(), std::move(members), board);
}

}  // namespace chessplex
