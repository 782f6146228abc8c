#pragma once

// Shelling orders of symmetric multiple chessboard complexes and an exact
// shelling verifier for arbitrary pure complexes.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "chessplex/complex.hpp"

namespace chessplex {

/// A permutation of a complex's facets; facet_ids index complex.facets().
struct FacetOrder {
  std::vector<std::size_t> facet_ids;
  /// Same facets as labeled partitions, in order (empty for non-board
  /// complexes).
  std::vector<LabeledPartition> labeled;
};

/// For every facet F' after the first, the restriction set R(F'): vertices
/// v of F' whose ridge F' \ {v} lies in an earlier facet, each with the
/// earliest such facet. The order is a shelling iff no earlier facet
/// contains R(F'); given that, every pair (F, F') with F earlier is
/// witnessed by any v in R(F') \ F.
class ShellingCertificate {
 public:
  struct Ridge {
    int vertex = -1;
    std::size_t witness_id = 0;
  };
  struct Witness {
    std::size_t witness_id = 0;
    int vertex = -1;
  };

  ShellingCertificate(const SimplicialComplex& complex, FacetOrder order,
                      std::vector<std::vector<Ridge>> ridges);

  const FacetOrder& order() const { return order_; }
  /// Ridges of the facet at `position` in the order.
  const std::vector<Ridge>& ridges(std::size_t position) const { return ridges_.at(position); }
  std::size_t position_of(std::size_t facet_id) const { return position_.at(facet_id); }
  /// Number of (F', F) pairs with F strictly before F'.
  std::uint64_t pair_count() const;
  /// Witness (F'', v) for facet ids F' and F with F earlier; nullopt when F
  /// does not precede F'.
  std::optional<Witness> witness(std::size_t f_prime_id, std::size_t f_id) const;

 private:
  std::vector<VertexSet> facets_;
  FacetOrder order_;
  std::vector<std::vector<Ridge>> ridges_;
  std::vector<std::size_t> position_;
};

/// A pair (F, F') with F earlier and no admissible witness.
struct ShellingRefutation {
  std::size_t f_prime_id = 0;
  std::size_t f_id = 0;
};

using ShellingVerdict = std::variant<ShellingCertificate, ShellingRefutation>;

struct ShellingOptions {
  unsigned threads = 1;
};

/// Exact shelling test. Throws InvalidInput for non-pure complexes and for
/// orders that are not permutations of the facets.
ShellingVerdict verify_shelling(const SimplicialComplex& complex, const FacetOrder& order,
                                const ShellingOptions& options = {});

enum class Precedence { before, after, same_block };

/// Size-vector comparison: `before` when the first differing block is
/// larger in F, `same_block` when all block sizes agree.
Precedence paper_precedes(const ComplexSpec& spec, const LabeledPartition& f,
                          const LabeledPartition& f_prime);

/// Recursive shelling order of the constituent complex with row sizes
/// `sizes` on m columns, restricted to `facets` (all of size vector
/// `sizes`). The order is certified with verify_shelling before it is
/// returned; a failed certification throws CertificationFailure.
FacetOrder constituent_order(int m, std::span<const int> sizes,
                             std::span<const LabeledPartition> facets,
                             const ShellingOptions& options = {});

/// The same recursive order, generated directly as placements on the
/// m x sizes.size() board. Every facet of the constituent complex appears
/// exactly once when m >= sum(sizes).
std::vector<VertexSet> constituent_sequence(int m, std::span<const int> sizes);

/// Shelling order on the facets of enumerate_facets(spec): size-vector
/// blocks in descending lexicographic order, each block in constituent
/// order. Requires balanced caps and m >= n(nu+1) + s - 1.
FacetOrder paper_shelling_order(const ComplexSpec& spec, const ShellingOptions& options = {});

/// For F before F' by size vectors with pivot i0: moves the smallest column
/// x of B_j \ A_j (smallest admissible j > i0) into block i0. Returns the
/// resulting facet F'' and the vertex v = (x, j).
std::pair<LabeledPartition, Cell> case_a_witness(const LabeledPartition& f,
                                                 const LabeledPartition& f_prime);

}  // namespace chessplex
