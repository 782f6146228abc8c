#pragma once

// JSON forms of complexes, certificates, reports and point configurations.
// Rationals are "p/q" strings.

#include "json.hpp"

#include "chessplex/complex.hpp"
#include "chessplex/homology.hpp"
#include "chessplex/matching.hpp"
#include "chessplex/poset.hpp"
#include "chessplex/shelling.hpp"
#include "chessplex/tverberg.hpp"

namespace chessplex {

using Json = nlohmann::ordered_json;

/// {"m", "n", "caps", "symmetrized", "facets"}; facets list cell indices.
Json complex_to_json(const ComplexSpec& spec, const SimplicialComplex& complex);
/// Inverse of complex_to_json; facets are validated against the spec's
/// board. Throws InvalidInput on malformed documents.
std::pair<ComplexSpec, SimplicialComplex> complex_from_json(const Json& doc);

Json cell_to_json(Cell c);
Json partition_to_json(const LabeledPartition& a);

/// Ridge data for every facet plus up to `pair_limit` explicit
/// {f_prime, f, witness, vertex} entries, in order of f_prime then f.
Json certificate_to_json(const ShellingCertificate& cert, std::size_t pair_limit = 64);
Json refutation_to_json(const ShellingRefutation& r);

Json homology_to_json(const ReducedHomology& h);
/// {"mu", "fields", "verdict", "hypothesis_ok", ...}
Json connectivity_to_json(const ConnectivityReport& report);

Json rational_to_json(const Rational& q);
Json point_to_json(const RationalPoint& p);
/// {"d", "points"} with "p/q" strings (plain JSON integers also accepted).
PointConfiguration config_from_json(const Json& doc);
Json config_to_json(const PointConfiguration& c);
Json partition_to_json(const TverbergPartition& p);
Json search_to_json(const SearchResult& r);
Json admissibility_to_json(const AdmissibilityReport& r);
Json profile_to_json(const DimensionProfile& p);

Json matching_to_json(const MatchingResult& r);
Json unavoidability_to_json(const UnavoidabilityResult& r);

Json vertex_set_to_json(VertexSet s);

}  // namespace chessplex
