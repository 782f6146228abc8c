#include "chessplex/json_io.hpp"

#include "chessplex/error.hpp"

namespace chessplex {

namespace {

Json facet_cells(VertexSet f) {
  Json out = Json::array();
  for (int v : vertices_of(f)) out.push_back(v);
  return out;
}

template <typename T>
T field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InvalidInput(std::string("missing field '") + key + "'");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

Json complex_to_json(const ComplexSpec& spec, const SimplicialComplex& complex) {
  Json out;
  out["m"] = spec.m;
  out["n"] = spec.n;
  out["caps"] = spec.row_caps;
  out["symmetrized"] = spec.symmetrized;
  Json facets = Json::array();
  for (VertexSet f : complex.facets()) facets.push_back(facet_cells(f));
  out["facets"] = std::move(facets);
  return out;
}

std::pair<ComplexSpec, SimplicialComplex> complex_from_json(const Json& doc) {
  ComplexSpec spec;
  spec.m = field<int>(doc, "m");
  spec.n = field<int>(doc, "n");
  spec.row_caps = field<std::vector<int>>(doc, "caps");
  spec.symmetrized = field<bool>(doc, "symmetrized");
  if (spec.m < 0) throw InvalidInput("m must be non-negative");
  spec.col_caps.assign(static_cast<std::size_t>(spec.m), 1);
  spec.validate();
  const auto cells = field<std::vector<std::vector<int>>>(doc, "facets");
  const BoardShape board = spec.board();
  std::vector<VertexSet> facets;
  for (const auto& f : cells) {
    for (int v : f) {
      if (v < 0 || v >= board.vertex_count()) throw InvalidInput("cell index outside the board");
    }
    facets.push_back(vertex_set_of(f));
  }
  return {spec, SimplicialComplex(board.vertex_count(), std::move(facets), board)};
}

Json cell_to_json(Cell c) { return Json::array({c.column, c.row}); }

Json partition_to_json(const LabeledPartition& a) { return a.blocks; }

Json certificate_to_json(const ShellingCertificate& cert, std::size_t pair_limit) {
  const auto& ids = cert.order().facet_ids;
  Json out;
  out["order"] = ids;
  out["pair_count"] = cert.pair_count();
  Json ridges = Json::array();
  for (std::size_t p = 1; p < ids.size(); ++p) {
    Json entry;
    entry["f_prime"] = ids[p];
    Json list = Json::array();
    for (const auto& r : cert.ridges(p)) {
      list.push_back({{"vertex", r.vertex}, {"witness", r.witness_id}});
    }
    entry["ridges"] = std::move(list);
    ridges.push_back(std::move(entry));
  }
  out["ridges"] = std::move(ridges);
  Json pairs = Json::array();
  for (std::size_t p = 1; p < ids.size() && pairs.size() < pair_limit; ++p) {
    for (std::size_t q = 0; q < p && pairs.size() < pair_limit; ++q) {
      const auto w = cert.witness(ids[p], ids[q]);
      if (!w) throw CertificationFailure("certificate lacks a witness");
      pairs.push_back({{"f_prime", ids[p]}, {"f", ids[q]}, {"witness", w->witness_id},
                       {"vertex", w->vertex}});
    }
  }
  out["pairs"] = std::move(pairs);
  return out;
}

Json refutation_to_json(const ShellingRefutation& r) {
  return {{"f_prime", r.f_prime_id}, {"f", r.f_id}};
}

Json homology_to_json(const ReducedHomology& h) {
  return {{"degree_minus_one", h.degree_minus_one}, {"ranks", h.ranks}};
}

Json connectivity_to_json(const ConnectivityReport& report) {
  Json out;
  out["mu"] = report.mu;
  Json fields = Json::object();
  Json minus_one = Json::object();
  for (const auto& [name, h] : report.betti) {
    fields[name] = h.ranks;
    minus_one[name] = h.degree_minus_one;
  }
  out["fields"] = std::move(fields);
  out["degree_minus_one"] = std::move(minus_one);
  if (report.verdict) {
    out["verdict"] = *report.verdict ? "pass" : "fail";
  } else {
    out["verdict"] = nullptr;
  }
  out["hypothesis_ok"] = report.hypothesis_ok;
  out["dimension"] = report.dimension;
  out["pure"] = report.pure;
  out["top_concentrated"] = report.top_concentrated;
  out["evidence"] = "reduced homology over fields";
  return out;
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Json point_to_json(const RationalPoint& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(to_string(x));
  return out;
}

PointConfiguration config_from_json(const Json& doc) {
  PointConfiguration c;
  c.d = field<int>(doc, "d");
  if (!doc.at("points").is_array()) throw InvalidInput("field 'points' must be an array");
  for (const auto& p : doc.at("points")) {
    if (!p.is_array()) throw InvalidInput("every point must be an array");
    RationalPoint point;
    for (const auto& x : p) {
      if (x.is_string()) {
        point.push_back(parse_rational(x.get<std::string>()));
      } else if (x.is_number_integer()) {
        point.emplace_back(x.get<long>());
      } else {
        throw InvalidInput("coordinates must be \"p/q\" strings or integers");
      }
    }
    c.points.push_back(std::move(point));
  }
  c.validate();
  return c;
}

Json config_to_json(const PointConfiguration& c) {
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back(point_to_json(p));
  return {{"d", c.d}, {"points", std::move(pts)}};
}

Json partition_to_json(const TverbergPartition& p) {
  Json weights = Json::array();
  for (const auto& w : p.weights) weights.push_back(point_to_json(w));
  return {{"faces", p.faces}, {"witness", point_to_json(p.witness)}, {"weights", weights}};
}

Json search_to_json(const SearchResult& r) {
  Json out;
  out["found"] = r.partition.has_value();
  out["dim_caps"] = r.dim_caps;
  out["lp_calls"] = r.lp_calls;
  out["below_threshold"] = r.below_threshold;
  if (r.partition) {
    out["partition"] = partition_to_json(*r.partition);
    out["achieved_dims"] = r.achieved_dims;
    out["dims_exact"] = r.dims_exact;
  }
  return out;
}

Json profile_to_json(const DimensionProfile& p) {
  return {{"r", p.r}, {"k", p.k}, {"s", p.s}, {"nu", p.nu()}};
}

Json admissibility_to_json(const AdmissibilityReport& r) {
  Json out;
  out["admissible"] = r.admissible;
  out["balanced"] = r.balanced;
  out["r_prime_power"] = r.r_prime_power;
  out["tverberg_prescribable_by_thm72"] = r.tverberg_prescribable_by_thm72;
  out["profile"] = r.profile ? profile_to_json(*r.profile) : Json(nullptr);
  out["cap_inequality"] = r.cap_inequality;
  out["N_used"] = r.N_used;
  return out;
}

Json matching_to_json(const MatchingResult& r) {
  Json out;
  out["perfect"] = r.perfect;
  if (r.perfect) {
    out["partner"] = r.partner;
  } else {
    out["violator_rows"] = r.violator_rows;
    out["violator_neighborhood"] = r.violator_neighborhood;
  }
  return out;
}

Json unavoidability_to_json(const UnavoidabilityResult& r) {
  Json out;
  out["unavoidable"] = r.unavoidable;
  out["partitions_checked"] = r.partitions_checked;
  out["violating"] = r.violating ? partition_to_json(*r.violating) : Json(nullptr);
  return out;
}

Json vertex_set_to_json(VertexSet s) {
  Json out = Json::array();
  for (int v : vertices_of(s)) out.push_back(v);
  return out;
}

}  // namespace chessplex
