// Batch front end: every subcommand writes one JSON report.
// Exit status: 0 verified or found, 1 refuted or exhausted, 2 error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chessplex/error.hpp"
#include "chessplex/json_io.hpp"
#include "chessplex/parallel.hpp"

using namespace chessplex;

namespace {

struct Params {
  std::optional<int> m, n, nu, s, k, r, d, N;
  std::vector<int> caps;
  std::vector<int> dims;
  bool symmetrize = false;
  std::string config_path;
  std::string preset;
  int trials = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string out;
  std::uint64_t limit_facets = 10'000'000;
  std::uint64_t limit_lp = 100'000'000;
  std::vector<std::string> fields;
  std::size_t certificate_pairs = 64;
  bool timing = false;
};

struct Outcome {
  Json result;
  Json derived = Json::object();
  bool success = true;
};

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw InvalidInput(std::string("missing --") + flag);
  return *v;
}

Json echo_inputs(const Params& p) {
  Json in = Json::object();
  auto put = [&](const char* key, const std::optional<int>& v) {
    if (v) in[key] = *v;
  };
  put("m", p.m);
  put("n", p.n);
  put("nu", p.nu);
  put("s", p.s);
  put("k", p.k);
  put("r", p.r);
  put("d", p.d);
  put("N", p.N);
  if (!p.caps.empty()) in["caps"] = p.caps;
  if (!p.dims.empty()) in["dims"] = p.dims;
  if (p.symmetrize) in["symmetrize"] = true;
  if (!p.config_path.empty()) in["config"] = p.config_path;
  if (!p.preset.empty()) in["preset"] = p.preset;
  if (p.trials != 0) in["trials"] = p.trials;
  in["seed"] = p.seed;
  in["limit_facets"] = p.limit_facets;
  in["limit_lp"] = p.limit_lp;
  if (!p.fields.empty()) in["fields"] = p.fields;
  return in;
}

/// --caps selects a chessboard complex (symmetrized with --symmetrize),
/// otherwise --nu and --s select the balanced symmetrization.
ComplexSpec spec_from(const Params& p) {
  const int m = require(p.m, "m");
  const int n = require(p.n, "n");
  if (!p.caps.empty()) {
    ComplexSpec spec = ComplexSpec::chessboard(m, n, p.caps);
    spec.symmetrized = p.symmetrize;
    spec.validate();
    return spec;
  }
  return ComplexSpec::symmetric(m, n, require(p.nu, "nu"), require(p.s, "s"));
}

std::vector<CoefficientField> fields_from(const Params& p) {
  if (p.fields.empty()) return default_fields();
  std::vector<CoefficientField> out;
  for (const auto& f : p.fields) out.push_back(CoefficientField::parse(f));
  return out;
}

Outcome run_build(const Params& p) {
  const ComplexSpec spec = spec_from(p);
  const SimplicialComplex complex = enumerate_facets(spec, {p.limit_facets});
  Outcome o;
  o.derived["dimension"] = complex.dimension();
  o.derived["pure"] = complex.is_pure();
  o.derived["facet_count"] = complex.facet_count();
  o.derived["f_vector"] = f_vector(complex).counts;
  o.result = complex_to_json(spec, complex);
  return o;
}

Outcome run_shell(const Params& p) {
  const ComplexSpec spec = spec_from(p);
  const SimplicialComplex complex = enumerate_facets(spec, {p.limit_facets});
  const ShellingOptions options{p.threads};
  const FacetOrder order = paper_shelling_order(spec, options);
  const ShellingVerdict verdict = verify_shelling(complex, order, options);
  Outcome o;
  o.derived["dimension"] = complex.dimension();
  o.derived["facet_count"] = complex.facet_count();
  if (const auto* cert = std::get_if<ShellingCertificate>(&verdict)) {
    o.result["status"] = "certified";
    o.result["certificate"] = certificate_to_json(*cert, p.certificate_pairs);
  } else {
    o.success = false;
    o.result["status"] = "refuted";
    o.result["refutation"] = refutation_to_json(std::get<ShellingRefutation>(verdict));
  }
  return o;
}

Outcome run_homology(const Params& p) {
  const ComplexSpec spec = spec_from(p);
  const SimplicialComplex complex = enumerate_facets(spec, {p.limit_facets});
  const auto fields = fields_from(p);
  HomologyOptions options;
  options.threads = p.threads;
  const auto ranks = reduced_homology_ranks(complex, fields, options);
  Outcome o;
  o.derived["dimension"] = complex.dimension();
  o.derived["euler_characteristic"] = euler_characteristic(complex);
  Json per_field = Json::object();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    per_field[fields[i].name()] = homology_to_json(ranks[i]);
  }
  o.result["fields"] = std::move(per_field);
  return o;
}

Outcome run_connectivity(const Params& p) {
  const ComplexSpec spec = spec_from(p);
  ConnectivityOptions options;
  options.limits.max_facets = p.limit_facets;
  options.homology.threads = p.threads;
  const ConnectivityReport report = connectivity_evidence(spec, fields_from(p), options);
  Outcome o;
  o.derived["mu"] = report.mu;
  if (!report.hypothesis_ok) o.derived["note"] = "working hypothesis violated";
  o.result = connectivity_to_json(report);
  o.success = report.verdict.value_or(false);
  return o;
}

DimensionProfile profile_from(const Params& p) {
  DimensionProfile profile{require(p.r, "r"), require(p.k, "k"), require(p.s, "s")};
  profile.validate();
  return profile;
}

Outcome run_tverberg(const Params& p) {
  const DimensionProfile profile = profile_from(p);
  const SearchOptions options{p.limit_lp, p.threads};
  Outcome o;
  if (!p.config_path.empty()) {
    std::ifstream in(p.config_path);
    if (!in) throw InvalidInput("cannot read " + p.config_path);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("malformed configuration: ") + e.what());
    }
    const PointConfiguration config = config_from_json(doc);
    o.derived["d"] = config.d;
    o.derived["N"] = config.N();
    o.derived["N_min"] = profile.n_min(config.d);
    o.derived["admissible"] = profile.admissible(config.d);
    const SearchResult r = search_partition(config, profile, options);
    o.result = search_to_json(r);
    o.success = r.partition.has_value();
    return o;
  }
  const int d = require(p.d, "d");
  if (d < 1) throw InvalidInput("--d must be positive");
  const int N = p.N.value_or(profile.n_min(d));
  const int trials = p.trials == 0 ? 1 : p.trials;
  if (trials < 0) throw InvalidInput("--trials must be positive");
  o.derived["N"] = N;
  o.derived["N_min"] = profile.n_min(d);
  o.derived["admissible"] = profile.admissible(d);
  o.derived["tight"] = profile.tight(d);
  if (profile.admissible(d)) o.derived["tight_profile"] = profile_to_json(reduce_to_tight(profile, d));
  std::mt19937_64 rng(p.seed);
  int found = 0;
  int exact = 0;
  std::uint64_t calls = 0;
  Json first = nullptr;
  for (int t = 0; t < trials; ++t) {
    const PointConfiguration config = random_general_position(d, N + 1, rng);
    const SearchResult r = search_partition(config, profile, options);
    calls += r.lp_calls;
    if (r.partition) {
      if (!validate_partition(config, r.dim_caps, *r.partition)) {
        throw CertificationFailure("search returned an invalid partition");
      }
      ++found;
      if (r.dims_exact) ++exact;
      if (first.is_null()) first = {{"config", config_to_json(config)}, {"search", search_to_json(r)}};
    }
  }
  o.result["trials"] = trials;
  o.result["found"] = found;
  o.result["exhausted"] = trials - found;
  o.result["dims_exact"] = exact;
  o.result["lp_calls"] = calls;
  o.result["first_found"] = std::move(first);
  o.result["scope"] = "affine maps only";
  o.success = found == trials;
  return o;
}

std::vector<SimplicialComplex> skeleton_family(const Params& p) {
  const int m = require(p.m, "m");
  std::vector<int> dims = p.dims;
  if (dims.empty()) dims.assign(static_cast<std::size_t>(require(p.n, "n")), require(p.k, "k"));
  std::vector<SimplicialComplex> family;
  for (int dim : dims) family.push_back(SimplicialComplex::skeleton_of_simplex(m, dim));
  return family;
}

Outcome run_unavoidable(const Params& p) {
  const auto family = skeleton_family(p);
  const UnavoidabilityResult r = is_collectively_unavoidable(family, {}, p.threads);
  Outcome o;
  o.derived["n"] = family.size();
  o.result = unavoidability_to_json(r);
  o.success = r.unavoidable;
  return o;
}

Json antichain_case(int m, int r, int nu, int s, std::uint64_t limit) {
  const auto spec_for = [&](int level) {
    return level == r ? ComplexSpec::symmetric(m, r, nu + 1, 0)
                      : ComplexSpec::symmetric(m, r, nu, level);
  };
  const SimplicialComplex upper = enumerate_facets(spec_for(s), {limit});
  const SimplicialComplex lower = enumerate_facets(spec_for(s - 1), {limit});
  const FacePosetDifference q = face_poset_difference(upper, lower);
  const AntichainResult a = is_antichain(q);
  const auto dim = difference_order_complex_dim(q);
  Json row = {{"m", m}, {"r", r}, {"nu", nu}, {"s", s}, {"size", q.elements.size()},
              {"antichain", a.antichain}};
  row["order_complex_dim"] = dim ? Json(*dim) : Json(nullptr);
  if (a.comparable) {
    const BoardShape board{m, r};
    row["comparable"] = {partition_to_json(LabeledPartition::from_placement(a.comparable->first, board)),
                         partition_to_json(LabeledPartition::from_placement(a.comparable->second, board))};
  }
  return row;
}

Outcome run_antichain(const Params& p) {
  const int m = require(p.m, "m");
  const int r = require(p.r, "r");
  const int nu = require(p.nu, "nu");
  const int s = require(p.s, "s");
  if (s < 1 || s > r) throw InvalidInput("antichain needs 1 <= s <= r");
  Outcome o;
  o.derived["hypothesis_ok"] = m >= r * (nu + 1) + s - 1;
  o.result = antichain_case(m, r, nu, s, p.limit_facets);
  o.success = o.result["antichain"].get<bool>();
  return o;
}

Outcome grid_thm33(const Params& p) {
  Outcome o;
  Json rows = Json::array();
  const auto fields = fields_from(p);
  for (int n : {2, 3}) {
    for (int nu : {1, 2}) {
      for (int s = 0; s < n; ++s) {
        for (int extra : {0, 1}) {
          const int m = n * (nu + 1) + s - 1 + extra;
          const ComplexSpec spec = ComplexSpec::symmetric(m, n, nu, s);
          const SimplicialComplex complex = enumerate_facets(spec, {p.limit_facets});
          const ShellingOptions sh{p.threads};
          const ShellingVerdict v = verify_shelling(complex, paper_shelling_order(spec, sh), sh);
          const bool certified = std::holds_alternative<ShellingCertificate>(v);
          ConnectivityOptions co;
          co.homology.threads = p.threads;
          const ConnectivityReport rep = connectivity_evidence(spec, fields, co);
          const bool pass = rep.verdict.value_or(false) && rep.top_concentrated;
          rows.push_back({{"n", n}, {"nu", nu}, {"s", s}, {"m", m},
                          {"facets", complex.facet_count()},
                          {"shelling", certified ? "certified" : "refuted"},
                          {"connectivity", connectivity_to_json(rep)}});
          o.success = o.success && certified && pass;
        }
      }
    }
  }
  o.result["rows"] = std::move(rows);
  return o;
}

Outcome grid_thm12(const Params& p) {
  Outcome o;
  Json rows = Json::array();
  const int trials = p.trials == 0 ? 100 : p.trials;
  struct Case {
    int d, r, k, s, N, trials;
  };
  std::vector<Case> cases = {{2, 2, 1, 0, 4, trials}, {3, 2, 1, 1, 5, trials},
                             {2, 3, 1, 1, 8, trials}, {4, 2, 2, 0, 6, trials},
                             {3, 2, 1, 1, 5, 5 * trials}, {2, 2, 0, 1, 4, trials / 2},
                             {3, 2, 0, 1, 5, trials / 2}};
  std::mt19937_64 seeds(p.seed);
  for (const Case& c : cases) {
    const DimensionProfile profile{c.r, c.k, c.s};
    std::mt19937_64 rng(seeds());
    int found = 0;
    for (int t = 0; t < c.trials; ++t) {
      const PointConfiguration config = random_general_position(c.d, c.N + 1, rng);
      const SearchResult r = search_partition(config, profile, {p.limit_lp, p.threads});
      if (r.partition && validate_partition(config, r.dim_caps, *r.partition)) ++found;
    }
    const bool admissible = profile.admissible(c.d);
    const bool pass = admissible ? found == c.trials : found == 0;
    rows.push_back({{"d", c.d}, {"r", c.r}, {"k", c.k}, {"s", c.s}, {"N", c.N},
                    {"admissible", admissible}, {"trials", c.trials}, {"found", found},
                    {"expected", admissible ? "all found" : "none found"}, {"pass", pass}});
    o.success = o.success && pass;
  }
  o.result["rows"] = std::move(rows);
  o.result["scope"] = "affine maps only";
  return o;
}

Outcome grid_fig1(const Params& p) {
  PointConfiguration square{2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  const SearchOptions options{p.limit_lp, p.threads};
  const SearchResult tri_point = search_partition(square, std::vector<int>{2, 0}, options);
  const SearchResult segments = search_partition(square, std::vector<int>{1, 1}, options);
  Outcome o;
  o.result["config"] = config_to_json(square);
  o.result["caps_2_0"] = search_to_json(tri_point);
  o.result["caps_1_1"] = search_to_json(segments);
  o.result["admissible_2_0"] = admissibility_to_json(check_admissible({2, {2, 0}}));
  o.result["admissible_1_1"] = admissibility_to_json(check_admissible({2, {1, 1}}));
  o.success = !tri_point.partition && segments.partition.has_value();
  return o;
}

Outcome grid_antichain(const Params& p) {
  Outcome o;
  Json rows = Json::array();
  for (int r = 2; r <= 3; ++r) {
    for (int nu = 1; nu <= 2; ++nu) {
      for (int s = 2; s <= r; ++s) {
        for (int m = r * (nu + 1) + s - 1; m <= 8; ++m) {
          Json row = antichain_case(m, r, nu, s, p.limit_facets);
          o.success = o.success && row["antichain"].get<bool>();
          rows.push_back(std::move(row));
        }
      }
    }
  }
  Json model = Json::array();
  for (int r = 3; r <= 6; ++r) {
    for (int t = 2; t < r; ++t) {
      for (int s = 1; s < t; ++s) {
        const auto q = model_poset(r, s, t);
        const int dim = order_complex_dim(q).value_or(-1);
        const FreenessResult free = cyclic_action_is_free(r, q);
        model.push_back({{"r", r}, {"s", s}, {"t", t}, {"dim", dim},
                         {"expected", t - s - 1}, {"cyclic_free", free.free}});
        o.success = o.success && dim == t - s - 1;
      }
    }
  }
  o.result["rows"] = std::move(rows);
  o.result["model"] = std::move(model);
  return o;
}

Outcome run_grid(const Params& p) {
  if (p.preset == "thm33") return grid_thm33(p);
  if (p.preset == "thm12") return grid_thm12(p);
  if (p.preset == "fig1") return grid_fig1(p);
  if (p.preset == "antichain") return grid_antichain(p);
  throw InvalidInput("unknown preset '" + p.preset + "'");
}

void emit(const Params& p, const Json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (p.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(p.out);
  if (!file) throw InvalidInput("cannot write " + p.out);
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chessboard complexes, shellings, homology and constrained Tverberg partitions"};
  app.require_subcommand(1);
  Params p;
  p.threads = default_thread_count();

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", p.seed, "RNG seed");
    sub->add_option("--threads", p.threads, "worker threads (default CHESSPLEX_THREADS or cores)");
    sub->add_option("--out", p.out, "write the report here instead of stdout");
    sub->add_option("--limit-facets", p.limit_facets, "facet enumeration guard");
    sub->add_option("--limit-lp", p.limit_lp, "LP call guard");
    sub->add_flag("--timing", p.timing, "add wall-clock timing to the report");
  };
  const auto board = [&](CLI::App* sub) {
    sub->add_option("--m", p.m, "columns");
    sub->add_option("--n", p.n, "rows");
    sub->add_option("--nu", p.nu, "base row cap");
    sub->add_option("--s", p.s, "rows with cap nu + 1");
    sub->add_option("--caps", p.caps, "explicit row caps")->delimiter(',');
    sub->add_flag("--symmetrize", p.symmetrize, "symmetrize explicit caps over row permutations");
  };

  auto* build = app.add_subcommand("build", "enumerate facets");
  board(build);
  common(build);
  auto* shell = app.add_subcommand("shell", "construct and verify the shelling order");
  board(shell);
  common(shell);
  shell->add_option("--pairs", p.certificate_pairs, "explicit certificate pairs to print");
  auto* homology = app.add_subcommand("homology", "reduced homology ranks");
  board(homology);
  common(homology);
  homology->add_option("--fields", p.fields, "fields such as Q,F2,F3")->delimiter(',');
  auto* connectivity = app.add_subcommand("connectivity", "homology evidence for the bound mu");
  board(connectivity);
  common(connectivity);
  connectivity->add_option("--fields", p.fields, "fields such as Q,F2,F3")->delimiter(',');
  auto* tverberg = app.add_subcommand("tverberg", "constrained Tverberg partitions");
  common(tverberg);
  tverberg->add_option("--d", p.d, "ambient dimension");
  tverberg->add_option("--r", p.r, "parts");
  tverberg->add_option("--k", p.k, "base dimension cap");
  tverberg->add_option("--s", p.s, "parts with cap k + 1");
  tverberg->add_option("--N", p.N, "simplex dimension (default (r-1)(d+2))");
  tverberg->add_option("--trials", p.trials, "random configurations");
  tverberg->add_option("--config", p.config_path, "JSON point configuration");
  auto* unavoidable = app.add_subcommand("unavoidable", "collective unavoidability of skeleta");
  common(unavoidable);
  unavoidable->add_option("--m", p.m, "vertices");
  unavoidable->add_option("--n", p.n, "complexes");
  unavoidable->add_option("--k", p.k, "skeleton dimension of every complex");
  unavoidable->add_option("--dims", p.dims, "skeleton dimension per complex")->delimiter(',');
  auto* antichain = app.add_subcommand("antichain", "antichain test for consecutive symmetrizations");
  common(antichain);
  antichain->add_option("--m", p.m, "columns");
  antichain->add_option("--r", p.r, "rows");
  antichain->add_option("--nu", p.nu, "base cap");
  antichain->add_option("--s", p.s, "rows with cap nu + 1 in the bigger complex");
  auto* grid = app.add_subcommand("grid", "preset parameter grids");
  common(grid);
  grid->add_option("--preset", p.preset, "thm33, thm12, fig1 or antichain")->required();
  grid->add_option("--trials", p.trials, "trials per Tverberg case");
  grid->add_option("--fields", p.fields, "fields such as Q,F2,F3")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  Json report;
  report["command"] = name;
  report["inputs"] = echo_inputs(p);
  try {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    if (name == "build") o = run_build(p);
    else if (name == "shell") o = run_shell(p);
    else if (name == "homology") o = run_homology(p);
    else if (name == "connectivity") o = run_connectivity(p);
    else if (name == "tverberg") o = run_tverberg(p);
    else if (name == "unavoidable") o = run_unavoidable(p);
    else if (name == "antichain") o = run_antichain(p);
    else o = run_grid(p);
    report["derived"] = std::move(o.derived);
    report["result"] = std::move(o.result);
    report["status"] = o.success ? "verified" : "refuted";
    if (p.timing) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      report["timing"] = {{"seconds", dt.count()}};
    }
    emit(p, report);
    return o.success ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "chessplex " << name << ": " << e.what() << "\n";
    report["status"] = "error";
    report["error"] = e.what();
    try {
      emit(p, report);
    } catch (const std::exception&) {
    }
    return 2;
  }
}
