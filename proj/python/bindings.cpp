// Python entry points. Structured results cross the boundary as JSON text
// and are decoded on the Python side.

#include <random>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chessplex/error.hpp"
#include "chessplex/json_io.hpp"
#include "chessplex/parallel.hpp"

namespace py = pybind11;
using namespace chessplex;

namespace {

ComplexSpec make_spec(int m, int n, int nu, int s, const std::optional<std::vector<int>>& caps, bool symmetrize) {
  if (!caps) return ComplexSpec::symmetric(m, n, nu, s);
  ComplexSpec spec = ComplexSpec::chessboard(m, n, *caps);
  spec.symmetrized = symmetrize;
  spec.validate();
  return spec;
}

std::vector<CoefficientField> parse_fields(const std::vector<std::string>& names) {
  if (names.empty()) return default_fields();
  std::vector<CoefficientField> out;
  for (const auto& n : names) out.push_back(CoefficientField::parse(n));
  return out;
}

std::string build(int m, int n, int nu, int s, std::optional<std::vector<int>> caps, bool symmetrize) {
  const ComplexSpec spec = make_spec(m, n, nu, s, caps, symmetrize);
  return complex_to_json(spec, enumerate_facets(spec)).dump();
}

std::string shell(int m, int n, int nu, int s, std::size_t pairs, unsigned threads) {
  const ComplexSpec spec = ComplexSpec::symmetric(m, n, nu, s);
  const auto k = enumerate_facets(spec);
  const ShellingOptions opts{threads};
  const auto verdict = verify_shelling(k, paper_shelling_order(spec, opts), opts);
  Json out;
  if (const auto* cert = std::get_if<ShellingCertificate>(&verdict)) {
    out["status"] = "certified";
    out["certificate"] = certificate_to_json(*cert, pairs);
  } else {
    out["status"] = "refuted";
    out["refutation"] = refutation_to_json(std::get<ShellingRefutation>(verdict));
  }
  return out.dump();
}

std::string homology(int vertex_count, const std::vector<std::vector<int>>& facets,
                     const std::vector<std::string>& fields, bool simplify) {
  std::vector<VertexSet> sets;
  for (const auto& f : facets) sets.push_back(vertex_set_of(f));
  const auto k = SimplicialComplex::from_generators(vertex_count, sets);
  const auto fs = parse_fields(fields);
  HomologyOptions opts;
  opts.simplify = simplify;
  const auto ranks = reduced_homology_ranks(k, fs, opts);
  Json out = Json::object();
  for (std::size_t i = 0; i < fs.size(); ++i) out[fs[i].name()] = homology_to_json(ranks[i]);
  return out.dump();
}

std::string connectivity(int m, int n, int nu, int s, std::optional<std::vector<int>> caps,
                         const std::vector<std::string>& fields) {
  return connectivity_to_json(connectivity_evidence(make_spec(m, n, nu, s, caps, false), parse_fields(fields)))
      .dump();
}

std::string tverberg(const std::string& config_json, const std::vector<int>& caps, unsigned threads) {
  const PointConfiguration config = config_from_json(Json::parse(config_json));
  const SearchResult r = search_partition(config, caps, {100'000'000, threads});
  if (r.partition && !validate_partition(config, r.dim_caps, *r.partition)) {
    throw CertificationFailure("search returned an invalid partition");
  }
  return search_to_json(r).dump();
}

std::string random_configuration(int d, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return config_to_json(random_general_position(d, count, rng)).dump();
}

std::string admissible(int d, const std::vector<int>& dims) {
  return admissibility_to_json(check_admissible({d, dims})).dump();
}

std::string unavoidable(int m, const std::vector<int>& dims) {
  std::vector<SimplicialComplex> fam;
  for (int dim : dims) fam.push_back(SimplicialComplex::skeleton_of_simplex(m, dim));
  return unavoidability_to_json(is_collectively_unavoidable(fam)).dump();
}

bool in_sdj(int m, const std::vector<std::vector<int>>& blocks, const std::vector<int>& dims) {
  std::vector<SimplicialComplex> fam;
  for (int dim : dims) fam.push_back(SimplicialComplex::skeleton_of_simplex(m, dim));
  LabeledPartition a{blocks};
  a.normalize();
  return in_symmetrized_deleted_join(a, fam);
}

std::string antichain(int m, int r, int nu, int s) {
  if (s < 1 || s > r) throw InvalidInput("antichain needs 1 <= s <= r");
  const auto upper = enumerate_facets(s == r ? ComplexSpec::symmetric(m, r, nu + 1, 0)
                                             : ComplexSpec::symmetric(m, r, nu, s));
  const auto lower = enumerate_facets(ComplexSpec::symmetric(m, r, nu, s - 1));
  const auto q = face_poset_difference(upper, lower);
  const auto a = is_antichain(q);
  Json out = {{"size", q.elements.size()}, {"antichain", a.antichain}};
  const auto dim = difference_order_complex_dim(q);
  out["order_complex_dim"] = dim ? Json(*dim) : Json(nullptr);
  if (a.comparable) {
    const BoardShape board{m, r};
    out["comparable"] = {partition_to_json(LabeledPartition::from_placement(a.comparable->first, board)),
                         partition_to_json(LabeledPartition::from_placement(a.comparable->second, board))};
  }
  return out.dump();
}

std::optional<int> model_poset_dim(int r, int s, int t) { return order_complex_dim(model_poset(r, s, t)); }

}  // namespace

PYBIND11_MODULE(_chessplex, mod) {
  mod.doc() = "Chessboard complexes, shellings, homology and constrained Tverberg partitions";

  py::register_exception<InvalidInput>(mod, "InvalidInput", PyExc_ValueError);
  py::register_exception<ResourceLimit>(mod, "ResourceLimit", PyExc_RuntimeError);
  py::register_exception<CertificationFailure>(mod, "CertificationFailure", PyExc_RuntimeError);

  const auto gil = py::call_guard<py::gil_scoped_release>();
  mod.def("build", &build, py::arg("m"), py::arg("n"), py::arg("nu") = 0, py::arg("s") = 0,
          py::arg("caps") = std::nullopt, py::arg("symmetrize") = false, gil);
  mod.def("shell", &shell, py::arg("m"), py::arg("n"), py::arg("nu"), py::arg("s"), py::arg("pairs") = 64,
          py::arg("threads") = 1, gil);
  mod.def("homology", &homology, py::arg("vertex_count"), py::arg("facets"),
          py::arg("fields") = std::vector<std::string>{}, py::arg("simplify") = true, gil);
  mod.def("connectivity", &connectivity, py::arg("m"), py::arg("n"), py::arg("nu") = 0, py::arg("s") = 0,
          py::arg("caps") = std::nullopt, py::arg("fields") = std::vector<std::string>{}, gil);
  mod.def("tverberg", &tverberg, py::arg("config"), py::arg("caps"), py::arg("threads") = 1, gil);
  mod.def("random_configuration", &random_configuration, py::arg("d"), py::arg("count"), py::arg("seed"), gil);
  mod.def("admissible", &admissible, py::arg("d"), py::arg("dims"));
  mod.def("unavoidable", &unavoidable, py::arg("m"), py::arg("dims"), gil);
  mod.def("in_symmetrized_deleted_join", &in_sdj, py::arg("m"), py::arg("blocks"), py::arg("dims"));
  mod.def("antichain", &antichain, py::arg("m"), py::arg("r"), py::arg("nu"), py::arg("s"), gil);
  mod.def("model_poset_dim", &model_poset_dim, py::arg("r"), py::arg("s"), py::arg("t"));
  mod.def("default_thread_count", &default_thread_count);
}
