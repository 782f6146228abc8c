#include "doctest.h"

#include "chessplex/error.hpp"
#include "chessplex/json_io.hpp"

using namespace chessplex;

TEST_CASE("complex JSON round trip") {
  const ComplexSpec spec = ComplexSpec::symmetric(5, 2, 1, 1);
  const auto k = enumerate_facets(spec);
  const Json doc = complex_to_json(spec, k);
  const auto [spec2, k2] = complex_from_json(Json::parse(doc.dump()));
  CHECK(spec2.m == 5);
  CHECK(spec2.row_caps == spec.row_caps);
  CHECK(k2.facets() == k.facets());
  Json bad = doc;
  bad["facets"][0][0] = 99;
  CHECK_THROWS_AS(complex_from_json(bad), InvalidInput);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"m": 2})")), InvalidInput);
}

TEST_CASE("configuration JSON accepts strings and integers") {
  const auto c = config_from_json(Json::parse(R"({"d": 2, "points": [["1/2", "-3"], [4, 0], ["0.25", "1"]]})"));
  CHECK(c.d == 2);
  CHECK(c.points[0][0] == Rational(1, 2));
  CHECK(c.points[2][0] == Rational(1, 4));
  const Json back = config_to_json(c);
  CHECK(back["points"][0][0] == "1/2");
  CHECK(back["points"][1][0] == "4");
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"d": 2, "points": [["1/0", "1"]]})")), InvalidInput);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"d": 3, "points": [["1", "1"]]})")), InvalidInput);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"points": []})")), InvalidInput);
}

TEST_CASE("search result JSON carries exact rationals") {
  const PointConfiguration sq{2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  const auto r = search_partition(sq, std::vector<int>{1, 1});
  const Json j = search_to_json(r);
  CHECK(j["partition"]["witness"] == Json::array({"1/2", "1/2"}));
  CHECK(j["dims_exact"] == true);
}

TEST_CASE("certificate JSON is bounded and consistent") {
  const ComplexSpec spec = ComplexSpec::symmetric(5, 2, 1, 1);
  const auto k = enumerate_facets(spec);
  const auto v = verify_shelling(k, paper_shelling_order(spec));
  const auto& cert = std::get<ShellingCertificate>(v);
  const Json j = certificate_to_json(cert, 10);
  CHECK(j["order"].size() == k.facet_count());
  CHECK(j["pair_count"] == cert.pair_count());
  CHECK(j["pairs"].size() == 10);
  CHECK(j["ridges"].size() == k.facet_count() - 1);
}
