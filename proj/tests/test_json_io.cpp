#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "confsect/json_io.hpp"

using namespace confsect;
using namespace confsect::io;

TEST_CASE("braid words serialize as signed integer arrays") {
  const braid::BraidWord w = braid::parse_word(3, "1 -2 2");
  const json j = word_to_json(w);
  CHECK(j == json::parse("[1, -2, 2]"));
  CHECK(word_from_json(3, j) == w);
  CHECK_THROWS_AS(word_from_json(3, json::parse("[1, 0]")), ParseError);
  CHECK_THROWS_AS(word_from_json(3, json::parse("[1.5]")), ParseError);
  CHECK_THROWS_AS(word_from_json(3, json::parse("{}")), ParseError);
}

TEST_CASE("normal forms carry delta power and factor permutations") {
  const json j = normal_form_to_json(braid::normal_form(braid::parse_word(3, "1 2 1")));
  CHECK(j.contains("delta_power"));
  CHECK(j.contains("factors"));
  for (const auto& f : j["factors"]) CHECK(f.is_array());
  const json trivial = normal_form_to_json(braid::normal_form(braid::parse_word(3, "1 -1")));
  CHECK(trivial["delta_power"] == 0);
  CHECK(trivial["factors"].empty());
}

TEST_CASE("points round trip, infinity included") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    const mobius::ProjectivePoint p = mobius::random_point(rng);
    const mobius::ProjectivePoint q = point_from_json(point_to_json(p));
    CHECK(mobius::chordal_distance(p, q) < 1e-12);
  }
  CHECK(point_to_json(mobius::ProjectivePoint::infinity()) == json("inf"));
  CHECK(point_from_json(json("inf")).is_infinity());
  CHECK_THROWS_AS(point_from_json(json("nope")), ParseError);
  CHECK_THROWS_AS(point_from_json(json{{"re", 1.0}}), ParseError);
}

TEST_CASE("configurations round trip and check their count") {
  std::mt19937_64 rng(5);
  const mobius::Configuration c = mobius::random_configuration(rng, 5);
  const json j = configuration_to_json(c);
  CHECK(j["n"] == 5);
  const mobius::Configuration back = configuration_from_json(j);
  for (int i = 0; i < 5; ++i)
    CHECK(mobius::chordal_distance(c.points()[i], back.points()[i]) < 1e-12);
  json bad = j;
  bad["n"] = 4;
  CHECK_THROWS_AS(configuration_from_json(bad), ParseError);
  CHECK_THROWS_AS(configuration_from_json(json::parse("{\"points\": [{\"re\":0,\"im\":0},"
                                                      "{\"re\":0,\"im\":0}]}")),
                  NumericError);
}

TEST_CASE("section outputs expose m, method and the point list") {
  std::mt19937_64 rng(7);
  const mobius::Configuration c = mobius::random_configuration(rng, 3);
  const json j = section_output_to_json(mobius::section_three(c, 5));
  CHECK(j["m"] == 5);
  CHECK(j["method"] == "cross-ratio");
  CHECK(j["new_points"].size() == 5);
}

TEST_CASE("torsion specs") {
  const json j = torsion_spec_to_json(elliptic::TorsionSpec::primitive(3));
  CHECK(j == json({{"k", 3}, {"primitive", true}}));
  const elliptic::TorsionSpec spec = torsion_spec_from_json(json::parse("{\"k\": 2}"));
  CHECK(spec.k == 2);
  CHECK_FALSE(spec.primitive_only);
  CHECK_THROWS_AS(torsion_spec_from_json(json::parse("{}")), ParseError);
}

TEST_CASE("path specs: generator loops and explicit samples") {
  const mobius::Configuration base({mobius::ProjectivePoint::from_complex(0.0),
                                    mobius::ProjectivePoint::from_complex(1.0),
                                    mobius::ProjectivePoint::from_complex({0.0, 1.0})});
  const monodromy::ConfigPath gen =
      path_from_json(json::parse(R"({"type":"generator","i":1})"), base);
  CHECK(gen.closed);
  CHECK(gen.n == 3);

  const json samples = json::parse(R"({
    "type": "samples",
    "points": [
      [{"re":0,"im":0}, {"re":1,"im":0}],
      [{"re":0,"im":0.5}, {"re":1,"im":0}],
      [{"re":0,"im":0}, {"re":1,"im":0}]
    ]})");
  const monodromy::ConfigPath path = path_from_json(samples, base);
  CHECK(path.n == 2);
  CHECK(path.closed);
  CHECK(mobius::chordal_distance(path.at(0.5)[0],
                                 mobius::ProjectivePoint::from_complex({0.0, 0.5})) < 1e-12);

  CHECK_THROWS_AS(path_from_json(json::parse(R"({"type":"bogus"})"), base), ParseError);
  CHECK_THROWS_AS(path_from_json(json::parse(R"({"type":"samples","points":[]})"), base),
                  ParseError);
}

TEST_CASE("tracking results serialize permutation and gaps") {
  monodromy::TrackingResult r;
  r.induced = braid::Permutation::transposition(3, 1);
  r.max_matching_gap = 0.25;
  const json j = tracking_result_to_json(r);
  CHECK(j["permutation"] == json::parse("[2, 1, 3]"));
  CHECK(j["max_gap"] == 0.25);
}
