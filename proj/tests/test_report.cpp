#include <doctest.h>

#include <sstream>

#include "ratdyn/errors.hpp"
#include "ratdyn/report.hpp"

using namespace ratdyn;

namespace {

ParsedMap parse(const char* text) { return parse_map(Json::parse(text)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("map documents") {
  const ParsedMap ch = parse(R"({"numerator": ["1", "0", "-2"], "denominator": ["1"]})");
  CHECK(ch.map.degree() == 2);
  CHECK(ch.map.is_exact());
  CHECK(ch.map.is_polynomial());
  CHECK(ch.notices.empty());

  const ParsedMap ints = parse(R"({"numerator": [1, 0, -2], "denominator": [1]})");
  CHECK(ints.map.to_string() == ch.map.to_string());

  const ParsedMap fl = parse(R"({"numerator": ["1", "0", "-0.5"], "denominator": ["1"]})");
  CHECK_FALSE(fl.map.is_exact());

  // (z^2 - 1)(z - 3) / ((z - 1)(z + 2)) reduces to degree 2.
  const ParsedMap red = parse(R"({"numerator": ["1", "-3", "-1", "3"], "denominator": ["1", "1", "-2"]})");
  CHECK(red.map.degree() == 2);
  REQUIRE(red.notices.size() == 1);
  CHECK(red.notices[0].rfind("N_REDUCED", 0) == 0);

  CHECK(code_of([] { parse(R"({"numerator": ["1", "2"], "denominator": ["1"]})"); }) == ErrorCode::DegreeTooLow);
  CHECK(code_of([] { parse(R"({"numerator": ["1", "0", "0"]})"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse(R"({"numerator": ["x"], "denominator": ["1"]})"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse(R"({"numerator": ["1", "0", "0"], "denominator": ["0"]})"); }) != ErrorCode::Io);
}

TEST_CASE("config documents") {
  const AnalysisConfig c = config_from_json(Json::parse(
      R"({"max_period": 3, "tolerance": 1e-8, "render": {"width": 64, "height": 32, "window": [-1, 1, -0.5, 0.5]},
          "declarations": [{"kind": "siegel", "anchor": "0", "theta": 0.25}]})"));
  CHECK(c.max_period == 3);
  CHECK(c.tolerance == 1e-8);
  REQUIRE(c.render);
  CHECK(c.render->width == 64);
  CHECK(c.render->y_max == 0.5);
  REQUIRE(c.declarations.size() == 1);
  CHECK(c.declarations[0].theta == 0.25);
  CHECK(config_from_json(to_json(c)).max_period == 3);

  CHECK(code_of([] { config_from_json(Json::parse(R"({"max_perod": 3})")); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { config_from_json(Json::parse(R"({"max_period": 0})")); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { config_from_json(Json::parse(R"({"tolerance": -1})")); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] {
          config_from_json(Json::parse(R"({"declarations": [{"kind": "siegel", "theta": 1.5}]})"));
        }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { config_from_json(Json::parse(R"({"render": {"window": [0, 1]}})")); }) ==
        ErrorCode::InvalidInput);

  AnalysisConfig base;
  merge_config(base, Json::parse(R"({"ro_depth": 4})"));
  CHECK(base.ro_depth == 4);
  CHECK(base.max_period == 4);
}

TEST_CASE("reports are deterministic and round-trip") {
  const ParsedMap pm = parse(R"({"numerator": ["1", "-4", "4"], "denominator": ["1", "0", "0"]})");
  const Json a = report_json(run_analysis(pm.map, AnalysisConfig{}), pm.echo);
  const Json b = report_json(run_analysis(pm.map, AnalysisConfig{}), pm.echo);
  const std::string sa = a.dump(2);
  CHECK(sa == b.dump(2));
  CHECK(Json::parse(sa).dump(2) == sa);
  CHECK(a["complete"].get<bool>());
  CHECK(a["map"]["degree"] == 2);
  for (const char* key : {"tool", "config", "map", "critical_points", "cycles", "exposed", "atlas", "algebra",
                          "primitive_ideals", "warnings", "obstructions", "complete"})
    CHECK(a.contains(key));
}

TEST_CASE("text report mentions the Julia quotient") {
  const ParsedMap pm = parse(R"({"numerator": ["1", "0", "-2"], "denominator": ["1"]})");
  const std::string t = report_text(run_analysis(pm.map, AnalysisConfig{}));
  CHECK(t.find("C(T) (x) M_2") != std::string::npos);
}

TEST_CASE("coded messages") {
  const Json j = coded_message("W_PERIOD_TRUNCATED: periods above 3 skipped");
  CHECK(j["code"] == "W_PERIOD_TRUNCATED");
  CHECK(j["message"] == "periods above 3 skipped");
  CHECK(coded_message("plain text")["code"] == "W_GENERAL");
}

TEST_CASE("render output") {
  const ParsedMap pm = parse(R"({"numerator": ["1", "0", "0"], "denominator": ["1"]})");
  const Analysis a = run_analysis(pm.map, AnalysisConfig{});
  RenderConfig rc;
  rc.width = 40;
  rc.height = 20;
  const Image img = render_julia(a.map, attractors_of(a.cycles), rc);
  CHECK(img.iterations.size() == 800);
  CHECK(img.rgb.size() == 2400);
  std::ostringstream os;
  write_ppm(img, os);
  CHECK(os.str().rfind("P6\n40 20\n255\n", 0) == 0);
  CHECK(os.str().size() == std::string("P6\n40 20\n255\n").size() + 2400);

  rc.x_max = rc.x_min;
  CHECK(code_of([&] { render_julia(a.map, attractors_of(a.cycles), rc); }) == ErrorCode::RenderWindow);
}
