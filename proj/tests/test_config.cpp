#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csl/config.hpp"

using namespace csl;

TEST_CASE("embedded defaults parse and resolve to the conventional point") {
  const RunConfig c = default_config();
  CHECK(c.config_version == 1);
  CHECK(c.case_label == "standard");
  CHECK(c.format == "csv");
  CHECK(c.channels.empty());
  CHECK(c.grid.lambda_points == 50);
  CHECK(c.grid.rc_points == 50);
  CHECK(c.tolerance_scale == 1.0);
  const CslParams p = c.params();
  CHECK(p.lambda.in(un::per_s) == doctest::Approx(2.2e-17).epsilon(1e-15));
  CHECK(p.r_c.in(un::cm) == doctest::Approx(1e-5).epsilon(1e-15));
}

TEST_CASE("case labels and overrides resolve in order") {
  RunConfig c = default_config();
  c.case_label = "case1";
  CHECK(c.params().lambda.in(un::per_s) == doctest::Approx(4e-10).epsilon(1e-15));
  c.case_label = "case2";
  CHECK(c.params().r_c.in(un::cm) == doctest::Approx(1e-4).epsilon(1e-15));
  c.lambda_override = 1e-12;
  c.rc_override = 3e-5;
  const CslParams p = c.params();
  CHECK(p.lambda.in(un::per_s) == doctest::Approx(1e-12).epsilon(1e-15));
  CHECK(p.r_c.in(un::cm) == doctest::Approx(3e-5).epsilon(1e-15));
  c.case_label = "case3";
  CHECK_THROWS_AS(c.params(), ConfigError);
}

TEST_CASE("schema violations are rejected with a config error") {
  CHECK_THROWS_AS(config_from_json_text("not json"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text("[1,2]"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"bogus": 1})"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"case": "caseX"})"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"case": 3})"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"lambda": -1e-10})"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"lambda": "fast"})"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"format": "xml"})"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"config_version": 2})"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"seed": 0.5})"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"grid": {"lambda_min": 0}})"),
                  ConfigError);
  CHECK_THROWS_AS(
      config_from_json_text(R"({"grid": {"lambda_min": 1e-2, "lambda_max": 1e-4}})"),
      ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"grid": {"rc_points": 0}})"),
                  ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"grid": {"speed": 9}})"),
                  ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"channels": []})"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"channels": [3]})"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"tolerance_scale": -1})"),
                  ConfigError);
  CHECK_THROWS_AS(config_from_file("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("tolerance scale zero is a legal plumbing setting") {
  const RunConfig c = config_from_json_text(R"({"tolerance_scale": 0})");
  CHECK(c.tolerance_scale == 0.0);
}

TEST_CASE("partial documents inherit the remaining defaults") {
  const RunConfig c = config_from_json_text(
      R"({"case": "case1", "channels": ["igm", "photographic"],
          "grid": {"lambda_points": 7}, "dust_kappa_prime": 0.1})");
  CHECK(c.case_label == "case1");
  CHECK(c.channels.size() == 2);
  CHECK(c.grid.lambda_points == 7);
  CHECK(c.grid.rc_points == 50);
  CHECK(c.dust_kappa_prime == doctest::Approx(0.1));
  CHECK(c.cmb_window_s == doctest::Approx(3.15e17));
  CHECK(c.igm_z0_age_s == doctest::Approx(4e17));
}

TEST_CASE("serialization round-trips every field") {
  RunConfig c = default_config();
  c.case_label = "case2";
  c.lambda_override = 5e-11;
  c.channels = {"igm"};
  c.format = "json";
  c.grid.rc_points = 3;
  c.tolerance_scale = 0.5;
  c.seed = 42;
  const RunConfig back = config_from_json_text(config_to_json(c));
  CHECK(back.case_label == c.case_label);
  CHECK(back.lambda_override == doctest::Approx(c.lambda_override));
  CHECK(back.channels == c.channels);
  CHECK(back.format == c.format);
  CHECK(back.grid.rc_points == c.grid.rc_points);
  CHECK(back.tolerance_scale == doctest::Approx(c.tolerance_scale));
  CHECK(back.seed == c.seed);
}
