#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "wadm/config.hpp"
#include "wadm/errors.hpp"
#include "wadm/reports.hpp"

using namespace wadm;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("wadm_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path write_config(const std::string& name, const std::string& body) {
  const fs::path path = fs::temp_directory_path() / ("wadm_cfg_" + name);
  std::ofstream out(path);
  out << body;
  return path;
}

RunConfig base_config() {
  RunConfig config;
  config.group = "Z";
  config.weight = "poly";
  config.s = 2.0;
  return config;
}

}  // namespace

TEST_CASE("config files parse key = value lines with comments") {
  const auto path = write_config("parse.cfg",
                                 "# growth run\n"
                                 "group = Z^2\n"
                                 "weight = poly\n"
                                 "s = 1.5   # exponent\n"
                                 "p = inf\n"
                                 "max_radius = 12\n");
  RunConfig config;
  apply_config_file(config, path.string());
  CHECK(config.group == "Z^2");
  CHECK(config.s == 1.5);
  CHECK(std::isinf(config.p));
  CHECK(config.maxRadius == 12);

  SUBCASE("flags override file values") {
    config.s = 3.0;  // the CLI applies flags after the file
    CHECK(config.weight_spec().s == 3.0);
  }
}

TEST_CASE("config rejection: unknown keys, bad lines, bad values") {
  RunConfig config;
  const auto bad1 = write_config("bad1.cfg", "wat = 7\n");
  CHECK_THROWS_AS(apply_config_file(config, bad1.string()), ConfigError);
  const auto bad2 = write_config("bad2.cfg", "group Z\n");
  CHECK_THROWS_AS(apply_config_file(config, bad2.string()), ConfigError);
  const auto bad3 = write_config("bad3.cfg", "s = two\n");
  CHECK_THROWS_AS(apply_config_file(config, bad3.string()), ConfigError);
  CHECK_THROWS_AS(apply_config_file(config, "/nonexistent/path.cfg"),
                  ConfigError);
}

TEST_CASE("config validation catches domain errors field by field") {
  RunConfig config = base_config();
  config.s = -1.0;  // broken weight injected via config
  CHECK_THROWS_WITH_AS(config.validate_weight(),
                       doctest::Contains("weight.s"), ConfigError);

  RunConfig noWeight;
  noWeight.group = "Z";
  CHECK_THROWS_WITH_AS(noWeight.validate_weight(),
                       doctest::Contains("weight: required"), ConfigError);

  RunConfig noGroup;
  noGroup.weight = "poly";
  noGroup.s = 2.0;
  CHECK_THROWS_WITH_AS(noGroup.validate_common(),
                       doctest::Contains("group: required"), ConfigError);

  RunConfig badP = base_config();
  badP.p = 0.5;
  CHECK_THROWS_AS(badP.validate_common(), ConfigError);

  RunConfig badFormat = base_config();
  badFormat.format = "xml";
  CHECK_THROWS_AS(badFormat.validate_common(), ConfigError);
}

TEST_CASE("run_verify_weight writes a report and returns the exit status") {
  RunConfig config = base_config();
  const auto dir = fresh_dir("axioms");
  config.outDir = dir.string();
  std::ostringstream log;
  CHECK(run_verify_weight(config, log) == kExitPass);
  const std::string report = slurp(dir / "axiom_report.json");
  CHECK(report.find("\"pass\": true") != std::string::npos);
  CHECK(report.find("\"max_ratio\"") != std::string::npos);
}

TEST_CASE("run_verify_weight rejects a broken config without partial output") {
  RunConfig config = base_config();
  config.s = -1.0;
  const auto dir = fresh_dir("axioms_bad");
  config.outDir = dir.string();
  std::ostringstream log;
  CHECK_THROWS_AS(run_verify_weight(config, log), ConfigError);
  CHECK_FALSE(fs::exists(dir));  // nothing was written
}

TEST_CASE("run_estimate_growth: polynomial passes, exponential does not") {
  std::ostringstream log;
  {
    RunConfig config;
    config.group = "Z^2";
    const auto dir = fresh_dir("growth_z2");
    config.outDir = dir.string();
    CHECK(run_estimate_growth(config, log) == kExitPass);
    const std::string csv = slurp(dir / "growth_table.csv");
    CHECK(csv.rfind("tau,count,log_tau,log_count\n", 0) == 0);
    const std::string json = slurp(dir / "growth_estimate.json");
    CHECK(json.find("\"verdict\": \"polynomial\"") != std::string::npos);
  }
  {
    RunConfig config;
    config.group = "free2";
    config.minRadius = 2;
    config.maxRadius = 12;
    const auto dir = fresh_dir("growth_f2");
    config.outDir = dir.string();
    CHECK(run_estimate_growth(config, log) == kExitConditionFailed);
    const std::string json = slurp(dir / "growth_estimate.json");
    CHECK(json.find("super-polynomial") != std::string::npos);
  }
}

TEST_CASE("run_check_admissibility obeys the exit-status contract") {
  std::ostringstream log;
  SUBCASE("pass on Z") {
    RunConfig config = base_config();
    const auto dir = fresh_dir("adm_z");
    config.outDir = dir.string();
    CHECK(run_check_admissibility(config, log) == kExitPass);
    const std::string json = slurp(dir / "admissibility_report.json");
    CHECK(json.find("\"verdict\": \"pass\"") != std::string::npos);
    CHECK(json.find("\"theta_predicted\": 0.25") != std::string::npos);
    const std::string ab = slurp(dir / "ab_curve.csv");
    CHECK(ab.rfind("tau,a,b,b_error\n", 0) == 0);
    const std::string mw = slurp(dir / "w2_curve.csv");
    CHECK(mw.rfind("t,m,bound\n", 0) == 0);
  }
  SUBCASE("labelled failure on the divergent boundary") {
    RunConfig config = base_config();
    config.group = "Z^2";
    config.s = 1.0;
    const auto dir = fresh_dir("adm_z2s1");
    config.outDir = dir.string();
    CHECK(run_check_admissibility(config, log) == kExitConditionFailed);
    const std::string json = slurp(dir / "admissibility_report.json");
    CHECK(json.find("\"failed_condition\": \"w22\"") != std::string::npos);
  }
  SUBCASE("resource caps surface as ResourceError") {
    RunConfig config = base_config();
    config.group = "Z^2";
    config.elementCap = 10;
    const auto dir = fresh_dir("adm_cap");
    config.outDir = dir.string();
    CHECK_THROWS_AS(run_check_admissibility(config, log), ResourceError);
  }
}

TEST_CASE("identical configs produce byte-identical outputs") {
  std::ostringstream log;
  RunConfig config = base_config();
  const auto dir1 = fresh_dir("det1");
  const auto dir2 = fresh_dir("det2");

  config.outDir = dir1.string();
  REQUIRE(run_check_admissibility(config, log) == kExitPass);
  config.outDir = dir2.string();
  REQUIRE(run_check_admissibility(config, log) == kExitPass);

  for (const char* name :
       {"admissibility_report.json", "ab_curve.csv", "w2_curve.csv"}) {
    CAPTURE(name);
    CHECK(slurp(dir1 / name) == slurp(dir2 / name));
  }
}

TEST_CASE("environment variable overrides the element cap") {
  setenv("WADM_ELEMENT_CAP", "123456", 1);
  RunConfig config;
  apply_environment(config);
  CHECK(config.elementCap == 123456);
  setenv("WADM_ELEMENT_CAP", "bogus", 1);
  CHECK_THROWS_AS(apply_environment(config), ConfigError);
  unsetenv("WADM_ELEMENT_CAP");
}

TEST_CASE("format selection limits the artifacts written") {
  std::ostringstream log;
  RunConfig config;
  config.group = "Z";
  config.format = "json";
  const auto dir = fresh_dir("fmt_json");
  config.outDir = dir.string();
  REQUIRE(run_estimate_growth(config, log) == kExitPass);
  CHECK(fs::exists(dir / "growth_estimate.json"));
  CHECK_FALSE(fs::exists(dir / "growth_table.csv"));

  config.format = "csv";
  const auto dir2 = fresh_dir("fmt_csv");
  config.outDir = dir2.string();
  REQUIRE(run_estimate_growth(config, log) == kExitPass);
  CHECK_FALSE(fs::exists(dir2 / "growth_estimate.json"));
  CHECK(fs::exists(dir2 / "growth_table.csv"));
}

TEST_CASE("floats serialize with 12 significant digits") {
  CHECK(format_sig(0.25) == "0.25");
  CHECK(format_sig(2.1583757938) == "2.1583757938");
  CHECK(format_sig(1.0 / 3.0) == "0.333333333333");
  CHECK(format_sig(1e-12) == "1e-12");
}
