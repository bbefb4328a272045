// wadm: numerical verification of (p, r)-admissible weights on finitely
// generated groups of polynomial growth.
//
// Subcommands:
//   verify-weight        exhaustive weight-axiom check on a metric ball
//   estimate-growth      ball counts and growth-exponent fit
//   check-admissibility  full admissibility pipeline with certified bounds

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wadm/config.hpp"
#include "wadm/errors.hpp"
#include "wadm/reports.hpp"

namespace {

struct Flags {
  std::optional<std::string> configPath;
  std::optional<std::string> group, weight, outDir, format;
  std::optional<double> s, alpha, beta, p, r, tMin, tMax;
  std::optional<int> radius, minRadius, maxRadius, truncationRadius, tauMax,
      tPoints, d1Radius;
  std::optional<std::string> pText, rText;  // accept "inf"
};

void add_common_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.configPath, "key = value config file");
  cmd->add_option("--group", f.group,
                  "group catalog name: Z, Z^d, Z/n, heisenberg, free2");
  cmd->add_option("--weight", f.weight, "weight family: poly, subexp, trivial");
  cmd->add_option("--s", f.s, "polynomial exponent s >= 0");
  cmd->add_option("--alpha", f.alpha, "subexponential alpha > 0");
  cmd->add_option("--beta", f.beta, "subexponential beta in (0,1)");
  cmd->add_option("--p", f.pText, "exponent p in [1, inf]");
  cmd->add_option("--r", f.rText, "exponent r in [1, inf]");
  cmd->add_option("--radius", f.radius, "axiom sweep radius");
  cmd->add_option("--min-radius", f.minRadius, "growth fit minimum radius");
  cmd->add_option("--max-radius", f.maxRadius, "growth fit maximum radius");
  cmd->add_option("--truncation-radius", f.truncationRadius,
                  "exact-sum truncation radius for certified norms");
  cmd->add_option("--tau-max", f.tauMax, "upper end of the integer tau-grid");
  cmd->add_option("--t-min", f.tMin, "lower end of the t-grid");
  cmd->add_option("--t-max", f.tMax, "upper end of the t-grid");
  cmd->add_option("--t-points", f.tPoints, "number of t-grid points");
  cmd->add_option("--d1-radius", f.d1Radius, "sweep radius for the splitting constant");
  cmd->add_option("--out", f.outDir, "output directory");
  cmd->add_option("--format", f.format, "output formats: json, csv or both");
}

wadm::RunConfig resolve(const Flags& f) {
  wadm::RunConfig config;
  wadm::apply_environment(config);
  if (f.configPath) wadm::apply_config_file(config, *f.configPath);

  if (f.group) config.group = *f.group;
  if (f.weight) config.weight = *f.weight;
  if (f.s) config.s = *f.s;
  if (f.alpha) config.alpha = *f.alpha;
  if (f.beta) config.beta = *f.beta;
  auto parse_exponent = [](const std::string& text, const char* name) {
    if (text == "inf" || text == "infinity") {
      return std::numeric_limits<double>::infinity();
    }
    try {
      return std::stod(text);
    } catch (const std::exception&) {
      throw wadm::ConfigError(std::string(name) + ": invalid value '" + text +
                              "'");
    }
  };
  if (f.pText) config.p = parse_exponent(*f.pText, "p");
  if (f.rText) config.r = parse_exponent(*f.rText, "r");
  if (f.radius) config.radius = *f.radius;
  if (f.minRadius) config.minRadius = *f.minRadius;
  if (f.maxRadius) config.maxRadius = *f.maxRadius;
  if (f.truncationRadius) config.truncationRadius = *f.truncationRadius;
  if (f.tauMax) config.tauMax = *f.tauMax;
  if (f.tMin) config.tMin = *f.tMin;
  if (f.tMax) config.tMax = *f.tMax;
  if (f.tPoints) config.tPoints = *f.tPoints;
  if (f.d1Radius) config.d1Radius = *f.d1Radius;
  if (f.outDir) config.outDir = *f.outDir;
  if (f.format) config.format = *f.format;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "wadm: numerical verification of (p,r)-admissible weights on finitely "
      "generated groups.\n"
      "The element enumeration cap (default 10000000) can be overridden with "
      "the WADM_ELEMENT_CAP environment variable or the element_cap config "
      "key."};
  app.require_subcommand(1);

  Flags verifyFlags, growthFlags, admissFlags;
  CLI::App* verify =
      app.add_subcommand("verify-weight", "check the weight axioms on a ball");
  add_common_flags(verify, verifyFlags);
  CLI::App* growth = app.add_subcommand(
      "estimate-growth", "ball growth table and exponent fit");
  add_common_flags(growth, growthFlags);
  CLI::App* admiss = app.add_subcommand(
      "check-admissibility", "full (p,r)-admissibility pipeline");
  add_common_flags(admiss, admissFlags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : wadm::kExitConfigError;
  }

  try {
    if (verify->parsed()) {
      return wadm::run_verify_weight(resolve(verifyFlags), std::cout);
    }
    if (growth->parsed()) {
      return wadm::run_estimate_growth(resolve(growthFlags), std::cout);
    }
    return wadm::run_check_admissibility(resolve(admissFlags), std::cout);
  } catch (const wadm::Error& e) {
    switch (e.kind()) {
      case wadm::ErrorKind::Config:
        std::cerr << "config error: " << e.what() << "\n";
        return wadm::kExitConfigError;
      case wadm::ErrorKind::Resource:
        std::cerr << "resource error: " << e.what() << "\n";
        return wadm::kExitResourceError;
      case wadm::ErrorKind::Hypothesis:
        std::cerr << "condition failed: " << e.what() << "\n";
        return wadm::kExitConditionFailed;
    }
    return wadm::kExitResourceError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return wadm::kExitResourceError;
  }
}
