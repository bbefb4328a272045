#ifndef WADM_CONFIG_HPP_
#define WADM_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "wadm/weight.hpp"

namespace wadm {

//! Run configuration shared by the CLI subcommands. Values come from, in
//! increasing precedence: built-in defaults, the WADM_ELEMENT_CAP environment
//! variable, a key=value config file, command-line flags.
struct RunConfig {
  std::optional<std::string> group;   // required
  std::optional<std::string> weight;  // required: "poly", "subexp", "trivial"
  std::optional<double> s;            // required for poly
  std::optional<double> alpha, beta;  // required for subexp

  double p = 2.0;  // "inf" accepted
  double r = 2.0;

  int radius = 6;         // axiom sweep radius (verify-weight)
  int minRadius = 4;      // growth fit range
  int maxRadius = 16;
  int truncationRadius = 64;
  int tauMax = 64;        // integer tau-grid 1..tauMax
  double tMin = 1.0;
  double tMax = 1e4;
  int tPoints = 25;
  int d1Radius = 6;

  std::string outDir = "out";
  std::string format = "both";  // json | csv | both
  std::uint64_t elementCap = 10'000'000;

  //! Throws ConfigError (field-labelled message) on the first violation.
  void validate_common() const;
  void validate_weight() const;

  WeightSpec weight_spec() const;  // validated weight
  bool want_json() const { return format != "csv"; }
  bool want_csv() const { return format != "json"; }
};

//! Applies "key = value" lines from a file ('#' starts a comment).
//! Unknown keys are rejected.
void apply_config_file(RunConfig& config, const std::string& path);

//! Applies WADM_ELEMENT_CAP if set.
void apply_environment(RunConfig& config);

}  // namespace wadm

#endif  // WADM_CONFIG_HPP_
