#ifndef WADM_REPORTS_HPP_
#define WADM_REPORTS_HPP_

#include <iosfwd>
#include <string>

#include "wadm/admissibility.hpp"
#include "wadm/config.hpp"

namespace wadm {

// Exit-status contract shared by the subcommands.
inline constexpr int kExitPass = 0;
inline constexpr int kExitConditionFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitResourceError = 3;

//! Deterministic float rendering with 12 significant digits.
std::string format_sig(double x);

//! Runs the axiom sweep and writes axiom_report.json into config.outDir.
//! Returns kExitPass when all axioms hold.
int run_verify_weight(const RunConfig& config, std::ostream& log);

//! Writes growth_table.csv and growth_estimate.json. Returns kExitPass for a
//! polynomial verdict, kExitConditionFailed otherwise.
int run_estimate_growth(const RunConfig& config, std::ostream& log);

//! Runs the full admissibility pipeline and writes
//! admissibility_report.json, ab_curve.csv and w2_curve.csv. Returns
//! kExitPass iff every condition holds with finite constants.
int run_check_admissibility(const RunConfig& config, std::ostream& log);

}  // namespace wadm

#endif  // WADM_REPORTS_HPP_
