#include "wadm/reports.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "wadm/errors.hpp"
#include "wadm/group.hpp"

namespace wadm {

namespace {

using Json = nlohmann::ordered_json;

Json json_number(double x) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  // round-trip through the 12-significant-digit rendering so JSON and CSV
  // agree byte-for-byte across runs
  return std::stod(format_sig(x));
}

Json weight_json(const WeightSpec& w) {
  Json out;
  switch (w.family) {
    case WeightFamily::Trivial:
      out["family"] = "trivial";
      break;
    case WeightFamily::Polynomial:
      out["family"] = "poly";
      out["s"] = json_number(w.s);
      break;
    case WeightFamily::Subexponential:
      out["family"] = "subexp";
      out["alpha"] = json_number(w.alpha);
      out["beta"] = json_number(w.beta);
      break;
  }
  return out;
}

Json growth_json(const GrowthEstimate& g) {
  Json out;
  out["min_radius"] = g.minRadius;
  out["max_radius"] = g.maxRadius;
  out["d_fit"] = json_number(g.dFit);
  out["c_fit"] = json_number(g.cFit);
  out["residual"] = json_number(g.residual);
  out["verdict"] = to_string(g.verdict);
  out["finite_group"] = g.finiteGroup;
  if (g.finiteGroup) out["saturation_radius"] = g.saturationRadius;
  Json table = Json::array();
  for (const auto& [tau, count] : g.table) {
    table.push_back(Json::array({tau, count}));
  }
  out["table"] = std::move(table);
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw ResourceError("cannot write '" + path.string() + "'");
  }
  out << body;
}

std::filesystem::path prepare_out_dir(const RunConfig& config) {
  std::filesystem::path dir(config.outDir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ResourceError("cannot create output directory '" +
                              config.outDir + "'");
  return dir;
}

}  // namespace

std::string format_sig(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

int run_verify_weight(const RunConfig& config, std::ostream& log) {
  config.validate_common();
  config.validate_weight();
  const GroupPtr group = make_group(*config.group);
  const WeightSpec spec = config.weight_spec();
  const BallBudget budget{config.elementCap};

  const AxiomReport report =
      verify_weight_axioms(spec, *group, config.radius, budget);

  Json out;
  out["group"] = group->name();
  out["weight"] = weight_json(spec);
  out["radius"] = report.radius;
  out["pairs_checked"] = report.pairsChecked;
  out["identity_one"] = report.identityOne;
  out["symmetric"] = report.symmetric;
  out["submultiplicative"] = report.submultiplicative;
  out["max_ratio"] = json_number(report.maxRatio);
  out["worst_pair"] =
      Json{{"x", group->format(report.worstX)}, {"y", group->format(report.worstY)}};
  out["pass"] = report.pass();

  const auto dir = prepare_out_dir(config);
  write_file(dir / "axiom_report.json", out.dump(2) + "\n");

  if (report.pass()) {
    log << "verify-weight: pass (max ratio " << format_sig(report.maxRatio)
        << " over " << report.pairsChecked << " pairs)\n";
    return kExitPass;
  }
  if (!report.identityOne) log << "verify-weight: FAIL axiom w(e) = 1\n";
  if (!report.symmetric) log << "verify-weight: FAIL axiom w(x^-1) = w(x)\n";
  if (!report.submultiplicative) {
    log << "verify-weight: FAIL axiom w(xy) <= w(x)w(y) at x="
        << group->format(report.worstX) << " y=" << group->format(report.worstY)
        << " ratio=" << format_sig(report.maxRatio) << "\n";
  }
  return kExitConditionFailed;
}

int run_estimate_growth(const RunConfig& config, std::ostream& log) {
  config.validate_common();
  const GroupPtr group = make_group(*config.group);
  const BallBudget budget{config.elementCap};

  const GrowthEstimate estimate = estimate_growth_exponent(
      *group, config.minRadius, config.maxRadius, budget);

  const auto dir = prepare_out_dir(config);
  if (config.want_csv()) {
    std::ostringstream csv;
    csv << "tau,count,log_tau,log_count\n";
    for (const auto& [tau, count] : estimate.table) {
      csv << tau << ',' << count << ','
          << format_sig(std::log(static_cast<double>(tau))) << ','
          << format_sig(std::log(static_cast<double>(count))) << '\n';
    }
    write_file(dir / "growth_table.csv", csv.str());
  }
  if (config.want_json()) {
    Json out;
    out["group"] = group->name();
    out.update(growth_json(estimate));
    write_file(dir / "growth_estimate.json", out.dump(2) + "\n");
  }

  log << "estimate-growth: " << to_string(estimate.verdict)
      << " d_fit=" << format_sig(estimate.dFit)
      << " c_fit=" << format_sig(estimate.cFit) << "\n";
  return estimate.verdict == GrowthVerdict::Polynomial ? kExitPass
                                                       : kExitConditionFailed;
}

int run_check_admissibility(const RunConfig& config, std::ostream& log) {
  config.validate_common();
  config.validate_weight();
  const GroupPtr group = make_group(*config.group);
  const WeightSpec spec = config.weight_spec();
  const ExponentSet exponents = ExponentSet::make(config.p, config.r);

  VerifyConfig vcfg;
  vcfg.growthMinRadius = config.minRadius;
  vcfg.growthMaxRadius = config.maxRadius;
  vcfg.truncationRadius = config.truncationRadius;
  vcfg.d1Radius = config.d1Radius;
  vcfg.tGrid = log_spaced_grid(config.tMin, config.tMax, config.tPoints);
  for (int k = 1; k <= config.tauMax; ++k) {
    vcfg.tauGrid.push_back(static_cast<double>(k));
  }
  vcfg.budget.maxElements = config.elementCap;

  const AdmissibilityReport report =
      verify_theorem(spec, *group, exponents, vcfg);

  const bool haveW1 = report.condGrowth.pass;
  const bool haveW22 = report.condGrowth.pass && report.condW22.pass;
  const bool haveW2 = !report.w2.tGrid.empty();

  Json out;
  out["group"] = group->name();
  out["weight"] = weight_json(report.w);
  out["companion"] = weight_json(report.v);
  out["p"] = json_number(report.exponents.p);
  out["r"] = json_number(report.exponents.r);
  out["p_prime"] = json_number(report.exponents.pPrime);
  out["r_prime"] = json_number(report.exponents.rPrime);
  out["growth"] = growth_json(report.growth);
  out["d_used"] = json_number(report.dUsed);
  out["d_exact"] = report.dExact;

  if (haveW1) {
    Json w1;
    w1["empirical_d"] = json_number(report.d1.value);
    w1["sweep_sup"] = json_number(report.d1.sweepSup);
    w1["asymptotic_floor"] = json_number(report.d1.asymptoticFloor);
    w1["floor_applied"] = report.d1.floorApplied;
    w1["witness"] = Json{{"x", group->format(group->identity())},
                         {"z", group->format(report.d1.witnessZ)},
                         {"y", group->format(report.d1.witnessY)}};
    w1["safe_bound"] = json_number(report.d1.safeUpperBound);
    w1["triples_checked"] = report.d1.triplesChecked;
    w1["pass"] = report.condW1.pass;
    w1["detail"] = report.condW1.detail;
    out["w1"] = std::move(w1);
  }

  {
    Json w22;
    if (haveW22) {
      w22["value"] = json_number(report.w22.value);
      w22["error_bound"] = json_number(report.w22.errorBound);
      w22["truncation_radius"] = report.truncationRadius;
    }
    w22["pass"] = report.condW22.pass;
    w22["detail"] = report.condW22.detail;
    if (haveW1) out["w22"] = std::move(w22);
  }

  {
    Json w2;
    if (haveW2) {
      w2["theta_predicted"] = json_number(report.theta);
      w2["theta_half_convention"] = json_number(report.thetaHalfConvention);
      w2["alpha_predicted"] = json_number(report.alpha);
      w2["theta_measured"] = json_number(report.w2.thetaMeasured);
      w2["d_constant"] = json_number(report.w2.dConstant);
      w2["minimizer_slope"] = json_number(report.w2.minimizerSlope);
      w2["tracking_deviation"] = json_number(report.w2.trackingDeviation);
      w2["extension_steps"] = report.w2.extensionSteps;
    }
    w2["pass"] = report.condW2.pass;
    w2["detail"] = report.condW2.detail;
    if (haveW22 || report.failedCondition == "w2") out["w2"] = std::move(w2);
  }

  out["verdict"] = report.pass ? "pass" : "fail";
  out["failed_condition"] = report.failedCondition;

  const auto dir = prepare_out_dir(config);
  if (config.want_json()) {
    write_file(dir / "admissibility_report.json", out.dump(2) + "\n");
  }
  if (config.want_csv()) {
    std::ostringstream ab;
    ab << "tau,a,b,b_error\n";
    if (haveW2) {
      for (std::size_t i = 0; i < report.w2.tauGrid.size(); ++i) {
        ab << format_sig(report.w2.tauGrid[i]) << ','
           << format_sig(report.w2.aValues[i]) << ','
           << format_sig(report.w2.bValues[i].value) << ','
           << format_sig(report.w2.bValues[i].errorBound) << '\n';
      }
    }
    write_file(dir / "ab_curve.csv", ab.str());

    std::ostringstream mw;
    mw << "t,m,bound\n";
    if (haveW2) {
      for (std::size_t k = 0; k < report.w2.tGrid.size(); ++k) {
        const double bound = report.w2.dConstant *
                             std::pow(report.w2.tGrid[k], report.theta);
        mw << format_sig(report.w2.tGrid[k]) << ','
           << format_sig(report.w2.mValues[k]) << ',' << format_sig(bound)
           << '\n';
      }
    }
    write_file(dir / "w2_curve.csv", mw.str());
  }

  if (report.pass) {
    log << "check-admissibility: pass (theta=" << format_sig(report.theta)
        << ", D1>=" << format_sig(report.d1.value)
        << ", w22=" << format_sig(report.w22.value) << ")\n";
    return kExitPass;
  }
  log << "check-admissibility: FAIL at (" << report.failedCondition << "): "
      << (report.failedCondition == "growth"  ? report.condGrowth.detail
          : report.failedCondition == "w1"    ? report.condW1.detail
          : report.failedCondition == "w22"   ? report.condW22.detail
                                              : report.condW2.detail)
      << "\n";
  return kExitConditionFailed;
}

}  // namespace wadm
