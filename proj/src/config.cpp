#include "wadm/config.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "wadm/errors.hpp"
#include "wadm/group.hpp"

namespace wadm {

namespace {

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  if (value == "inf" || value == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  try {
    std::size_t used = 0;
    const double parsed = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw ConfigError(key + ": invalid number '" + value + "'");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int parsed = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw ConfigError(key + ": invalid integer '" + value + "'");
  }
}

void apply_pair(RunConfig& config, const std::string& key,
                const std::string& value) {
  if (key == "group") {
    config.group = value;
  } else if (key == "weight") {
    config.weight = value;
  } else if (key == "s") {
    config.s = parse_double(key, value);
  } else if (key == "alpha") {
    config.alpha = parse_double(key, value);
  } else if (key == "beta") {
    config.beta = parse_double(key, value);
  } else if (key == "p") {
    config.p = parse_double(key, value);
  } else if (key == "r") {
    config.r = parse_double(key, value);
  } else if (key == "radius") {
    config.radius = parse_int(key, value);
  } else if (key == "min_radius") {
    config.minRadius = parse_int(key, value);
  } else if (key == "max_radius") {
    config.maxRadius = parse_int(key, value);
  } else if (key == "truncation_radius") {
    config.truncationRadius = parse_int(key, value);
  } else if (key == "tau_max") {
    config.tauMax = parse_int(key, value);
  } else if (key == "t_min") {
    config.tMin = parse_double(key, value);
  } else if (key == "t_max") {
    config.tMax = parse_double(key, value);
  } else if (key == "t_points") {
    config.tPoints = parse_int(key, value);
  } else if (key == "d1_radius") {
    config.d1Radius = parse_int(key, value);
  } else if (key == "out") {
    config.outDir = value;
  } else if (key == "format") {
    config.format = value;
  } else if (key == "element_cap") {
    const long long cap = std::stoll(value);
    if (cap <= 0) throw ConfigError("element_cap: must be positive");
    config.elementCap = static_cast<std::uint64_t>(cap);
  } else {
    throw ConfigError("config: unknown key '" + key + "'");
  }
}

}  // namespace

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: line " + std::to_string(lineNo) +
                        " is not 'key = value'");
    }
    apply_pair(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void apply_environment(RunConfig& config) {
  if (const char* cap = std::getenv("WADM_ELEMENT_CAP")) {
    try {
      const long long value = std::stoll(cap);
      if (value <= 0) throw std::invalid_argument(cap);
      config.elementCap = static_cast<std::uint64_t>(value);
    } catch (const std::exception&) {
      throw ConfigError("WADM_ELEMENT_CAP: invalid value");
    }
  }
}

void RunConfig::validate_common() const {
  if (!group) throw ConfigError("group: required");
  make_group(*group);  // validates the name
  if (!(p >= 1.0)) throw ConfigError("p: must be >= 1");
  if (!(r >= 1.0)) throw ConfigError("r: must be >= 1");
  if (radius < 1) throw ConfigError("radius: must be >= 1");
  if (minRadius < 1) throw ConfigError("min_radius: must be >= 1");
  if (maxRadius < minRadius) {
    throw ConfigError("max_radius: must be >= min_radius");
  }
  if (truncationRadius < 2) {
    throw ConfigError("truncation_radius: must be >= 2");
  }
  if (truncationRadius > 1'048'576) {
    throw ConfigError("truncation_radius: exceeds the enumeration budget");
  }
  if (tauMax < 1) throw ConfigError("tau_max: must be >= 1");
  if (!(tMin >= 1.0)) throw ConfigError("t_min: must be >= 1");
  if (!(tMax >= tMin)) throw ConfigError("t_max: must be >= t_min");
  if (tPoints < 2) throw ConfigError("t_points: must be >= 2");
  if (format != "json" && format != "csv" && format != "both") {
    throw ConfigError("format: expected json, csv or both");
  }
  if (outDir.empty()) throw ConfigError("out: required");
}

void RunConfig::validate_weight() const {
  if (!weight) throw ConfigError("weight: required");
  weight_spec();
}

WeightSpec RunConfig::weight_spec() const {
  if (!weight) throw ConfigError("weight: required");
  WeightSpec spec;
  if (*weight == "trivial") {
    spec = WeightSpec::trivial();
  } else if (*weight == "poly") {
    if (!s) throw ConfigError("s: required for the polynomial family");
    spec = WeightSpec::polynomial(*s);
  } else if (*weight == "subexp") {
    if (!alpha) throw ConfigError("alpha: required for the subexponential family");
    if (!beta) throw ConfigError("beta: required for the subexponential family");
    spec = WeightSpec::subexponential(*alpha, *beta);
  } else {
    throw ConfigError("weight: unknown family '" + *weight +
                      "' (expected poly, subexp, trivial)");
  }
  spec.validate();
  return spec;
}

}  // namespace wadm
