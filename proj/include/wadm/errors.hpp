#ifndef WADM_ERRORS_HPP_
#define WADM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace wadm {

// Error taxonomy mirrors the CLI exit contract:
//   ConfigError     -> exit 2 (bad configuration / usage)
//   ResourceError   -> exit 3 (enumeration cap, radius budget, overflow)
//   HypothesisError -> exit 1 (a mathematical precondition fails, e.g. a
//                      divergent series; reported as a failed condition)
enum class ErrorKind { Config, Resource, Hypothesis };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(ErrorKind::Config, msg) {}
};

struct ResourceError : Error {
  explicit ResourceError(const std::string& msg)
      : Error(ErrorKind::Resource, msg) {}
};

struct HypothesisError : Error {
  explicit HypothesisError(const std::string& msg)
      : Error(ErrorKind::Hypothesis, msg) {}
};

}  // namespace wadm

#endif  // WADM_ERRORS_HPP_
