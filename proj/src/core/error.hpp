#pragma once

#include <stdexcept>
#include <string>

namespace cesent {

enum class ErrorCode {
  invalid_argument = 1,
  non_convergence = 2,
  grid_too_coarse = 3,
  ill_conditioned = 4,
  fit_failure = 5,
  parseval_failure = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::invalid_argument, what) {}
};

// Adaptive quadrature ran out of panels. Carries the best estimate reached.
struct NonConvergence : Error {
  NonConvergence(const std::string& what, double value, double achieved_error)
      : Error(ErrorCode::non_convergence, what), value(value), achieved_error(achieved_error) {}
  double value;
  double achieved_error;
};

struct GridTooCoarse : Error {
  explicit GridTooCoarse(const std::string& what) : Error(ErrorCode::grid_too_coarse, what) {}
};

struct IllConditioned : Error {
  explicit IllConditioned(const std::string& what) : Error(ErrorCode::ill_conditioned, what) {}
};

struct FitFailure : Error {
  explicit FitFailure(const std::string& what) : Error(ErrorCode::fit_failure, what) {}
};

struct ParsevalFailure : Error {
  explicit ParsevalFailure(const std::string& what) : Error(ErrorCode::parseval_failure, what) {}
};

}  // namespace cesent
