#ifndef LQSYN_ERRORS_HPP
#define LQSYN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lqsyn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// Cholesky pivot went nonpositive; `pivot` is the failing row.
struct NotPositiveDefinite : Error {
  NotPositiveDefinite(const std::string& msg, int pivot_index)
      : Error(msg), pivot(pivot_index) {}
  int pivot;
};

struct NotPsd : Error {
  using Error::Error;
};

struct ConvergenceFailure : Error {
  using Error::Error;
};

struct RankDeficient : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct DSingular : Error {
  using Error::Error;
};

struct SingularInnovation : Error {
  using Error::Error;
};

struct SingularCovariance : Error {
  using Error::Error;
};

struct NonAffine : Error {
  using Error::Error;
};

struct AllInfeasible : Error {
  using Error::Error;
};

struct NumericalBreakdown : Error {
  NumericalBreakdown(const std::string& msg, int at_iteration)
      : Error(msg), iteration(at_iteration) {}
  int iteration;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace lqsyn

#endif
