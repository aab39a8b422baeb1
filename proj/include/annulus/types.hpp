#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace annulus {

using Cx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Broad failure classes, used by the CLI to pick an exit code:
// invalid_input -> 3, non_convergence -> 2, everything else -> 1.
enum class ErrorKind { invalid_input, domain, non_convergence, internal };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

struct MonotonicityViolation : Error {
  explicit MonotonicityViolation(const std::string& w)
      : Error(ErrorKind::invalid_input, w) {}
};

struct OrientationError : Error {
  explicit OrientationError(const std::string& w)
      : Error(ErrorKind::invalid_input, w) {}
};

struct InvalidParameter : Error {
  explicit InvalidParameter(const std::string& w)
      : Error(ErrorKind::invalid_input, w) {}
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& w)
      : Error(ErrorKind::invalid_input, w) {}
};

struct DomainViolation : Error {
  explicit DomainViolation(const std::string& w)
      : Error(ErrorKind::domain, w) {}
};

struct RangeViolation : Error {
  explicit RangeViolation(const std::string& w)
      : Error(ErrorKind::domain, w) {}
};

struct ZeroInImage : Error {
  explicit ZeroInImage(const std::string& w) : Error(ErrorKind::domain, w) {}
};

struct DerivativeVanishes : Error {
  explicit DerivativeVanishes(const std::string& w)
      : Error(ErrorKind::domain, w) {}
};

struct AliasingError : Error {
  explicit AliasingError(const std::string& w)
      : Error(ErrorKind::non_convergence, w) {}
};

struct NotStarlikeFallbackFailed : Error {
  explicit NotStarlikeFallbackFailed(const std::string& w)
      : Error(ErrorKind::non_convergence, w) {}
};

struct WeldNonConvergence : Error {
  WeldNonConvergence(const std::string& w, double residual,
                     std::vector<std::pair<double, double>> trace)
      : Error(ErrorKind::non_convergence, w),
        final_residual(residual),
        continuation_trace(std::move(trace)) {}
  double final_residual;
  // (continuation parameter, residual) pairs recorded before giving up.
  std::vector<std::pair<double, double>> continuation_trace;
};

struct InversionFailure : Error {
  explicit InversionFailure(const std::string& w)
      : Error(ErrorKind::non_convergence, w) {}
};

struct UnivalenceFailure : Error {
  explicit UnivalenceFailure(const std::string& w)
      : Error(ErrorKind::non_convergence, w) {}
};

struct ClassificationError : Error {
  explicit ClassificationError(const std::string& w)
      : Error(ErrorKind::invalid_input, w) {}
};

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace annulus
