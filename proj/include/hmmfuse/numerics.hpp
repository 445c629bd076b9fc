#ifndef HMMFUSE_NUMERICS_HPP
#define HMMFUSE_NUMERICS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hmmfuse {

// Observable components are clamped into [kObservableEps, 1 - kObservableEps]
// so beta densities stay finite at the interval endpoints.
inline constexpr double kObservableEps = 1e-6;

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Raised when probability mass vanishes during inference (an annotation that
// is impossible under the current model, or a hard numeric underflow).
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised by file readers; carries the 1-based offending line.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

inline double clamp_unit(double x) {
  if (std::isnan(x)) {
    throw std::domain_error("observable is NaN");
  }
  return std::clamp(x, kObservableEps, 1.0 - kObservableEps);
}

inline double log_add(double a, double b) {
  if (b > a) std::swap(a, b);
  if (a == kNegInf) return a;
  return a + std::log1p(std::exp(b - a));
}

inline double log_sum_exp(const std::vector<double>& v) {
  if (v.empty()) return kNegInf;
  const double m = *std::max_element(v.begin(), v.end());
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

// lgamma for strictly positive arguments. Uses the reentrant glibc entry
// point when available; ::lgamma writes the sign through a global.
inline double lgamma_pos(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

}  // namespace hmmfuse

#endif  // HMMFUSE_NUMERICS_HPP
