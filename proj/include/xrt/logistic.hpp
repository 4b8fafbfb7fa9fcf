#ifndef XRT_LOGISTIC_HPP
#define XRT_LOGISTIC_HPP

#include <cmath>

#include "xrt/errors.hpp"

namespace xrt {

// Location/scale pair of a logistic distribution. The mean equals the
// location; the standard deviation equals scale * pi / sqrt(3).
struct LogisticParams {
  double location = 0.0;
  double scale = 1.0;
};

// Inverse CDF: location + scale * ln(u / (1 - u)). Strictly increasing in u.
inline double logistic_quantile(const LogisticParams& params, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw Error(ErrorCode::InvalidProbability,
                "logistic_quantile: u must lie strictly inside (0, 1)");
  }
  return params.location + params.scale * std::log(u / (1.0 - u));
}

inline double logistic_cdf(const LogisticParams& params, double x) {
  double z = (x - params.location) / params.scale;
  return 1.0 / (1.0 + std::exp(-z));
}

inline double logistic_pdf(const LogisticParams& params, double x) {
  double z = (x - params.location) / params.scale;
  double e = std::exp(-std::abs(z));
  double denom = (1.0 + e) * (1.0 + e);
  return e / (params.scale * denom);
}

// CDF of the distribution conditioned on X > 0, which is what a
// rejection-resampled positive draw follows.
inline double logistic_cdf_positive(const LogisticParams& params, double x) {
  if (x <= 0.0) return 0.0;
  double f0 = logistic_cdf(params, 0.0);
  return (logistic_cdf(params, x) - f0) / (1.0 - f0);
}

// Mean of the distribution conditioned on X > 0 (closed form via the
// quantile integral). Quantifies the bias introduced by rejecting
// non-positive draws.
inline double logistic_mean_positive(const LogisticParams& params) {
  double f0 = logistic_cdf(params, 0.0);
  if (f0 <= 0.0) return params.location;
  double entropy_term = f0 * std::log(f0) + (1.0 - f0) * std::log1p(-f0);
  return params.location - params.scale * entropy_term / (1.0 - f0);
}

// Method-of-moments scale estimate from a sample standard deviation,
// sd * sqrt(3) / pi. Used as the starting point for likelihood refinement.
inline double logistic_scale_from_std(double sd) {
  return sd * std::sqrt(3.0) / 3.14159265358979323846;
}

}  // namespace xrt

#endif  // XRT_LOGISTIC_HPP
