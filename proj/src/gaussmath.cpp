#include "mlr/gaussmath.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mlr::gauss {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
constexpr double kSqrt2OverPi = 0.79788456080286535588;

void check_param(const GaussianParam& p) {
  if (!(p.sigma > 0.0) || !std::isfinite(p.sigma) || !std::isfinite(p.mu)) {
    throw std::domain_error("GaussianParam: sigma must be positive and finite, mu finite");
  }
}

double norm_log_pdf(double t) { return -0.5 * t * t - 0.91893853320467274178; }

}  // namespace

double erfcx(double x) {
  if (x < 0.0) {
    // reflection; overflows to +inf for x < ~ -26.6, the true limit
    return 2.0 * std::exp(x * x) - erfcx(-x);
  }
  if (x < 24.0) {
    // erfc(x) is a normal double up to x ~ 26.5, so the product is exact
    // to a few ulp here
    return std::exp(x * x) * std::erfc(x);
  }
  // asymptotic series 1/(x sqrt(pi)) * sum (-1)^k (2k-1)!!/(2x^2)^k;
  // truncation below 1e-15 relative for x >= 24
  const double q = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 8; ++k) {
    term *= -(2.0 * k - 1.0) * q;
    sum += term;
  }
  return sum / (x * 1.77245385090551602730);  // sqrt(pi)
}

double norm_cdf(double t) {
  return 0.5 * std::erfc(-t * kInvSqrt2);
}

double norm_log_cdf(double t) {
  if (t >= 0.0) {
    // Phi(t) near 1: log1p keeps full relative accuracy of the tail
    return std::log1p(-0.5 * std::erfc(t * kInvSqrt2));
  }
  const double x = -t * kInvSqrt2;
  if (t >= -5.0) {
    return std::log(0.5 * std::erfc(x));
  }
  // deep tail: log Phi(t) = -t^2/2 + log(erfcx(x)/2); finite for all t
  return -0.5 * t * t + std::log(0.5 * erfcx(x));
}

double norm_hazard(double t) {
  if (t >= -5.0) {
    return std::exp(norm_log_pdf(t)) / norm_cdf(t);
  }
  // pdf/CDF = sqrt(2/pi) / erfcx(-t/sqrt(2)); approaches -t as t -> -inf
  return kSqrt2OverPi / erfcx(-t * kInvSqrt2);
}

double q_positive(const GaussianParam& p) {
  check_param(p);
  const double q = norm_cdf(p.mu / p.sigma);
  constexpr double lo = std::numeric_limits<double>::denorm_min();
  const double hi = 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
  return std::fmax(lo, std::fmin(q, hi));
}

double log_q(const GaussianParam& p) {
  check_param(p);
  return norm_log_cdf(p.mu / p.sigma);
}

LogQGrad grad_log_q(const GaussianParam& p) {
  check_param(p);
  const double t = p.mu / p.sigma;
  const double h = norm_hazard(t);
  return {h / p.sigma, -t * h / p.sigma};
}

DiffGaussian diff_gaussian(const GaussianParam& u, const GaussianParam& v) {
  check_param(u);
  check_param(v);
  return {u.mu - v.mu, std::sqrt(u.sigma * u.sigma + v.sigma * v.sigma)};
}

GaussianParam fit_gaussian(std::span<const double> samples) {
  const size_t n = samples.size();
  if (n < 2) throw std::domain_error("fit_gaussian: need at least 2 samples");
  double mean = 0.0;
  for (double x : samples) mean += x;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double x : samples) var += (x - mean) * (x - mean);
  var /= static_cast<double>(n);
  if (var == 0.0) throw std::domain_error("fit_gaussian: zero variance");
  return {mean, std::sqrt(var)};
}

}  // namespace mlr::gauss
