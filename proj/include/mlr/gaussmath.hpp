#pragma once

#include <span>

namespace mlr::gauss {

// Parameters of one Gaussian significance distribution.
struct GaussianParam {
  double mu;
  double sigma;  // standard deviation, must be > 0 and finite
};

// Distribution of the difference of two independent Gaussians.
struct DiffGaussian {
  double mu_d;
  double sigma_d;
};

struct LogQGrad {
  double d_mu;
  double d_sigma;
};

// Scaled complementary error function exp(x^2) * erfc(x).
// Finite and accurate for every x >= 0; below ~ -26 the reflection
// 2*exp(x^2) - erfcx(-x) overflows to +inf, which is the true limit.
double erfcx(double x);

// Standard normal CDF / log-CDF / hazard phi(t)/Phi(t), all safe across
// the whole double range: log_norm_cdf never returns -inf or NaN for
// finite t, hazard tracks the -t asymptote in the left tail.
double norm_cdf(double t);
double norm_log_cdf(double t);
double norm_hazard(double t);

// Q(mu, sigma) = P(z > 0) for z ~ N(mu, sigma^2) = Phi(mu/sigma).
// Clamped into the open interval (0, 1). Throws std::domain_error on
// sigma <= 0 or non-finite parameters.
double q_positive(const GaussianParam& p);

// log Q(mu, sigma), computed without underflow; finite for all finite mu.
double log_q(const GaussianParam& p);

// Exact partial derivatives of log_q with respect to mu and sigma.
// With t = mu/sigma and h(t) = pdf(t)/CDF(t):
//   d/dmu = h(t)/sigma,  d/dsigma = -t*h(t)/sigma.
LogQGrad grad_log_q(const GaussianParam& p);

// Difference distribution: mu_u - mu_v, sqrt(sigma_u^2 + sigma_v^2).
DiffGaussian diff_gaussian(const GaussianParam& u, const GaussianParam& v);

// Maximum-likelihood fit: sample mean and population (1/n) standard
// deviation. Throws std::domain_error on fewer than two samples or zero
// variance.
GaussianParam fit_gaussian(std::span<const double> samples);

}  // namespace mlr::gauss
