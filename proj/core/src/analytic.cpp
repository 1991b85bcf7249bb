#include "catsim/analytic.hpp"

#include <cmath>

namespace catsim::analytic {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0)) {
    throw InvalidArgumentError("alpha must be positive");
  }
}

void require_xi_t(double xi_t) {
  if (xi_t < 0.0 || xi_t >= 1.0) {
    throw InvalidArgumentError("xi_T must lie in [0, 1)");
  }
}

double xi_t_checked(int n, double xi, double transmission) {
  if (n < 2) {
    throw InvalidArgumentError("tau: n must be >= 2");
  }
  if (!(xi > 0.0)) {
    throw InvalidArgumentError("tau: xi must be positive");
  }
  if (!(transmission > 0.0) || transmission > 1.0) {
    throw InvalidArgumentError("tau: transmission must be in (0, 1]");
  }
  return effective_xi_t(xi, transmission);
}

}  // namespace

CatNormalization cat_normalization(Complex beta) {
  const double b2 = std::norm(beta);
  const double e = std::exp(-2.0 * b2);
  CatNormalization out;
  out.beta = beta;
  out.m_plus = 1.0 / std::sqrt(2.0 * (1.0 + e));
  out.m_minus = 1.0 / std::sqrt(2.0 * (1.0 - e));
  return out;
}

double effective_xi_t(double xi, double transmission) {
  return transmission * transmission * std::tanh(xi);
}

HeraldClosedForm herald_closed_form(double xi, double transmission) {
  HeraldClosedForm out;
  out.xi = xi;
  out.transmission = transmission;
  out.xi_t = effective_xi_t(xi, transmission);
  const double sech = 1.0 / std::cosh(xi);
  if (out.xi_t > 0.0) {
    out.n_factor = std::pow(1.0 - out.xi_t * out.xi_t, 0.75) /
                   (std::sqrt(sech) * out.xi_t);
  }
  // T = 1 is the ideal-subtraction limit: nothing reaches the tap line.
  out.herald_prob =
      transmission == 1.0 ? 0.0 : herald_probability(xi, transmission);
  return out;
}

double fidelity_closed_form(double alpha, double xi_t) {
  require_alpha(alpha);
  require_xi_t(xi_t);
  const double a2 = alpha * alpha;
  return a2 * std::pow(1.0 - xi_t * xi_t, 1.5) * std::exp(a2 * xi_t) /
         std::sinh(a2);
}

double optimal_xi_t(double alpha) {
  require_alpha(alpha);
  const double a2 = alpha * alpha;
  return (std::sqrt(9.0 + 4.0 * a2 * a2) - 3.0) / (2.0 * a2);
}

AlphaOptimum max_fidelity_over_alpha(double xi_t) {
  require_xi_t(xi_t);
  // Stationarity in s = alpha^2: coth(s) - 1/s = xi_T. The left side grows
  // monotonically from 0 to 1, so bisection is enough.
  auto g = [](double s) {
    return (s < 1e-6) ? s / 3.0 : 1.0 / std::tanh(s) - 1.0 / s;
  };
  double lo = 1e-9;
  double hi = 2.0;
  while (g(hi) < xi_t) hi *= 2.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < xi_t ? lo : hi) = mid;
  }
  const double s = 0.5 * (lo + hi);
  AlphaOptimum out;
  out.alpha_star = std::sqrt(s);
  out.fidelity = fidelity_closed_form(out.alpha_star, xi_t);
  return out;
}

double herald_probability(double xi, double transmission) {
  if (!(xi > 0.0)) {
    throw InvalidArgumentError("herald_probability: xi must be positive");
  }
  if (!(transmission > 0.0) || transmission >= 1.0) {
    throw InvalidArgumentError(
        "herald_probability: transmission must be strictly inside (0, 1)");
  }
  const double t2 = transmission * transmission;
  const double xi_t = effective_xi_t(xi, transmission);
  const double sech = 1.0 / std::cosh(xi);
  return (1.0 - t2) / t2 * sech * xi_t * xi_t *
         std::pow(1.0 - xi_t * xi_t, -1.5);
}

double tau_printed(int n, double xi, double transmission) {
  const double xi_t = xi_t_checked(n, xi, transmission);
  const double sech = 1.0 / std::cosh(xi);
  const double n_factor_sq =
      std::pow(1.0 - xi_t * xi_t, 1.5) / (sech * xi_t * xi_t);
  return sech * n_factor_sq * std::pow(-xi_t, n);
}

double tau_exact(int n, double xi, double transmission) {
  const double xi_t = xi_t_checked(n, xi, transmission);
  return std::sqrt(n * (n - 1.0) / 2.0) * std::pow(-xi_t, n) *
         std::pow(1.0 - xi_t * xi_t, 1.5) / (std::sqrt(2.0) * xi_t * xi_t);
}

}  // namespace catsim::analytic
