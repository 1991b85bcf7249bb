#ifndef CATSIM_ANALYTIC_HPP
#define CATSIM_ANALYTIC_HPP

#include <complex>

#include "catsim/fock.hpp"

// Closed-form expressions for the heralded photon-subtraction protocol.
// Everything here is independent of the numeric simulator; the test suite
// holds the two routes against each other.
namespace catsim::analytic {

struct CatNormalization {
  Complex beta;
  double m_plus = 0.0;   // 1 / sqrt(2 (1 + e^{-2|beta|^2}))
  double m_minus = 0.0;  // 1 / sqrt(2 (1 - e^{-2|beta|^2}))
};

CatNormalization cat_normalization(Complex beta);

/// Effective squeezing parameter of the heralded state: xi_T = T^2 tanh(xi).
double effective_xi_t(double xi, double transmission);

struct HeraldClosedForm {
  double xi = 0.0;
  double transmission = 0.0;
  double xi_t = 0.0;
  double n_factor = 0.0;     // (1 - xi_T^2)^{3/4} / (sqrt(sech xi) xi_T)
  double herald_prob = 0.0;  // matches herald_probability(xi, T)
};

HeraldClosedForm herald_closed_form(double xi, double transmission);

/// Fidelity between the heralded state and the odd cat of amplitude
/// i*alpha:  F = alpha^2 (1 - xi_T^2)^{3/2} exp(alpha^2 xi_T) / sinh(alpha^2).
double fidelity_closed_form(double alpha, double xi_t);

/// Stationary point of the fidelity in xi_T at fixed alpha:
/// xi_T* = (sqrt(9 + 4 alpha^4) - 3) / (2 alpha^2), the unique maximum.
double optimal_xi_t(double alpha);

struct AlphaOptimum {
  double alpha_star = 0.0;
  double fidelity = 0.0;
};

/// Maximum of the fidelity over alpha at fixed xi_T, located by solving
/// the stationarity condition coth(s) - 1/s = xi_T for s = alpha^2.
AlphaOptimum max_fidelity_over_alpha(double xi_t);

/// Probability of the single-photon herald:
/// (1 - T^2)/T^2 * sech(xi) * xi_T^2 (1 - xi_T^2)^{-3/2}, for 0 < T < 1.
double herald_probability(double xi, double transmission);

/// The entangled-output coefficient in its commonly quoted form:
/// sech(xi) (N^T_xi)^2 (-xi_T)^n. Kept for comparison; it omits a
/// combinatorial factor (see tau_exact) and is not asserted against the
/// simulation.
double tau_printed(int n, double xi, double transmission);

/// Coefficient of |n-2>|n> in the normalized simulated entangled output:
/// sqrt(n(n-1)/2) (-xi_T)^n (1 - xi_T^2)^{3/2} / (sqrt(2) xi_T^2),
/// normalized so that sum_n 2 tau_exact(n)^2 = 1.
double tau_exact(int n, double xi, double transmission);

}  // namespace catsim::analytic

#endif
