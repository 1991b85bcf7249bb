#ifndef CATSIM_FACTORIALS_HPP
#define CATSIM_FACTORIALS_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace catsim {

/// ln(n!) from a cumulative table of ln(k). Exact products are used up to
/// n = 30; beyond that the log-space sum keeps coefficients finite for the
/// Fock indices (hundreds) this library works with.
double log_factorial(int n);

/// ln C(n, k); requires 0 <= k <= n.
double log_binomial(int n, int k);

}  // namespace catsim

#endif
