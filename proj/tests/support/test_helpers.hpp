#ifndef CATSIM_TEST_HELPERS_HPP
#define CATSIM_TEST_HELPERS_HPP

#include <cmath>
#include <random>

#include "catsim/mode_ops.hpp"

namespace catsim::testing {

/// Random normalized single-mode state, deterministic for a given seed.
inline PureState random_pure_state(int cutoff, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  PureState s(cutoff);
  for (int n = 0; n <= cutoff; ++n) {
    s[n] = Complex(dist(rng), dist(rng));
  }
  const double norm = s.norm();
  for (auto& a : s.amplitudes) a /= norm;
  return s;
}

/// Random normalized two-mode state supported on total photon number
/// <= max_total, so a beam splitter cannot leak outside the grid.
inline TwoModePureState random_two_mode_state(int cutoff_a, int cutoff_b,
                                              int max_total, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  TwoModePureState s(cutoff_a, cutoff_b);
  for (int na = 0; na <= cutoff_a; ++na) {
    for (int nb = 0; nb <= cutoff_b; ++nb) {
      if (na + nb > max_total) continue;
      s.at(na, nb) = Complex(dist(rng), dist(rng));
    }
  }
  const double norm = s.norm();
  for (auto& a : s.amplitudes) a /= norm;
  return s;
}

inline double max_amplitude_gap(const PureState& a, const PureState& b) {
  double worst = 0.0;
  for (int n = 0; n <= a.cutoff; ++n) {
    worst = std::max(worst, std::abs(a[n] - b[n]));
  }
  return worst;
}

}  // namespace catsim::testing

#endif
