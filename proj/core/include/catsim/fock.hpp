#ifndef CATSIM_FOCK_HPP
#define CATSIM_FOCK_HPP

#include <complex>
#include <vector>

#include "catsim/errors.hpp"

namespace catsim {

using Complex = std::complex<double>;

/// Exact-support flag: Even means every odd amplitude is exactly zero,
/// Odd means every even amplitude is exactly zero.
enum class Parity { None, Even, Odd };

enum class CatSign { Plus, Minus };

enum class StateKind { Coherent, Squeezed, Cat };

inline constexpr double kDefaultTailTolerance = 1e-12;
inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kZeroNormThreshold = 1e-14;
inline constexpr int kDefaultCutoff = 60;

/// One bosonic mode truncated at Fock index `cutoff`.
/// amplitudes[n] = <n|psi>, n = 0..cutoff.
struct PureState {
  int cutoff = 0;
  std::vector<Complex> amplitudes;
  Parity parity = Parity::None;

  PureState() = default;
  PureState(int cutoff_, Parity parity_ = Parity::None)
      : cutoff(cutoff_), amplitudes(cutoff_ + 1, Complex(0.0, 0.0)),
        parity(parity_) {}

  int dim() const { return cutoff + 1; }
  Complex& operator[](int n) { return amplitudes[static_cast<size_t>(n)]; }
  const Complex& operator[](int n) const {
    return amplitudes[static_cast<size_t>(n)];
  }

  double norm_squared() const;
  double norm() const;
  double mean_photon() const;
  bool is_normalized(double tol = kNormTolerance) const;
};

/// Probability weight an analytic state places above the cutoff.
struct TruncationReport {
  double tail_mass = 0.0;
  bool acceptable = false;
};

struct Normalized {
  PureState state;
  double norm = 0.0;  // norm of the input, before scaling
};

PureState make_vacuum(int cutoff);

PureState make_fock(int n, int cutoff);

/// Coherent state |beta>: amplitudes e^{-|beta|^2/2} beta^m / sqrt(m!),
/// renormalized to absorb the (checked) truncation loss.
PureState make_coherent(Complex beta, int cutoff,
                        double tail_tolerance = kDefaultTailTolerance);

/// Squeezed vacuum: amplitudes sqrt(sech xi) * sqrt((2l)!)/l! *
/// (-tanh(xi)/2)^l on even indices, exact zeros on odd indices.
/// Negative xi flips the sign of tanh(xi), making every coefficient
/// positive; that variant feeds mode B of the entangling protocol.
PureState make_squeezed_vacuum(double xi, int cutoff,
                               double tail_tolerance = kDefaultTailTolerance);

/// Even (+) or odd (-) superposition of |beta> and |-beta>. The odd cat
/// is built from its odd-index series, the even cat from the two-term
/// superposition; the complementary indices are exact zeros.
PureState make_cat(Complex beta, CatSign sign, int cutoff,
                   double tail_tolerance = kDefaultTailTolerance);

/// <a|b> = sum conj(a_n) b_n. Cutoffs must match.
Complex inner_product(const PureState& a, const PureState& b);

/// |<a|b>|^2 for normalized inputs; symmetric, in [0, 1].
double fidelity_pure(const PureState& a, const PureState& b);

/// Unit-norm copy plus the pre-normalization norm. Throws ZeroStateError
/// below kZeroNormThreshold (e.g. after annihilating the vacuum).
Normalized normalize(const PureState& a);

/// Tail mass of the analytic coefficient series beyond `cutoff`, summed
/// in closed form up to a far horizon (4x cutoff). `Cat` means the odd cat.
TruncationReport truncation_tail(StateKind kind, Complex parameter, int cutoff,
                                 double tolerance = kDefaultTailTolerance);

}  // namespace catsim

#endif
