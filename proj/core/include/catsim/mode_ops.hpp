#ifndef CATSIM_MODE_OPS_HPP
#define CATSIM_MODE_OPS_HPP

#include <variant>
#include <vector>

#include "catsim/fock.hpp"
#include "catsim/linalg.hpp"

namespace catsim {

enum class Mode { A, B };

/// Two bosonic modes on a (cutoff_a+1) x (cutoff_b+1) amplitude grid,
/// row-major in n_A: amplitudes[n_a * (cutoff_b+1) + n_b] = <n_a, n_b|Psi>.
struct TwoModePureState {
  int cutoff_a = 0;
  int cutoff_b = 0;
  std::vector<Complex> amplitudes;

  TwoModePureState() = default;
  TwoModePureState(int cutoff_a_, int cutoff_b_)
      : cutoff_a(cutoff_a_), cutoff_b(cutoff_b_),
        amplitudes(static_cast<size_t>(cutoff_a_ + 1) * (cutoff_b_ + 1),
                   Complex(0.0, 0.0)) {}

  int dim_a() const { return cutoff_a + 1; }
  int dim_b() const { return cutoff_b + 1; }

  Complex& at(int na, int nb) {
    return amplitudes[static_cast<size_t>(na) * dim_b() + nb];
  }
  const Complex& at(int na, int nb) const {
    return amplitudes[static_cast<size_t>(na) * dim_b() + nb];
  }

  double norm_squared() const;
  double norm() const;
  bool is_normalized(double tol = kNormTolerance) const;
  double mean_photon() const;  // <n_A + n_B>
};

/// Beam splitter of amplitude transmissivity T = cos(theta/2). The unitary
/// convention is pinned so that creation operators map as
///   a^dag -> T a^dag + R b^dag,   b^dag -> -R a^dag + T b^dag,
/// documented in the README; every heralding identity is tested against it.
struct BeamSplitterSpec {
  double transmission = 1.0;
  double theta = 0.0;
  double reflection = 0.0;

  static BeamSplitterSpec from_transmission(double t);
};

/// Post-selected state (single- or two-mode) plus the outcome probability.
struct HeraldResult {
  std::variant<PureState, TwoModePureState> state;
  double probability = 0.0;

  const PureState& single_mode() const { return std::get<PureState>(state); }
};

/// Density matrix over one or two truncated modes. `dims` lists the
/// per-mode dimensions; their product equals rho.rows(). Two-mode indices
/// flatten row-major in n_A, matching TwoModePureState.
struct MixedState {
  std::vector<int> dims;
  ComplexMatrix rho;

  int dimension() const { return rho.rows(); }
  double purity() const;
  bool is_hermitian(double tol = 1e-10) const;

  static MixedState from_pure(const PureState& s);
  static MixedState from_pure(const TwoModePureState& s);
};

struct OnOffResult {
  MixedState state;
  double probability = 0.0;
};

// --- single-mode linear operators -----------------------------------------

/// a|psi>: out[n] = sqrt(n+1) psi[n+1]. Not renormalized.
PureState annihilate(const PureState& s);

/// T^(a^dag a)|psi>: out[n] = T^n psi[n]. Not renormalized. 0 < T <= 1.
PureState attenuate(const PureState& s, double t);

/// Phase rotation: out[n] = e^{i n phi} psi[n].
PureState phase_rotate(const PureState& s, double phi);
TwoModePureState phase_rotate(const TwoModePureState& s, Mode mode, double phi);

TwoModePureState tensor(const PureState& a, const PureState& b);

/// <a|b> over matching two-mode grids.
Complex inner_product(const TwoModePureState& a, const TwoModePureState& b);

/// |<a|b>|^2 for normalized two-mode states.
double fidelity_pure(const TwoModePureState& a, const TwoModePureState& b);

/// Applies the beam splitter exactly within each total-photon-number block
/// (blocks built by a stable one-photon recursion). Amplitude weight that
/// would land outside the grid is accumulated; above `leak_tolerance` the
/// call fails with TruncationError.
TwoModePureState beam_splitter(const TwoModePureState& s,
                               const BeamSplitterSpec& spec,
                               double leak_tolerance = 1e-9);

/// Marginal Fock distribution of one mode: P(n_mode = n).
std::vector<double> fock_probabilities(const TwoModePureState& s, Mode mode);

/// Ideal number-resolving projection <n| on one mode; returns the
/// renormalized remaining mode and the outcome probability.
HeraldResult project_fock(const TwoModePureState& s, Mode mode, int n);

/// On-off (click / no-click) POVM {|0><0|, 1 - |0><0|} on one mode;
/// the remaining mode is generally mixed.
OnOffResult project_on_off(const TwoModePureState& s, Mode mode, bool click);

MixedState partial_trace(const TwoModePureState& s, Mode keep);
MixedState partial_trace(const MixedState& s, Mode keep);

/// Pure-loss channel of transmissivity eta (transmitted energy fraction),
/// realized by Kraus operators of a vacuum-ancilla beam splitter with
/// amplitude transmissivity sqrt(eta).
MixedState loss_channel(const PureState& s, double eta);
MixedState loss_channel(const TwoModePureState& s, Mode mode, double eta);
MixedState loss_channel(const MixedState& s, Mode mode, double eta);

/// (1/2) sum |eig(rho - sigma)| via the Jacobi eigensolver; in [0, 1].
double trace_distance(const MixedState& rho, const MixedState& sigma);

// --- phase-space views ------------------------------------------------------

struct WignerWindow {
  double x_min = -5.0;
  double x_max = 5.0;
  double p_min = -5.0;
  double p_max = 5.0;
  int points = 101;  // per axis, >= 2
};

/// W sampled on the window grid; value(i, j) pairs with (xs[i], ps[j]).
struct WignerGrid {
  std::vector<double> xs;
  std::vector<double> ps;
  std::vector<double> values;  // row-major over xs

  double value(int i, int j) const {
    return values[static_cast<size_t>(i) * ps.size() + j];
  }
};

/// Displaced-parity Wigner function at alpha = (x + ip)/sqrt(2), normalized
/// so the grid integral over dx dp is 1 (vacuum peak 1/pi).
WignerGrid wigner(const PureState& s, const WignerWindow& window);
WignerGrid wigner(const MixedState& s, const WignerWindow& window);

/// Homodyne quadrature density p(x|phi) = |sum_n psi_n e^{i n phi} chi_n(x)|^2
/// with harmonic-oscillator eigenfunctions scaled so the vacuum has unit
/// variance (x_hat = a + a^dag).
std::vector<double> quadrature_pdf(const PureState& s, double phi,
                                   const std::vector<double>& xs);

}  // namespace catsim

#endif
