#include "catsim/mode_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "catsim/factorials.hpp"

namespace catsim {

namespace {

void require_mode_count(const MixedState& s, size_t count, const char* where) {
  if (s.dims.size() != count) {
    throw InvalidArgumentError(std::string(where) + ": wrong number of modes");
  }
}

}  // namespace

double TwoModePureState::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  return total;
}

double TwoModePureState::norm() const { return std::sqrt(norm_squared()); }

bool TwoModePureState::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

double TwoModePureState::mean_photon() const {
  double total = 0.0;
  for (int na = 0; na <= cutoff_a; ++na) {
    for (int nb = 0; nb <= cutoff_b; ++nb) {
      total += (na + nb) * std::norm(at(na, nb));
    }
  }
  return total;
}

BeamSplitterSpec BeamSplitterSpec::from_transmission(double t) {
  if (!(t > 0.0) || t > 1.0) {
    throw InvalidArgumentError("beam splitter transmission must be in (0, 1]");
  }
  BeamSplitterSpec spec;
  spec.transmission = t;
  spec.theta = 2.0 * std::acos(t);
  spec.reflection = std::sqrt(std::max(0.0, 1.0 - t * t));
  return spec;
}

double MixedState::purity() const {
  double total = 0.0;
  const int n = dimension();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      total += std::norm(rho(i, j));
    }
  }
  return total;
}

bool MixedState::is_hermitian(double tol) const {
  const int n = dimension();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (std::abs(rho(i, j) - std::conj(rho(j, i))) > tol) return false;
    }
  }
  return true;
}

MixedState MixedState::from_pure(const PureState& s) {
  MixedState out{{s.dim()}, ComplexMatrix(s.dim(), s.dim())};
  out.rho.add_outer(s.amplitudes);
  return out;
}

MixedState MixedState::from_pure(const TwoModePureState& s) {
  const int d = s.dim_a() * s.dim_b();
  MixedState out{{s.dim_a(), s.dim_b()}, ComplexMatrix(d, d)};
  out.rho.add_outer(s.amplitudes);
  return out;
}

PureState annihilate(const PureState& s) {
  PureState out(s.cutoff);
  for (int n = 0; n < s.cutoff; ++n) {
    out[n] = std::sqrt(static_cast<double>(n + 1)) * s[n + 1];
  }
  out[s.cutoff] = 0.0;
  switch (s.parity) {
    case Parity::Even: out.parity = Parity::Odd; break;
    case Parity::Odd: out.parity = Parity::Even; break;
    case Parity::None: out.parity = Parity::None; break;
  }
  return out;
}

PureState attenuate(const PureState& s, double t) {
  if (!(t > 0.0) || t > 1.0) {
    throw InvalidArgumentError("attenuate: transmission must be in (0, 1]");
  }
  PureState out = s;
  double tn = 1.0;
  for (int n = 0; n <= s.cutoff; ++n) {
    out[n] = tn * s[n];
    tn *= t;
  }
  return out;
}

PureState phase_rotate(const PureState& s, double phi) {
  PureState out = s;
  for (int n = 0; n <= s.cutoff; ++n) {
    out[n] = std::polar(1.0, n * phi) * s[n];
  }
  return out;
}

TwoModePureState phase_rotate(const TwoModePureState& s, Mode mode,
                              double phi) {
  TwoModePureState out = s;
  for (int na = 0; na <= s.cutoff_a; ++na) {
    for (int nb = 0; nb <= s.cutoff_b; ++nb) {
      const int n = mode == Mode::A ? na : nb;
      out.at(na, nb) = std::polar(1.0, n * phi) * s.at(na, nb);
    }
  }
  return out;
}

TwoModePureState tensor(const PureState& a, const PureState& b) {
  TwoModePureState out(a.cutoff, b.cutoff);
  for (int na = 0; na <= a.cutoff; ++na) {
    for (int nb = 0; nb <= b.cutoff; ++nb) {
      out.at(na, nb) = a[na] * b[nb];
    }
  }
  return out;
}

Complex inner_product(const TwoModePureState& a, const TwoModePureState& b) {
  if (a.cutoff_a != b.cutoff_a || a.cutoff_b != b.cutoff_b) {
    throw InvalidArgumentError("inner_product: two-mode cutoff mismatch");
  }
  Complex total(0.0, 0.0);
  for (size_t i = 0; i < a.amplitudes.size(); ++i) {
    total += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return total;
}

double fidelity_pure(const TwoModePureState& a, const TwoModePureState& b) {
  if (!a.is_normalized() || !b.is_normalized()) {
    throw InvalidStateError("fidelity_pure: inputs must be normalized");
  }
  return std::clamp(std::norm(inner_product(a, b)), 0.0, 1.0);
}

TwoModePureState beam_splitter(const TwoModePureState& s,
                               const BeamSplitterSpec& spec,
                               double leak_tolerance) {
  if (!s.is_normalized()) {
    throw InvalidStateError("beam_splitter: input must be normalized");
  }
  const double t = spec.transmission;
  const double r = spec.reflection;
  const int ca = s.cutoff_a;
  const int cb = s.cutoff_b;

  // Highest total photon number with any input weight.
  int n_top = -1;
  for (int na = 0; na <= ca; ++na) {
    for (int nb = 0; nb <= cb; ++nb) {
      if (s.at(na, nb) != Complex(0.0, 0.0)) n_top = std::max(n_top, na + nb);
    }
  }

  TwoModePureState out(ca, cb);
  double leaked = 0.0;

  // Block recursion: within total photon number n the unitary is an
  // (n+1) x (n+1) real matrix B_n over components |p, n-p>, built from
  // B_{n-1} by adding one photon through the Heisenberg maps
  // a^dag -> T a^dag + R b^dag and b^dag -> -R a^dag + T b^dag.
  std::vector<double> prev(1, 1.0);
  std::vector<double> cur;
  std::vector<Complex> in_block, out_block;

  if (n_top >= 0 && s.at(0, 0) != Complex(0.0, 0.0)) {
    out.at(0, 0) = s.at(0, 0);
  }

  for (int n = 1; n <= n_top; ++n) {
    cur.assign(static_cast<size_t>(n + 1) * (n + 1), 0.0);
    auto b_prev = [&](int m, int p) -> double {
      if (m < 0 || m > n - 1) return 0.0;
      return prev[static_cast<size_t>(m) * n + p];
    };
    for (int m = 0; m <= n; ++m) {
      // Column p = 0 comes from raising mode B of the n-1 block.
      cur[static_cast<size_t>(m) * (n + 1)] =
          (-r * std::sqrt(static_cast<double>(m)) * b_prev(m - 1, 0) +
           t * std::sqrt(static_cast<double>(n - m)) * b_prev(m, 0)) /
          std::sqrt(static_cast<double>(n));
      for (int p = 1; p <= n; ++p) {
        cur[static_cast<size_t>(m) * (n + 1) + p] =
            (t * std::sqrt(static_cast<double>(m)) * b_prev(m - 1, p - 1) +
             r * std::sqrt(static_cast<double>(n - m)) * b_prev(m, p - 1)) /
            std::sqrt(static_cast<double>(p));
      }
    }

    const int p_lo = std::max(0, n - cb);
    const int p_hi = std::min(ca, n);
    in_block.assign(static_cast<size_t>(n + 1), Complex(0.0, 0.0));
    bool any = false;
    for (int p = p_lo; p <= p_hi; ++p) {
      in_block[static_cast<size_t>(p)] = s.at(p, n - p);
      if (in_block[static_cast<size_t>(p)] != Complex(0.0, 0.0)) any = true;
    }
    if (any) {
      out_block.assign(static_cast<size_t>(n + 1), Complex(0.0, 0.0));
      for (int m = 0; m <= n; ++m) {
        Complex acc(0.0, 0.0);
        for (int p = p_lo; p <= p_hi; ++p) {
          acc += cur[static_cast<size_t>(m) * (n + 1) + p] *
                 in_block[static_cast<size_t>(p)];
        }
        out_block[static_cast<size_t>(m)] = acc;
      }
      for (int m = 0; m <= n; ++m) {
        if (m <= ca && n - m <= cb) {
          out.at(m, n - m) = out_block[static_cast<size_t>(m)];
        } else {
          leaked += std::norm(out_block[static_cast<size_t>(m)]);
        }
      }
    }
    prev.swap(cur);
  }

  if (leaked > leak_tolerance) {
    throw TruncationError("beam_splitter: leakage above cutoff", leaked);
  }
  return out;
}

std::vector<double> fock_probabilities(const TwoModePureState& s, Mode mode) {
  const int dim = mode == Mode::A ? s.dim_a() : s.dim_b();
  std::vector<double> probs(static_cast<size_t>(dim), 0.0);
  for (int na = 0; na <= s.cutoff_a; ++na) {
    for (int nb = 0; nb <= s.cutoff_b; ++nb) {
      probs[static_cast<size_t>(mode == Mode::A ? na : nb)] +=
          std::norm(s.at(na, nb));
    }
  }
  return probs;
}

HeraldResult project_fock(const TwoModePureState& s, Mode mode, int n) {
  const int measured_cutoff = mode == Mode::A ? s.cutoff_a : s.cutoff_b;
  if (n < 0 || n > measured_cutoff) {
    throw InvalidArgumentError("project_fock: outcome beyond measured cutoff");
  }
  const int kept_cutoff = mode == Mode::A ? s.cutoff_b : s.cutoff_a;
  PureState kept(kept_cutoff);
  double probability = 0.0;
  for (int k = 0; k <= kept_cutoff; ++k) {
    const Complex amp = mode == Mode::A ? s.at(n, k) : s.at(k, n);
    kept[k] = amp;
    probability += std::norm(amp);
  }
  if (probability < kZeroNormThreshold) {
    throw ImpossibleOutcomeError("project_fock: outcome probability is zero");
  }
  const double inv = 1.0 / std::sqrt(probability);
  for (auto& a : kept.amplitudes) a *= inv;
  return HeraldResult{kept, probability};
}

OnOffResult project_on_off(const TwoModePureState& s, Mode mode, bool click) {
  const int measured_cutoff = mode == Mode::A ? s.cutoff_a : s.cutoff_b;
  const int kept_cutoff = mode == Mode::A ? s.cutoff_b : s.cutoff_a;
  const int kept_dim = kept_cutoff + 1;

  MixedState out{{kept_dim}, ComplexMatrix(kept_dim, kept_dim)};
  double probability = 0.0;
  std::vector<Complex> slice(static_cast<size_t>(kept_dim));
  const int first = click ? 1 : 0;
  const int last = click ? measured_cutoff : 0;
  for (int n = first; n <= last; ++n) {
    for (int k = 0; k <= kept_cutoff; ++k) {
      slice[static_cast<size_t>(k)] = mode == Mode::A ? s.at(n, k) : s.at(k, n);
    }
    out.rho.add_outer(slice);
    for (const auto& a : slice) probability += std::norm(a);
  }
  if (probability < kZeroNormThreshold) {
    throw ImpossibleOutcomeError("project_on_off: outcome probability is zero");
  }
  out.rho *= 1.0 / probability;
  return OnOffResult{out, probability};
}

MixedState partial_trace(const TwoModePureState& s, Mode keep) {
  const int kept_dim = keep == Mode::A ? s.dim_a() : s.dim_b();
  const int other_dim = keep == Mode::A ? s.dim_b() : s.dim_a();
  MixedState out{{kept_dim}, ComplexMatrix(kept_dim, kept_dim)};
  for (int i = 0; i < kept_dim; ++i) {
    for (int j = 0; j < kept_dim; ++j) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k < other_dim; ++k) {
        const Complex lhs = keep == Mode::A ? s.at(i, k) : s.at(k, i);
        const Complex rhs = keep == Mode::A ? s.at(j, k) : s.at(k, j);
        acc += lhs * std::conj(rhs);
      }
      out.rho(i, j) = acc;
    }
  }
  return out;
}

MixedState partial_trace(const MixedState& s, Mode keep) {
  require_mode_count(s, 2, "partial_trace");
  const int da = s.dims[0];
  const int db = s.dims[1];
  const int kept_dim = keep == Mode::A ? da : db;
  const int other_dim = keep == Mode::A ? db : da;
  MixedState out{{kept_dim}, ComplexMatrix(kept_dim, kept_dim)};
  auto flat = [db](int a, int b) { return a * db + b; };
  for (int i = 0; i < kept_dim; ++i) {
    for (int j = 0; j < kept_dim; ++j) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k < other_dim; ++k) {
        acc += keep == Mode::A ? s.rho(flat(i, k), flat(j, k))
                               : s.rho(flat(k, i), flat(k, j));
      }
      out.rho(i, j) = acc;
    }
  }
  return out;
}

namespace {

void require_eta(double eta) {
  if (eta < 0.0 || eta > 1.0) {
    throw InvalidArgumentError("loss_channel: eta must be in [0, 1]");
  }
}

// sqrt(C(n, j) eta^(n-j) (1-eta)^j), the Kraus amplitude taking |n> to
// |n-j> under a pure-loss channel of transmissivity eta in (0, 1).
double kraus_amplitude(int n, int j, double eta) {
  return std::exp(0.5 * (log_binomial(n, j) + (n - j) * std::log(eta) +
                         j * std::log(1.0 - eta)));
}

}  // namespace

MixedState loss_channel(const PureState& s, double eta) {
  require_eta(eta);
  const int d = s.dim();
  if (eta == 1.0) return MixedState::from_pure(s);
  MixedState out{{d}, ComplexMatrix(d, d)};
  if (eta == 0.0) {
    out.rho(0, 0) = s.norm_squared();
    return out;
  }
  std::vector<Complex> damped(static_cast<size_t>(d));
  for (int j = 0; j <= s.cutoff; ++j) {
    std::fill(damped.begin(), damped.end(), Complex(0.0, 0.0));
    for (int m = 0; m + j <= s.cutoff; ++m) {
      damped[static_cast<size_t>(m)] = kraus_amplitude(m + j, j, eta) * s[m + j];
    }
    out.rho.add_outer(damped);
  }
  return out;
}

MixedState loss_channel(const TwoModePureState& s, Mode mode, double eta) {
  require_eta(eta);
  const int d = s.dim_a() * s.dim_b();
  if (eta == 1.0) return MixedState::from_pure(s);
  MixedState out{{s.dim_a(), s.dim_b()}, ComplexMatrix(d, d)};
  const int lossy_cutoff = mode == Mode::A ? s.cutoff_a : s.cutoff_b;
  std::vector<Complex> damped(static_cast<size_t>(d));
  for (int j = 0; j <= lossy_cutoff; ++j) {
    std::fill(damped.begin(), damped.end(), Complex(0.0, 0.0));
    for (int na = 0; na <= s.cutoff_a; ++na) {
      for (int nb = 0; nb <= s.cutoff_b; ++nb) {
        const int n_lossy = mode == Mode::A ? na : nb;
        double factor;
        if (eta == 0.0) {
          factor = (n_lossy == j) ? 1.0 : 0.0;
        } else {
          if (n_lossy < j) continue;
          factor = kraus_amplitude(n_lossy, j, eta);
        }
        if (factor == 0.0) continue;
        const int ma = mode == Mode::A ? na - j : na;
        const int mb = mode == Mode::B ? nb - j : nb;
        damped[static_cast<size_t>(ma) * s.dim_b() + mb] =
            factor * s.at(na, nb);
      }
    }
    out.rho.add_outer(damped);
  }
  return out;
}

MixedState loss_channel(const MixedState& s, Mode mode, double eta) {
  require_eta(eta);
  if (eta == 1.0) return s;
  const size_t n_modes = s.dims.size();
  if (n_modes != 1 && n_modes != 2) {
    throw InvalidArgumentError("loss_channel: expected one or two modes");
  }
  if (n_modes == 1 && mode != Mode::A) {
    throw InvalidArgumentError("loss_channel: single-mode state has no mode B");
  }
  const int da = s.dims[0];
  const int db = n_modes == 2 ? s.dims[1] : 1;
  const int lossy_dim = mode == Mode::A ? da : db;
  auto flat = [db](int a, int b) { return a * db + b; };

  MixedState out{s.dims, ComplexMatrix(s.dimension(), s.dimension())};
  for (int j = 0; j < lossy_dim; ++j) {
    // K_j rho K_j^dagger accumulated entry by entry.
    for (int na = 0; na < da; ++na) {
      for (int nb = 0; nb < db; ++nb) {
        const int n_lossy = mode == Mode::A ? na : nb;
        if (n_lossy + j >= lossy_dim) continue;
        const int src_row = mode == Mode::A ? flat(na + j, nb) : flat(na, nb + j);
        double lhs;
        if (eta == 0.0) {
          if (n_lossy != 0) continue;
          lhs = 1.0;
        } else {
          lhs = kraus_amplitude(n_lossy + j, j, eta);
        }
        for (int ma = 0; ma < da; ++ma) {
          for (int mb = 0; mb < db; ++mb) {
            const int m_lossy = mode == Mode::A ? ma : mb;
            if (m_lossy + j >= lossy_dim) continue;
            const int src_col =
                mode == Mode::A ? flat(ma + j, mb) : flat(ma, mb + j);
            double rhs;
            if (eta == 0.0) {
              if (m_lossy != 0) continue;
              rhs = 1.0;
            } else {
              rhs = kraus_amplitude(m_lossy + j, j, eta);
            }
            out.rho(flat(na, nb), flat(ma, mb)) +=
                lhs * rhs * s.rho(src_row, src_col);
          }
        }
      }
    }
  }
  return out;
}

double trace_distance(const MixedState& rho, const MixedState& sigma) {
  if (rho.dimension() != sigma.dimension()) {
    throw InvalidArgumentError("trace_distance: dimension mismatch");
  }
  ComplexMatrix diff = rho.rho - sigma.rho;
  double total = 0.0;
  for (double ev : hermitian_eigenvalues(diff)) total += std::abs(ev);
  return std::clamp(0.5 * total, 0.0, 1.0);
}

namespace {

// W(alpha) = (1/pi) Tr[rho D(2 alpha) Pi], evaluated diagonal by diagonal
// of the displacement matrix. With every scale factor folded in, the
// recurrence runs over t_m = sqrt(m!/(m+k)!) y^k e^{-x/2} L_m^(k)(x) for
// x = |2 alpha|^2, whose values stay bounded by one; that keeps the far
// wings of the grid free of the growth the naive column recursion suffers.
template <typename DensityElement>
double wigner_point(int dim, Complex alpha, const DensityElement& rho,
                    std::vector<double>& t) {
  const Complex two_alpha = 2.0 * alpha;
  const double x = std::norm(two_alpha);
  const double y = std::abs(two_alpha);
  const double theta = std::arg(two_alpha);

  double total = 0.0;
  const int max_k = y == 0.0 ? 0 : dim - 1;
  for (int k = 0; k <= max_k; ++k) {
    const int count = dim - k;
    t.resize(static_cast<size_t>(count));
    t[0] = std::exp(k * (k > 0 ? std::log(y) : 0.0) - 0.5 * log_factorial(k) -
                    0.5 * x);
    if (count > 1) {
      t[1] = (k + 1.0 - x) / std::sqrt(k + 1.0) * t[0];
    }
    for (int m = 1; m + 1 < count; ++m) {
      t[static_cast<size_t>(m + 1)] =
          ((2.0 * m + k + 1.0 - x) * t[static_cast<size_t>(m)] -
           std::sqrt(m * (m + static_cast<double>(k))) *
               t[static_cast<size_t>(m - 1)]) /
          std::sqrt((m + 1.0) * (m + 1.0 + k));
    }
    Complex acc(0.0, 0.0);
    double sign = 1.0;
    for (int m = 0; m < count; ++m) {
      acc += sign * rho(m, m + k) * t[static_cast<size_t>(m)];
      sign = -sign;
    }
    if (k == 0) {
      total += acc.real();
    } else {
      total += 2.0 * (std::polar(1.0, k * theta) * acc).real();
    }
  }
  return total / std::numbers::pi;
}

template <typename DensityElement>
WignerGrid wigner_of_elements(int dim, const DensityElement& rho,
                              const WignerWindow& window) {
  if (window.points < 2) {
    throw InvalidArgumentError("wigner: need at least 2 points per axis");
  }
  WignerGrid grid;
  grid.xs.resize(static_cast<size_t>(window.points));
  grid.ps.resize(static_cast<size_t>(window.points));
  for (int i = 0; i < window.points; ++i) {
    const double f = static_cast<double>(i) / (window.points - 1);
    grid.xs[static_cast<size_t>(i)] =
        window.x_min + f * (window.x_max - window.x_min);
    grid.ps[static_cast<size_t>(i)] =
        window.p_min + f * (window.p_max - window.p_min);
  }

  grid.values.assign(grid.xs.size() * grid.ps.size(), 0.0);
  std::vector<double> scratch;
  for (size_t i = 0; i < grid.xs.size(); ++i) {
    for (size_t j = 0; j < grid.ps.size(); ++j) {
      const Complex alpha((grid.xs[i] + Complex(0.0, 1.0) * grid.ps[j]) /
                          std::sqrt(2.0));
      grid.values[i * grid.ps.size() + j] =
          wigner_point(dim, alpha, rho, scratch);
    }
  }
  return grid;
}

}  // namespace

WignerGrid wigner(const PureState& s, const WignerWindow& window) {
  const auto& amps = s.amplitudes;
  return wigner_of_elements(
      s.dim(),
      [&amps](int m, int n) {
        return amps[static_cast<size_t>(m)] *
               std::conj(amps[static_cast<size_t>(n)]);
      },
      window);
}

WignerGrid wigner(const MixedState& s, const WignerWindow& window) {
  if (s.dims.size() != 1) {
    throw InvalidArgumentError("wigner: expected a single-mode density matrix");
  }
  return wigner_of_elements(
      s.dimension(), [&s](int m, int n) { return s.rho(m, n); }, window);
}

std::vector<double> quadrature_pdf(const PureState& s, double phi,
                                   const std::vector<double>& xs) {
  if (!s.is_normalized()) {
    throw InvalidStateError("quadrature_pdf: input must be normalized");
  }
  std::vector<double> pdf(xs.size(), 0.0);
  // chi_n(x) = 2^{-1/4} phi_n(x / sqrt 2) with the standard oscillator
  // eigenfunctions phi_n; the vacuum density then has unit variance.
  for (size_t i = 0; i < xs.size(); ++i) {
    const double y = xs[i] / std::sqrt(2.0);
    double prev = 0.0;
    double cur = std::pow(2.0 * std::numbers::pi, -0.25) *
                 std::exp(-xs[i] * xs[i] / 4.0);
    Complex amp(0.0, 0.0);
    for (int n = 0; n <= s.cutoff; ++n) {
      amp += s[n] * std::polar(1.0, n * phi) * cur;
      const double next = std::sqrt(2.0 / (n + 1.0)) * y * cur -
                          std::sqrt(n / (n + 1.0)) * prev;
      prev = cur;
      cur = next;
    }
    pdf[i] = std::norm(amp);
  }
  return pdf;
}

}  // namespace catsim
