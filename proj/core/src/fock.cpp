#include "catsim/fock.hpp"

#include <algorithm>
#include <cmath>

#include "catsim/factorials.hpp"

namespace catsim {

namespace {

constexpr int kExactFactorialLimit = 30;

std::vector<double> build_log_factorial_table() {
  std::vector<double> table(1025, 0.0);
  double exact = 1.0;
  for (int n = 1; n <= kExactFactorialLimit; ++n) {
    exact *= static_cast<double>(n);
    table[static_cast<size_t>(n)] = std::log(exact);
  }
  for (size_t n = kExactFactorialLimit + 1; n < table.size(); ++n) {
    table[n] = table[n - 1] + std::log(static_cast<double>(n));
  }
  return table;
}

const std::vector<double>& log_factorial_table() {
  static const std::vector<double> table = build_log_factorial_table();
  return table;
}

void require_cutoff(int cutoff) {
  if (cutoff < 1) {
    throw InvalidArgumentError("cutoff must be >= 1");
  }
}

void require_tail(StateKind kind, Complex parameter, int cutoff,
                  double tolerance, const char* what) {
  TruncationReport report = truncation_tail(kind, parameter, cutoff, tolerance);
  if (!report.acceptable) {
    throw TruncationError(std::string(what) +
                              ": analytic tail beyond cutoff exceeds tolerance",
                          report.tail_mass);
  }
}

void renormalize_in_place(PureState& s) {
  double n = s.norm();
  for (auto& a : s.amplitudes) a /= n;
}

// log |c_m| of the coherent series, m >= 0 (beta != 0).
double coherent_log_mag(double abs_beta, int m) {
  return -0.5 * abs_beta * abs_beta + m * std::log(abs_beta) -
         0.5 * log_factorial(m);
}

}  // namespace

double log_factorial(int n) {
  const auto& table = log_factorial_table();
  if (n < 0) throw InvalidArgumentError("log_factorial: negative argument");
  if (static_cast<size_t>(n) < table.size()) {
    return table[static_cast<size_t>(n)];
  }
  double value = table.back();
  for (int k = static_cast<int>(table.size()); k <= n; ++k) {
    value += std::log(static_cast<double>(k));
  }
  return value;
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) {
    throw InvalidArgumentError("log_binomial: require 0 <= k <= n");
  }
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double PureState::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  return total;
}

double PureState::norm() const { return std::sqrt(norm_squared()); }

double PureState::mean_photon() const {
  double total = 0.0;
  for (int n = 0; n <= cutoff; ++n) {
    total += n * std::norm(amplitudes[static_cast<size_t>(n)]);
  }
  return total;
}

bool PureState::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

PureState make_vacuum(int cutoff) {
  require_cutoff(cutoff);
  PureState s(cutoff, Parity::Even);
  s[0] = 1.0;
  return s;
}

PureState make_fock(int n, int cutoff) {
  require_cutoff(cutoff);
  if (n < 0 || n > cutoff) {
    throw InvalidArgumentError("make_fock: need 0 <= n <= cutoff");
  }
  PureState s(cutoff, n % 2 == 0 ? Parity::Even : Parity::Odd);
  s[n] = 1.0;
  return s;
}

PureState make_coherent(Complex beta, int cutoff, double tail_tolerance) {
  require_cutoff(cutoff);
  if (beta == Complex(0.0, 0.0)) {
    PureState s = make_vacuum(cutoff);
    s.parity = Parity::None;
    return s;
  }
  require_tail(StateKind::Coherent, beta, cutoff, tail_tolerance,
               "make_coherent");
  const double abs_beta = std::abs(beta);
  const double arg_beta = std::arg(beta);
  PureState s(cutoff);
  for (int m = 0; m <= cutoff; ++m) {
    s[m] = std::exp(coherent_log_mag(abs_beta, m)) *
           std::polar(1.0, m * arg_beta);
  }
  renormalize_in_place(s);
  return s;
}

PureState make_squeezed_vacuum(double xi, int cutoff, double tail_tolerance) {
  require_cutoff(cutoff);
  if (xi == 0.0) {
    return make_vacuum(cutoff);
  }
  require_tail(StateKind::Squeezed, Complex(xi, 0.0), cutoff, tail_tolerance,
               "make_squeezed_vacuum");
  const double t = std::tanh(xi);
  const double half_log_sech = 0.5 * std::log(1.0 / std::cosh(xi));
  PureState s(cutoff, Parity::Even);
  for (int l = 0; 2 * l <= cutoff; ++l) {
    double log_mag = half_log_sech + 0.5 * log_factorial(2 * l) -
                     log_factorial(l) + l * std::log(std::abs(t) / 2.0);
    double sign = (t > 0.0 && l % 2 == 1) ? -1.0 : 1.0;
    s[2 * l] = sign * std::exp(log_mag);
  }
  renormalize_in_place(s);
  return s;
}

PureState make_cat(Complex beta, CatSign sign, int cutoff,
                   double tail_tolerance) {
  require_cutoff(cutoff);
  const double abs_beta = std::abs(beta);
  if (abs_beta < 1e-3) {
    throw DegenerateAmplitudeError(
        "make_cat: |beta| < 1e-3, odd-cat normalization degenerates");
  }
  require_tail(StateKind::Cat, beta, cutoff, tail_tolerance, "make_cat");
  const double arg_beta = std::arg(beta);
  const int start = sign == CatSign::Minus ? 1 : 0;
  PureState s(cutoff, sign == CatSign::Minus ? Parity::Odd : Parity::Even);
  for (int m = start; m <= cutoff; m += 2) {
    s[m] = std::exp(coherent_log_mag(abs_beta, m)) *
           std::polar(1.0, m * arg_beta);
  }
  renormalize_in_place(s);
  return s;
}

Complex inner_product(const PureState& a, const PureState& b) {
  if (a.cutoff != b.cutoff) {
    throw InvalidArgumentError("inner_product: cutoff mismatch");
  }
  Complex total(0.0, 0.0);
  for (int n = 0; n <= a.cutoff; ++n) {
    total += std::conj(a[n]) * b[n];
  }
  return total;
}

double fidelity_pure(const PureState& a, const PureState& b) {
  if (!a.is_normalized() || !b.is_normalized()) {
    throw InvalidStateError("fidelity_pure: inputs must be normalized");
  }
  double f = std::norm(inner_product(a, b));
  return std::clamp(f, 0.0, 1.0);
}

Normalized normalize(const PureState& a) {
  double n = a.norm();
  if (n < kZeroNormThreshold) {
    throw ZeroStateError("normalize: zero state");
  }
  Normalized result{a, n};
  for (auto& amp : result.state.amplitudes) amp /= n;
  return result;
}

TruncationReport truncation_tail(StateKind kind, Complex parameter, int cutoff,
                                 double tolerance) {
  require_cutoff(cutoff);
  const int horizon = std::max(4 * cutoff, cutoff + 64);
  double tail = 0.0;
  switch (kind) {
    case StateKind::Coherent: {
      const double abs_beta = std::abs(parameter);
      if (abs_beta > 0.0) {
        for (int n = cutoff + 1; n <= horizon; ++n) {
          tail += std::exp(2.0 * coherent_log_mag(abs_beta, n));
        }
      }
      break;
    }
    case StateKind::Squeezed: {
      const double t = std::abs(std::tanh(parameter.real()));
      if (t > 0.0) {
        for (int l = cutoff / 2 + 1; 2 * l <= horizon; ++l) {
          double log_mag2 = std::log(std::sqrt(1.0 - t * t)) +
                            log_factorial(2 * l) - 2.0 * log_factorial(l) +
                            2.0 * l * std::log(t / 2.0);
          tail += std::exp(log_mag2);
        }
      }
      break;
    }
    case StateKind::Cat: {
      // Odd-cat series: coherent coefficients restricted to odd indices
      // with the 2 M^-_beta e^{-|beta|^2/2} prefactor.
      const double abs_beta = std::abs(parameter);
      if (abs_beta > 0.0) {
        const double b2 = abs_beta * abs_beta;
        const double m_minus_sq = 1.0 / (2.0 * (1.0 - std::exp(-2.0 * b2)));
        for (int n = cutoff + 1; n <= horizon; ++n) {
          if (n % 2 == 0) continue;
          tail += 4.0 * m_minus_sq * std::exp(2.0 * coherent_log_mag(abs_beta, n));
        }
      }
      break;
    }
  }
  return TruncationReport{tail, tail <= tolerance};
}

}  // namespace catsim
