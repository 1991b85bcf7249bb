#include "catsim/protocols.hpp"

#include <algorithm>
#include <cmath>

namespace catsim::protocols {

namespace {

constexpr double kGoldenRatio = 0.6180339887498949;  // (sqrt(5) - 1) / 2

void validate_config(const ProtocolConfig& cfg, bool needs_positive_xi) {
  if (!(cfg.transmission > 0.0) || cfg.transmission > 1.0) {
    throw InvalidArgumentError("transmission must be in (0, 1]");
  }
  if (!(cfg.alpha > 0.0)) {
    throw InvalidArgumentError("alpha must be positive");
  }
  if (!(cfg.eta_det > 0.0) || cfg.eta_det > 1.0) {
    throw InvalidArgumentError("eta_det must be in (0, 1]");
  }
  if (cfg.cutoff < 2) {
    throw InvalidArgumentError("cutoff must be >= 2");
  }
  if (needs_positive_xi ? !(cfg.xi > 0.0) : cfg.xi < 0.0) {
    throw InvalidArgumentError("xi must be nonnegative");
  }
}

// Detection-line POVM weight for registering exactly one photon when k
// photons reach a detector of efficiency eta.
double click_weight(int k, double eta) {
  if (k < 1) return 0.0;
  if (eta == 1.0) return k == 1 ? 1.0 : 0.0;
  return k * eta * std::pow(1.0 - eta, k - 1);
}

int auto_cutoff_for_xi(double xi_hi, double tail_tolerance) {
  for (int cutoff = kDefaultCutoff; cutoff <= 400; cutoff += 20) {
    if (truncation_tail(StateKind::Squeezed, Complex(xi_hi, 0.0), cutoff,
                        tail_tolerance)
            .acceptable) {
      return cutoff;
    }
  }
  return 400;
}

}  // namespace

double golden_section_maximize(const std::function<double(double)>& f,
                               double lo, double hi, double tol) {
  double a = lo;
  double b = hi;
  double x1 = b - kGoldenRatio * (b - a);
  double x2 = a + kGoldenRatio * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGoldenRatio * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGoldenRatio * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

PureState subtracted_squeezed_state(double xi, double transmission, int cutoff,
                                    double tail_tolerance) {
  const PureState squeezed = make_squeezed_vacuum(xi, cutoff, tail_tolerance);
  return normalize(annihilate(attenuate(squeezed, transmission))).state;
}

CatProtocolResult run_cat_protocol(const ProtocolConfig& cfg) {
  validate_config(cfg, false);

  const PureState squeezed =
      make_squeezed_vacuum(cfg.xi, cfg.cutoff, cfg.tail_tolerance);
  const TwoModePureState joint =
      tensor(squeezed, make_vacuum(cfg.cutoff));
  const BeamSplitterSpec spec =
      BeamSplitterSpec::from_transmission(cfg.transmission);
  const TwoModePureState split = beam_splitter(joint, spec);

  // Below the slice threshold used next, so the k = 1 component always exists.
  constexpr double kMinTapWeight = 1e-13;
  const std::vector<double> tap_probs = fock_probabilities(split, Mode::B);
  if (tap_probs[1] < kMinTapWeight) {
    throw ZeroStateError(
        "run_cat_protocol: no photon reaches the detector, nothing to subtract");
  }

  // Slices of the kept mode conditioned on the tap photon number. With an
  // ideal detector only k = 1 matters; an inefficient detector can register
  // one photon out of k, leaving a mixture over these pure components.
  std::vector<PureState> slices;
  std::vector<double> weights;  // click_weight(k) * P_k
  double click_probability = 0.0;
  for (int k = 1; k < static_cast<int>(tap_probs.size()); ++k) {
    if (tap_probs[static_cast<size_t>(k)] < kMinTapWeight) continue;
    const double w = click_weight(k, cfg.eta_det) * tap_probs[static_cast<size_t>(k)];
    if (w < 1e-20) continue;
    slices.push_back(project_fock(split, Mode::B, k).single_mode());
    weights.push_back(w);
    click_probability += w;
  }

  auto mixture_fidelity = [&](double alpha) {
    const PureState cat = make_cat(Complex(0.0, alpha), CatSign::Minus,
                                   cfg.cutoff, cfg.tail_tolerance);
    double total = 0.0;
    for (size_t i = 0; i < slices.size(); ++i) {
      total += weights[i] * fidelity_pure(cat, slices[i]);
    }
    return total / click_probability;
  };

  CatProtocolResult result;
  result.herald = HeraldResult{slices.front(), click_probability};
  result.fidelity_vs_target = mixture_fidelity(cfg.alpha);
  const double alpha_star =
      golden_section_maximize(mixture_fidelity, 0.1, 3.0, 1e-6);
  result.best_alpha = BestAlpha{alpha_star, mixture_fidelity(alpha_star)};
  return result;
}

std::vector<SweepRow> sweep_fig2(const std::vector<double>& alphas,
                                 const SweepRange& xi_range, int cutoff,
                                 double tail_tolerance) {
  if (xi_range.steps < 1 || !(xi_range.max >= xi_range.min) ||
      !(xi_range.min > 0.0)) {
    throw InvalidArgumentError("sweep_fig2: malformed xi range");
  }
  std::vector<SweepRow> rows;
  rows.reserve(alphas.size() * static_cast<size_t>(xi_range.steps));
  for (double alpha : alphas) {
    const PureState cat =
        make_cat(Complex(0.0, alpha), CatSign::Minus, cutoff, tail_tolerance);
    for (int i = 0; i < xi_range.steps; ++i) {
      const double f = xi_range.steps == 1
                           ? 0.0
                           : static_cast<double>(i) / (xi_range.steps - 1);
      const double xi = xi_range.min + f * (xi_range.max - xi_range.min);
      const PureState subtracted =
          subtracted_squeezed_state(xi, 1.0, cutoff, tail_tolerance);
      rows.push_back(SweepRow{alpha, xi, fidelity_pure(subtracted, cat)});
    }
  }
  return rows;
}

std::vector<ContourRow> contour_fig3(const SweepRange& xi_t_range,
                                     const SweepRange& alpha_range) {
  if (xi_t_range.steps < 1 || alpha_range.steps < 1 ||
      xi_t_range.min < 0.0 || xi_t_range.max >= 1.0 ||
      !(alpha_range.min > 0.0)) {
    throw InvalidArgumentError("contour_fig3: malformed ranges");
  }
  std::vector<ContourRow> rows;
  rows.reserve(static_cast<size_t>(xi_t_range.steps) * alpha_range.steps);
  for (int i = 0; i < xi_t_range.steps; ++i) {
    const double fi = xi_t_range.steps == 1
                          ? 0.0
                          : static_cast<double>(i) / (xi_t_range.steps - 1);
    const double xi_t = xi_t_range.min + fi * (xi_t_range.max - xi_t_range.min);
    for (int j = 0; j < alpha_range.steps; ++j) {
      const double fj = alpha_range.steps == 1
                            ? 0.0
                            : static_cast<double>(j) / (alpha_range.steps - 1);
      const double alpha =
          alpha_range.min + fj * (alpha_range.max - alpha_range.min);
      rows.push_back(
          ContourRow{xi_t, alpha, analytic::fidelity_closed_form(alpha, xi_t)});
    }
  }
  return rows;
}

namespace {

struct HeraldedArm {
  PureState state;
  double probability;
};

HeraldedArm heralded_arm(double xi, const ProtocolConfig& cfg) {
  const PureState squeezed =
      make_squeezed_vacuum(xi, cfg.cutoff, cfg.tail_tolerance);
  const TwoModePureState joint = tensor(squeezed, make_vacuum(cfg.cutoff));
  const BeamSplitterSpec spec =
      BeamSplitterSpec::from_transmission(cfg.transmission);
  HeraldResult herald = project_fock(beam_splitter(joint, spec), Mode::B, 1);
  return HeraldedArm{herald.single_mode(), herald.probability};
}

}  // namespace

EcsProtocolResult run_ecs_protocol(const ProtocolConfig& cfg) {
  validate_config(cfg, true);

  const HeraldedArm arm_a = heralded_arm(cfg.xi, cfg);
  const HeraldedArm arm_b = heralded_arm(-cfg.xi, cfg);
  const BeamSplitterSpec balanced =
      BeamSplitterSpec::from_transmission(1.0 / std::sqrt(2.0));

  EcsProtocolResult result;
  result.state = beam_splitter(tensor(arm_a.state, arm_b.state), balanced);
  result.herald_probability_a = arm_a.probability;
  result.herald_probability_b = arm_b.probability;
  result.xi_t = analytic::effective_xi_t(cfg.xi, cfg.transmission);
  for (int n = 2; n <= cfg.cutoff; ++n) {
    result.coefficients[n] = result.state.at(n - 2, n);
  }

  const PureState cat_a = make_cat(Complex(0.0, cfg.alpha), CatSign::Minus,
                                   cfg.cutoff, cfg.tail_tolerance);
  const PureState cat_b = make_cat(Complex(cfg.alpha, 0.0), CatSign::Minus,
                                   cfg.cutoff, cfg.tail_tolerance);
  const TwoModePureState target =
      beam_splitter(tensor(cat_a, cat_b), balanced);
  result.fidelity_vs_qudit_ecs = fidelity_pure(target, result.state);
  return result;
}

HeraldResult extract_logical(const TwoModePureState& state, int herald_n) {
  if (herald_n != 2 && herald_n != 4) {
    throw InvalidArgumentError("extract_logical: herald_n must be 2 or 4");
  }
  return project_fock(state, Mode::A, herald_n);
}

std::vector<NoonRow> noon_loss_experiment(int photons, double eta,
                                          const std::vector<double>& phase_samples,
                                          const ProtocolConfig& cfg) {
  validate_config(cfg, true);
  if (photons < 1 || photons > cfg.cutoff) {
    throw InvalidArgumentError("noon_loss_experiment: need 1 <= N <= cutoff");
  }
  if (eta < 0.0 || eta > 1.0) {
    throw InvalidArgumentError("noon_loss_experiment: eta must be in [0, 1]");
  }

  TwoModePureState noon(cfg.cutoff, cfg.cutoff);
  noon.at(photons, 0) = 1.0 / std::sqrt(2.0);
  noon.at(0, photons) = 1.0 / std::sqrt(2.0);

  // Entangled two-mode output rebuilt from its exact coefficient law and
  // renormalized on the truncated support.
  TwoModePureState ecs(cfg.cutoff, cfg.cutoff);
  for (int n = 2; n <= cfg.cutoff; ++n) {
    const double tau = analytic::tau_exact(n, cfg.xi, cfg.transmission);
    ecs.at(n - 2, n) = tau;
    ecs.at(n, n - 2) = -tau;
  }
  const double ecs_norm = ecs.norm();
  for (auto& a : ecs.amplitudes) a /= ecs_norm;

  std::vector<NoonRow> rows;
  for (const auto& [label, state] :
       {std::pair<std::string, const TwoModePureState*>{"noon", &noon},
        std::pair<std::string, const TwoModePureState*>{"ecs", &ecs}}) {
    const MixedState reference = loss_channel(*state, Mode::B, eta);
    for (double theta : phase_samples) {
      const MixedState rotated =
          loss_channel(phase_rotate(*state, Mode::A, theta), Mode::B, eta);
      rows.push_back(NoonRow{label, theta, eta,
                             trace_distance(rotated, reference)});
    }
  }
  return rows;
}

XiOptimum optimize_fidelity(double alpha, double transmission, double xi_lo,
                            double xi_hi, int cutoff) {
  if (!(alpha > 0.0)) {
    throw InvalidArgumentError("optimize_fidelity: alpha must be positive");
  }
  if (!(transmission > 0.0) || transmission > 1.0) {
    throw InvalidArgumentError(
        "optimize_fidelity: transmission must be in (0, 1]");
  }
  if (!(xi_lo > 0.0) || !(xi_hi > xi_lo)) {
    throw InvalidArgumentError("optimize_fidelity: malformed xi interval");
  }
  const int used_cutoff =
      cutoff > 0 ? cutoff : auto_cutoff_for_xi(xi_hi, kDefaultTailTolerance);
  const PureState cat = make_cat(Complex(0.0, alpha), CatSign::Minus,
                                 used_cutoff, kDefaultTailTolerance);
  auto objective = [&](double xi) {
    return fidelity_pure(
        subtracted_squeezed_state(xi, transmission, used_cutoff), cat);
  };
  XiOptimum out;
  out.xi_star = golden_section_maximize(objective, xi_lo, xi_hi, 1e-5);
  out.fidelity = objective(out.xi_star);
  return out;
}

}  // namespace catsim::protocols
