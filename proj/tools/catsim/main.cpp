// catsim command-line tool: every experiment is a subcommand that writes
// plain CSV/JSON plot data plus a run manifest, deterministically.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catsim/analytic.hpp"
#include "catsim/io.hpp"
#include "catsim/protocols.hpp"
#include "catsim/version.hpp"

namespace {

using catsim::Complex;
using catsim::io::format_double;

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitImpossible = 4;

std::string json_escape(const std::string& raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out;
}

struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;  // name, JSON
  std::vector<std::string> outputs;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  void param(const std::string& name, double value) {
    parameters.emplace_back(name, format_double(value));
  }
  void param(const std::string& name, int value) {
    parameters.emplace_back(name, std::to_string(value));
  }
  void param(const std::string& name, const std::string& value) {
    parameters.emplace_back(name, "\"" + json_escape(value) + "\"");
  }
  void param(const std::string& name, const std::vector<double>& values) {
    std::string json = "[";
    for (size_t i = 0; i < values.size(); ++i) {
      if (i) json += ',';
      json += format_double(values[i]);
    }
    json += ']';
    parameters.emplace_back(name, json);
  }

  // Written next to the primary output as <out>.manifest.json. The
  // parameters section reproduces the run; the duration is informational.
  void write(const std::string& primary_output) const {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::string json = "{\"command\":\"" + command + "\",\"version\":\"" +
                       catsim::kVersion + "\",\"parameters\":{";
    for (size_t i = 0; i < parameters.size(); ++i) {
      if (i) json += ',';
      json += "\"" + parameters[i].first + "\":" + parameters[i].second;
    }
    json += "},\"outputs\":[";
    for (size_t i = 0; i < outputs.size(); ++i) {
      if (i) json += ',';
      json += "\"" + json_escape(outputs[i]) + "\"";
    }
    json += "],\"duration_seconds\":" + format_double(seconds) + "}\n";
    catsim::io::write_text_file(primary_output + ".manifest.json", json);
  }
};

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> xs(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double f = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    xs[static_cast<size_t>(i)] = lo + f * (hi - lo);
  }
  return xs;
}

// ---------------------------------------------------------------------------

struct HeraldArgs {
  double xi = 0.0;
  double transmission = 0.0;
  double alpha = 0.0;
  double eta_det = 1.0;
  int cutoff = catsim::kDefaultCutoff;
  double tolerance = catsim::kDefaultTailTolerance;
  int seed = 0;
  std::string out;
};

int cmd_herald(const HeraldArgs& args) {
  RunManifest manifest;
  manifest.command = "herald";
  manifest.param("xi", args.xi);
  manifest.param("transmission", args.transmission);
  manifest.param("alpha", args.alpha);
  manifest.param("eta_det", args.eta_det);
  manifest.param("cutoff", args.cutoff);
  manifest.param("tolerance", args.tolerance);
  manifest.param("seed", args.seed);
  manifest.param("out", args.out);

  catsim::protocols::ProtocolConfig cfg;
  cfg.xi = args.xi;
  cfg.transmission = args.transmission;
  cfg.alpha = args.alpha;
  cfg.eta_det = args.eta_det;
  cfg.cutoff = args.cutoff;
  cfg.tail_tolerance = args.tolerance;
  const catsim::protocols::CatProtocolResult result =
      catsim::protocols::run_cat_protocol(cfg);

  std::string json = "{\"herald_probability\":";
  json += format_double(result.herald.probability);
  json += ",\"fidelity\":" + format_double(result.fidelity_vs_target);
  json += ",\"alpha_star\":" + format_double(result.best_alpha.alpha);
  json += ",\"best_fidelity\":" + format_double(result.best_alpha.fidelity);
  json += ",\"state\":" + catsim::io::state_to_json(result.herald.single_mode());
  json += "}\n";
  catsim::io::write_text_file(args.out, json);
  manifest.outputs.push_back(args.out);
  manifest.write(args.out);
  return 0;
}

struct Fig2Args {
  std::vector<double> alphas{1.2, 1.4, 1.6};
  double xi_min = 0.01;
  double xi_max = 1.2;
  int xi_steps = 200;
  int cutoff = catsim::kDefaultCutoff;
  double tolerance = 1e-5;
  int seed = 0;
  std::string out;
};

int cmd_fig2(const Fig2Args& args) {
  RunManifest manifest;
  manifest.command = "fig2";
  manifest.param("alphas", args.alphas);
  manifest.param("xi_min", args.xi_min);
  manifest.param("xi_max", args.xi_max);
  manifest.param("xi_steps", args.xi_steps);
  manifest.param("cutoff", args.cutoff);
  manifest.param("tolerance", args.tolerance);
  manifest.param("seed", args.seed);
  manifest.param("out", args.out);

  const auto rows = catsim::protocols::sweep_fig2(
      args.alphas, {args.xi_min, args.xi_max, args.xi_steps}, args.cutoff,
      args.tolerance);
  std::string csv = "alpha,xi,fidelity\n";
  for (const auto& row : rows) {
    csv += format_double(row.alpha) + "," + format_double(row.xi) + "," +
           format_double(row.fidelity) + "\n";
  }
  catsim::io::write_text_file(args.out, csv);
  manifest.outputs.push_back(args.out);
  manifest.write(args.out);
  return 0;
}

struct Fig3Args {
  double xi_t_min = 0.0;
  double xi_t_max = 0.9;
  int xi_t_steps = 181;
  double alpha_min = 0.1;
  double alpha_max = 3.0;
  int alpha_steps = 146;
  int cutoff = 0;
  double tolerance = 0.0;
  int seed = 0;
  std::string out;
};

int cmd_fig3(const Fig3Args& args) {
  RunManifest manifest;
  manifest.command = "fig3";
  manifest.param("xi_t_min", args.xi_t_min);
  manifest.param("xi_t_max", args.xi_t_max);
  manifest.param("xi_t_steps", args.xi_t_steps);
  manifest.param("alpha_min", args.alpha_min);
  manifest.param("alpha_max", args.alpha_max);
  manifest.param("alpha_steps", args.alpha_steps);
  manifest.param("seed", args.seed);
  manifest.param("out", args.out);

  const auto rows = catsim::protocols::contour_fig3(
      {args.xi_t_min, args.xi_t_max, args.xi_t_steps},
      {args.alpha_min, args.alpha_max, args.alpha_steps});
  std::string csv = "xi_T,alpha,fidelity\n";
  for (const auto& row : rows) {
    csv += format_double(row.xi_t) + "," + format_double(row.alpha) + "," +
           format_double(row.fidelity) + "\n";
  }
  catsim::io::write_text_file(args.out, csv);
  manifest.outputs.push_back(args.out);
  manifest.write(args.out);
  return 0;
}

struct EcsArgs {
  double xi = 0.0;
  double transmission = 0.0;
  double alpha = 1.2;
  int cutoff = 40;
  double tolerance = catsim::kDefaultTailTolerance;
  int seed = 0;
  std::string out;
};

catsim::protocols::EcsProtocolResult run_ecs(const EcsArgs& args) {
  catsim::protocols::ProtocolConfig cfg;
  cfg.xi = args.xi;
  cfg.transmission = args.transmission;
  cfg.alpha = args.alpha;
  cfg.cutoff = args.cutoff;
  cfg.tail_tolerance = args.tolerance;
  return catsim::protocols::run_ecs_protocol(cfg);
}

int cmd_ecs(const EcsArgs& args) {
  RunManifest manifest;
  manifest.command = "ecs";
  manifest.param("xi", args.xi);
  manifest.param("transmission", args.transmission);
  manifest.param("alpha", args.alpha);
  manifest.param("cutoff", args.cutoff);
  manifest.param("tolerance", args.tolerance);
  manifest.param("seed", args.seed);
  manifest.param("out", args.out);

  const auto result = run_ecs(args);
  std::string json = "{\"xi_t\":" + format_double(result.xi_t);
  json += ",\"fidelity_vs_qudit_ecs\":" +
          format_double(result.fidelity_vs_qudit_ecs);
  json += ",\"herald_probability_a\":" +
          format_double(result.herald_probability_a);
  json += ",\"herald_probability_b\":" +
          format_double(result.herald_probability_b);
  json += ",\"coefficients\":{";
  bool first = true;
  for (const auto& [n, c] : result.coefficients) {
    if (!first) json += ',';
    first = false;
    json += "\"" + std::to_string(n) + "\":[" + format_double(c.real()) + "," +
            format_double(c.imag()) + "]";
  }
  json += "},\"state\":" + catsim::io::state_to_json(result.state);
  json += "}\n";
  catsim::io::write_text_file(args.out, json);
  manifest.outputs.push_back(args.out);
  manifest.write(args.out);
  return 0;
}

struct LogicalArgs {
  double xi = 0.0;
  double transmission = 0.0;
  double alpha = 1.2;
  int herald_a = 2;
  int cutoff = 40;
  double tolerance = catsim::kDefaultTailTolerance;
  int seed = 0;
  std::string out;
};

int cmd_logical(const LogicalArgs& args) {
  RunManifest manifest;
  manifest.command = "logical";
  manifest.param("xi", args.xi);
  manifest.param("transmission", args.transmission);
  manifest.param("alpha", args.alpha);
  manifest.param("herald_a", args.herald_a);
  manifest.param("cutoff", args.cutoff);
  manifest.param("tolerance", args.tolerance);
  manifest.param("seed", args.seed);
  manifest.param("out", args.out);

  EcsArgs ecs_args;
  ecs_args.xi = args.xi;
  ecs_args.transmission = args.transmission;
  ecs_args.alpha = args.alpha;
  ecs_args.cutoff = args.cutoff;
  ecs_args.tolerance = args.tolerance;
  const auto ecs = run_ecs(ecs_args);
  const catsim::HeraldResult logical =
      catsim::protocols::extract_logical(ecs.state, args.herald_a);

  std::string json = "{\"herald_n\":" + std::to_string(args.herald_a);
  json += ",\"probability\":" + format_double(logical.probability);
  json += ",\"state\":" + catsim::io::state_to_json(logical.single_mode());
  json += "}\n";
  catsim::io::write_text_file(args.out, json);
  manifest.outputs.push_back(args.out);
  manifest.write(args.out);
  return 0;
}

struct NoonArgs {
  int photons = 2;
  std::vector<double> etas{1.0, 0.9, 0.8, 0.6};
  int theta_steps = 6;
  double xi = 0.5;
  double transmission = 0.9;
  int cutoff = 12;
  double tolerance = catsim::kDefaultTailTolerance;
  int seed = 0;
  std::string out;
};

int cmd_noon(const NoonArgs& args) {
  RunManifest manifest;
  manifest.command = "noon";
  manifest.param("photons", args.photons);
  manifest.param("eta", args.etas);
  manifest.param("theta_steps", args.theta_steps);
  manifest.param("xi", args.xi);
  manifest.param("transmission", args.transmission);
  manifest.param("cutoff", args.cutoff);
  manifest.param("tolerance", args.tolerance);
  manifest.param("seed", args.seed);
  manifest.param("out", args.out);

  catsim::protocols::ProtocolConfig cfg;
  cfg.xi = args.xi;
  cfg.transmission = args.transmission;
  cfg.cutoff = args.cutoff;
  cfg.tail_tolerance = args.tolerance;

  // Phases sampled up to pi/N, where the N00N interference is largest.
  std::vector<double> thetas(static_cast<size_t>(args.theta_steps));
  for (int k = 1; k <= args.theta_steps; ++k) {
    thetas[static_cast<size_t>(k - 1)] =
        k * std::numbers::pi / args.photons / args.theta_steps;
  }

  std::string csv = "state,theta,eta,trace_distance\n";
  for (double eta : args.etas) {
    const auto rows =
        catsim::protocols::noon_loss_experiment(args.photons, eta, thetas, cfg);
    for (const auto& row : rows) {
      csv += row.state + "," + format_double(row.theta) + "," +
             format_double(row.eta) + "," + format_double(row.trace_distance) +
             "\n";
    }
  }
  catsim::io::write_text_file(args.out, csv);
  manifest.outputs.push_back(args.out);
  manifest.write(args.out);
  return 0;
}

struct WignerArgs {
  std::string state_path;
  double range = 5.0;
  int points = 101;
  int cutoff = 0;
  double tolerance = 0.0;
  int seed = 0;
  std::string out;
};

int cmd_wigner(const WignerArgs& args) {
  RunManifest manifest;
  manifest.command = "wigner";
  manifest.param("state", args.state_path);
  manifest.param("range", args.range);
  manifest.param("points", args.points);
  manifest.param("seed", args.seed);
  manifest.param("out", args.out);

  const catsim::io::AnyPureState loaded =
      catsim::io::load_state_file(args.state_path);
  const auto* state = std::get_if<catsim::PureState>(&loaded);
  if (state == nullptr) {
    throw catsim::InvalidArgumentError(
        "wigner: the state file must hold a single-mode state");
  }
  catsim::WignerWindow window;
  window.x_min = -args.range;
  window.x_max = args.range;
  window.p_min = -args.range;
  window.p_max = args.range;
  window.points = args.points;
  const catsim::WignerGrid grid = catsim::wigner(*state, window);

  std::string csv = "x,p,w\n";
  for (size_t i = 0; i < grid.xs.size(); ++i) {
    for (size_t j = 0; j < grid.ps.size(); ++j) {
      csv += format_double(grid.xs[i]) + "," + format_double(grid.ps[j]) + "," +
             format_double(grid.values[i * grid.ps.size() + j]) + "\n";
    }
  }
  catsim::io::write_text_file(args.out, csv);
  manifest.outputs.push_back(args.out);
  manifest.write(args.out);
  return 0;
}

struct QuadratureArgs {
  std::string state_path;
  double phi = 0.0;
  double range = 8.0;
  int points = 401;
  int cutoff = 0;
  double tolerance = 0.0;
  int seed = 0;
  std::string out;
};

int cmd_quadrature(const QuadratureArgs& args) {
  RunManifest manifest;
  manifest.command = "quadrature";
  manifest.param("state", args.state_path);
  manifest.param("phi", args.phi);
  manifest.param("range", args.range);
  manifest.param("points", args.points);
  manifest.param("seed", args.seed);
  manifest.param("out", args.out);

  const catsim::io::AnyPureState loaded =
      catsim::io::load_state_file(args.state_path);
  const auto* state = std::get_if<catsim::PureState>(&loaded);
  if (state == nullptr) {
    throw catsim::InvalidArgumentError(
        "quadrature: the state file must hold a single-mode state");
  }
  const std::vector<double> xs = linspace(-args.range, args.range, args.points);
  const std::vector<double> pdf = catsim::quadrature_pdf(*state, args.phi, xs);

  std::string csv = "x,pdf\n";
  for (size_t i = 0; i < xs.size(); ++i) {
    csv += format_double(xs[i]) + "," + format_double(pdf[i]) + "\n";
  }
  catsim::io::write_text_file(args.out, csv);
  manifest.outputs.push_back(args.out);
  manifest.write(args.out);
  return 0;
}

// --- selftest ---------------------------------------------------------------

struct SelftestReport {
  std::string text;
  bool all_passed = true;

  void check(const std::string& name, bool passed, const std::string& detail) {
    text += (passed ? "PASS " : "FAIL ") + name + " (" + detail + ")\n";
    all_passed = all_passed && passed;
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

int cmd_selftest(const std::string& out, int seed) {
  using namespace catsim;
  SelftestReport report;

  {  // Heralding identity: two-mode projection vs direct operator route.
    double worst_fidelity_gap = 0.0;
    double worst_prob_gap = 0.0;
    for (double xi : {0.43, 0.65}) {
      for (double transmission : {0.8, 0.99}) {
        protocols::ProtocolConfig cfg;
        cfg.xi = xi;
        cfg.transmission = transmission;
        cfg.cutoff = 80;
        const auto result = protocols::run_cat_protocol(cfg);
        const PureState direct =
            protocols::subtracted_squeezed_state(xi, transmission, 80);
        worst_fidelity_gap = std::max(
            worst_fidelity_gap,
            1.0 - fidelity_pure(direct, result.herald.single_mode()));
        worst_prob_gap = std::max(
            worst_prob_gap, std::abs(result.herald.probability -
                                     analytic::herald_probability(xi, transmission)));
      }
    }
    report.check("herald-identity",
                 worst_fidelity_gap <= 1e-10 && worst_prob_gap <= 1e-8,
                 "fidelity gap " + sci(worst_fidelity_gap) + ", probability gap " +
                     sci(worst_prob_gap));
  }

  {  // Closed-form fidelity vs the numeric pipeline at T = 1.
    double worst = 0.0;
    for (double alpha : {0.8, 1.2, 1.6}) {
      for (double xi : {0.3, 0.5}) {
        const PureState subtracted =
            protocols::subtracted_squeezed_state(xi, 1.0, 80);
        const PureState cat =
            make_cat(Complex(0.0, alpha), CatSign::Minus, 80);
        const double numeric = fidelity_pure(subtracted, cat);
        const double closed =
            analytic::fidelity_closed_form(alpha, std::tanh(xi));
        worst = std::max(worst, std::abs(numeric - closed));
      }
    }
    report.check("closed-form-fidelity", worst <= 1e-8, "max gap " + sci(worst));
  }

  {  // Stationarity of the optimal xi_T.
    bool ok = true;
    for (double alpha : {1.0, 1.4}) {
      const double star = analytic::optimal_xi_t(alpha);
      const double best = analytic::fidelity_closed_form(alpha, star);
      ok = ok && best > analytic::fidelity_closed_form(alpha, star - 0.01) &&
           best > analytic::fidelity_closed_form(alpha, star + 0.01);
    }
    report.check("optimal-xi-t", ok, "stationary maximum at both probes");
  }

  {  // Entangled-output coefficients against the exact law.
    protocols::ProtocolConfig cfg;
    cfg.xi = 0.6;
    cfg.transmission = 0.85;
    cfg.cutoff = 40;
    const auto ecs = protocols::run_ecs_protocol(cfg);
    double worst_coeff = 0.0;
    const Complex gauge =
        ecs.coefficients.at(2) /
        analytic::tau_exact(2, cfg.xi, cfg.transmission);
    for (int n = 2; n <= 8; ++n) {
      worst_coeff = std::max(
          worst_coeff,
          std::abs(ecs.coefficients.at(n) -
                   gauge * analytic::tau_exact(n, cfg.xi, cfg.transmission)));
    }
    double worst_antisym = 0.0;
    for (int na = 0; na <= cfg.cutoff; ++na) {
      for (int nb = 0; nb <= cfg.cutoff; ++nb) {
        worst_antisym =
            std::max(worst_antisym,
                     std::abs(ecs.state.at(na, nb) + ecs.state.at(nb, na)));
      }
    }
    report.check("entangled-coefficients",
                 worst_coeff <= 1e-8 && worst_antisym <= 1e-12,
                 "coefficient gap " + sci(worst_coeff) + ", antisymmetry " +
                     sci(worst_antisym));
  }

  {  // Beam-splitter unitarity on a deterministic product state.
    const PureState a = make_coherent(Complex(0.9, 0.3), 30);
    const PureState b = make_squeezed_vacuum(0.4, 30);
    const TwoModePureState joint = tensor(a, b);
    const auto split = beam_splitter(
        joint, BeamSplitterSpec::from_transmission(0.7), 1e-6);
    const double gap = std::abs(split.norm() - 1.0);
    report.check("beam-splitter-unitarity", gap <= 1e-9, "norm gap " + sci(gap));
  }

  {  // Loss channel: trace preservation and coherent covariance.
    const PureState beta = make_coherent(Complex(1.1, -0.4), 40);
    const MixedState lossy = loss_channel(beta, 0.7);
    const double trace_gap = std::abs(lossy.rho.trace().real() - 1.0);
    const PureState target =
        make_coherent(std::sqrt(0.7) * Complex(1.1, -0.4), 40);
    const double distance = trace_distance(lossy, MixedState::from_pure(target));
    report.check("loss-channel", trace_gap <= 1e-9 && distance <= 1e-9,
                 "trace gap " + sci(trace_gap) + ", covariance distance " +
                     sci(distance));
  }

  {  // Serialization round trip is exact.
    const PureState s = make_cat(Complex(0.0, 1.2), CatSign::Minus, 30);
    const auto back = catsim::io::state_from_json(catsim::io::state_to_json(s));
    const auto& parsed = std::get<PureState>(back);
    bool identical = parsed.cutoff == s.cutoff;
    for (int n = 0; identical && n <= s.cutoff; ++n) {
      identical = parsed[n] == s[n];
    }
    report.check("serialization-roundtrip", identical, "bit-exact amplitudes");
  }

  std::cout << report.text;
  if (!out.empty()) {
    RunManifest manifest;
    manifest.command = "selftest";
    manifest.param("seed", seed);
    manifest.param("out", out);
    catsim::io::write_text_file(out, report.text);
    manifest.outputs.push_back(out);
    manifest.write(out);
  }
  return report.all_passed ? 0 : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"truncated Fock-space simulator for heralded cat-state protocols"};
  app.require_subcommand(1);

  HeraldArgs herald_args;
  auto* herald = app.add_subcommand(
      "herald", "heralded single-photon subtraction from a squeezed vacuum");
  herald->add_option("--xi", herald_args.xi, "squeezing parameter")->required();
  herald->add_option("--transmission", herald_args.transmission,
                     "beam-splitter transmission in (0, 1]")->required();
  herald->add_option("--alpha", herald_args.alpha, "target cat amplitude")
      ->required();
  herald->add_option("--eta-det", herald_args.eta_det, "detector efficiency");
  herald->add_option("--cutoff", herald_args.cutoff, "Fock cutoff");
  herald->add_option("--tolerance", herald_args.tolerance,
                     "truncation tail tolerance");
  herald->add_option("--seed", herald_args.seed, "accepted for compatibility");
  herald->add_option("--out", herald_args.out, "report JSON path")->required();

  Fig2Args fig2_args;
  auto* fig2 = app.add_subcommand(
      "fig2", "ideal-subtraction fidelity curves F(xi) per alpha");
  fig2->add_option("--alphas", fig2_args.alphas, "cat amplitudes");
  fig2->add_option("--xi-min", fig2_args.xi_min, "sweep start");
  fig2->add_option("--xi-max", fig2_args.xi_max, "sweep end");
  fig2->add_option("--xi-steps", fig2_args.xi_steps, "sweep points");
  fig2->add_option("--cutoff", fig2_args.cutoff, "Fock cutoff");
  fig2->add_option("--tolerance", fig2_args.tolerance,
                   "truncation tail tolerance for the sweep");
  fig2->add_option("--seed", fig2_args.seed, "accepted for compatibility");
  fig2->add_option("--out", fig2_args.out, "CSV path")->required();

  Fig3Args fig3_args;
  auto* fig3 = app.add_subcommand(
      "fig3", "closed-form fidelity contour over (xi_T, alpha)");
  fig3->add_option("--xi-t-min", fig3_args.xi_t_min, "xi_T start");
  fig3->add_option("--xi-t-max", fig3_args.xi_t_max, "xi_T end");
  fig3->add_option("--xi-t-steps", fig3_args.xi_t_steps, "xi_T points");
  fig3->add_option("--alpha-min", fig3_args.alpha_min, "alpha start");
  fig3->add_option("--alpha-max", fig3_args.alpha_max, "alpha end");
  fig3->add_option("--alpha-steps", fig3_args.alpha_steps, "alpha points");
  fig3->add_option("--cutoff", fig3_args.cutoff,
                   "accepted for compatibility (closed form needs none)");
  fig3->add_option("--tolerance", fig3_args.tolerance,
                   "accepted for compatibility (closed form needs none)");
  fig3->add_option("--seed", fig3_args.seed, "accepted for compatibility");
  fig3->add_option("--out", fig3_args.out, "CSV path")->required();

  EcsArgs ecs_args;
  auto* ecs = app.add_subcommand(
      "ecs", "two-arm heralded subtraction plus a balanced beam splitter");
  ecs->add_option("--xi", ecs_args.xi, "squeezing parameter")->required();
  ecs->add_option("--transmission", ecs_args.transmission,
                  "subtraction beam-splitter transmission")->required();
  ecs->add_option("--alpha", ecs_args.alpha, "target cat amplitude");
  ecs->add_option("--cutoff", ecs_args.cutoff, "per-mode Fock cutoff");
  ecs->add_option("--tolerance", ecs_args.tolerance,
                  "truncation tail tolerance");
  ecs->add_option("--seed", ecs_args.seed, "accepted for compatibility");
  ecs->add_option("--out", ecs_args.out, "report JSON path")->required();

  LogicalArgs logical_args;
  auto* logical = app.add_subcommand(
      "logical", "logical-qubit state heralded by a Fock detection on mode A");
  logical->add_option("--xi", logical_args.xi, "squeezing parameter")->required();
  logical->add_option("--transmission", logical_args.transmission,
                      "subtraction beam-splitter transmission")->required();
  logical->add_option("--alpha", logical_args.alpha, "target cat amplitude");
  logical->add_option("--herald-a", logical_args.herald_a,
                      "detected photon number on mode A (2 or 4)")
      ->required()
      ->check(CLI::IsMember({2, 4}));
  logical->add_option("--cutoff", logical_args.cutoff, "per-mode Fock cutoff");
  logical->add_option("--tolerance", logical_args.tolerance,
                      "truncation tail tolerance");
  logical->add_option("--seed", logical_args.seed, "accepted for compatibility");
  logical->add_option("--out", logical_args.out, "report JSON path")->required();

  NoonArgs noon_args;
  auto* noon = app.add_subcommand(
      "noon", "phase distinguishability under loss: N00N vs entangled output");
  noon->add_option("--photons", noon_args.photons, "N00N photon number");
  noon->add_option("--eta", noon_args.etas, "loss transmissivities");
  noon->add_option("--theta-steps", noon_args.theta_steps,
                   "phase samples up to pi/N");
  noon->add_option("--xi", noon_args.xi, "squeezing parameter");
  noon->add_option("--transmission", noon_args.transmission,
                   "subtraction beam-splitter transmission");
  noon->add_option("--cutoff", noon_args.cutoff, "per-mode Fock cutoff");
  noon->add_option("--tolerance", noon_args.tolerance,
                   "truncation tail tolerance");
  noon->add_option("--seed", noon_args.seed, "accepted for compatibility");
  noon->add_option("--out", noon_args.out, "CSV path")->required();

  WignerArgs wigner_args;
  auto* wigner_cmd = app.add_subcommand(
      "wigner", "Wigner function of a stored single-mode state");
  wigner_cmd->add_option("--state", wigner_args.state_path,
                         "catsim-state-v1 JSON file")->required();
  wigner_cmd->add_option("--range", wigner_args.range, "half-width of the grid");
  wigner_cmd->add_option("--points", wigner_args.points, "points per axis");
  wigner_cmd->add_option("--cutoff", wigner_args.cutoff,
                         "accepted for compatibility (the file fixes it)");
  wigner_cmd->add_option("--tolerance", wigner_args.tolerance,
                         "accepted for compatibility");
  wigner_cmd->add_option("--seed", wigner_args.seed,
                         "accepted for compatibility");
  wigner_cmd->add_option("--out", wigner_args.out, "CSV path")->required();

  QuadratureArgs quad_args;
  auto* quadrature = app.add_subcommand(
      "quadrature", "homodyne quadrature density of a stored state");
  quadrature->add_option("--state", quad_args.state_path,
                         "catsim-state-v1 JSON file")->required();
  quadrature->add_option("--phi", quad_args.phi, "quadrature phase");
  quadrature->add_option("--range", quad_args.range, "half-width of the x grid");
  quadrature->add_option("--points", quad_args.points, "grid points");
  quadrature->add_option("--cutoff", quad_args.cutoff,
                         "accepted for compatibility (the file fixes it)");
  quadrature->add_option("--tolerance", quad_args.tolerance,
                         "accepted for compatibility");
  quadrature->add_option("--seed", quad_args.seed,
                         "accepted for compatibility");
  quadrature->add_option("--out", quad_args.out, "CSV path")->required();

  std::string selftest_out;
  int selftest_seed = 0;
  auto* selftest =
      app.add_subcommand("selftest", "run the oracle-equivalence suite");
  selftest->add_option("--out", selftest_out, "also write the report here");
  selftest->add_option("--seed", selftest_seed, "accepted for compatibility");
  int selftest_cutoff = 0;
  double selftest_tolerance = 0.0;
  selftest->add_option("--cutoff", selftest_cutoff,
                       "accepted for compatibility");
  selftest->add_option("--tolerance", selftest_tolerance,
                       "accepted for compatibility");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*herald) return cmd_herald(herald_args);
    if (*fig2) return cmd_fig2(fig2_args);
    if (*fig3) return cmd_fig3(fig3_args);
    if (*ecs) return cmd_ecs(ecs_args);
    if (*logical) return cmd_logical(logical_args);
    if (*noon) return cmd_noon(noon_args);
    if (*wigner_cmd) return cmd_wigner(wigner_args);
    if (*quadrature) return cmd_quadrature(quad_args);
    if (*selftest) return cmd_selftest(selftest_out, selftest_seed);
  } catch (const catsim::ImpossibleOutcomeError& e) {
    std::cerr << "catsim: " << e.what() << "\n";
    return kExitImpossible;
  } catch (const catsim::InvalidArgumentError& e) {
    std::cerr << "catsim: " << e.what() << "\n";
    return kExitUsage;
  } catch (const catsim::Error& e) {
    std::cerr << "catsim: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "catsim: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
