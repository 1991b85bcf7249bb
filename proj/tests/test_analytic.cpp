#include <cmath>

#include "catsim/analytic.hpp"
#include "catsim/mode_ops.hpp"
#include "catsim/protocols.hpp"
#include "doctest.h"

using namespace catsim;
namespace an = catsim::analytic;

TEST_CASE("cat normalization factors") {
  const auto norms = an::cat_normalization(Complex(0.0, 1.2));
  const double b2 = 1.44;
  CHECK(norms.m_plus ==
        doctest::Approx(1.0 / std::sqrt(2.0 * (1.0 + std::exp(-2.0 * b2)))));
  CHECK(norms.m_minus ==
        doctest::Approx(1.0 / std::sqrt(2.0 * (1.0 - std::exp(-2.0 * b2)))));
  CHECK(norms.m_plus <= norms.m_minus);

  // They normalize the actual two-term superpositions.
  const PureState plus = make_cat(2.0, CatSign::Plus, 60);
  const PureState coh_p = make_coherent(2.0, 60);
  const PureState coh_m = make_coherent(-2.0, 60);
  const auto big = an::cat_normalization(2.0);
  PureState manual(60);
  for (int n = 0; n <= 60; ++n) {
    manual[n] = big.m_plus * (coh_p[n] + coh_m[n]);
  }
  CHECK(std::abs(manual.norm() - 1.0) <= 1e-12);
  CHECK(fidelity_pure(normalize(manual).state, plus) >= 1.0 - 1e-12);
}

TEST_CASE("closed-form fidelity") {
  SUBCASE("xi_T = 0 reduces to alpha^2 / sinh(alpha^2)") {
    for (double alpha : {0.3, 0.9, 1.7}) {
      const double a2 = alpha * alpha;
      CHECK(an::fidelity_closed_form(alpha, 0.0) ==
            doctest::Approx(a2 / std::sinh(a2)).epsilon(1e-15));
    }
    CHECK(an::fidelity_closed_form(0.01, 0.0) ==
          doctest::Approx(1.0).epsilon(1e-4));
  }

  SUBCASE("values at the optimal xi_T") {
    CHECK(an::fidelity_closed_form(1.2, 0.4023) ==
          doctest::Approx(0.990).epsilon(0.001 / 0.990));
    CHECK(an::fidelity_closed_form(1.6, 0.5731) ==
          doctest::Approx(0.950).epsilon(0.001 / 0.950));
  }

  SUBCASE("domain validation") {
    CHECK_THROWS_AS(an::fidelity_closed_form(1.0, 1.0), InvalidArgumentError);
    CHECK_THROWS_AS(an::fidelity_closed_form(1.0, -0.1), InvalidArgumentError);
    CHECK_THROWS_AS(an::fidelity_closed_form(0.0, 0.3), InvalidArgumentError);
  }
}

TEST_CASE("optimal xi_T") {
  SUBCASE("quoted optima") {
    CHECK(an::optimal_xi_t(1.2) == doctest::Approx(0.4023).epsilon(5e-4));
    CHECK(std::abs(an::optimal_xi_t(1.2) - std::tanh(0.43)) <= 0.01);
    CHECK(an::optimal_xi_t(1.4) == doctest::Approx(0.4939).epsilon(5e-4));
    CHECK(std::abs(an::optimal_xi_t(1.4) - std::tanh(0.54)) <= 0.01);
  }

  SUBCASE("small-alpha expansion xi_T* -> alpha^2 / 3") {
    const double alpha = 0.02;
    CHECK(an::optimal_xi_t(alpha) ==
          doctest::Approx(alpha * alpha / 3.0).epsilon(1e-3));
  }

  SUBCASE("it is a maximum") {
    for (double alpha : {0.8, 1.2, 1.6, 2.2}) {
      const double star = an::optimal_xi_t(alpha);
      const double best = an::fidelity_closed_form(alpha, star);
      CHECK(best > an::fidelity_closed_form(alpha, star - 0.01));
      CHECK(best > an::fidelity_closed_form(alpha, star + 0.01));
    }
  }

  SUBCASE("beats a fine grid search within 1e-6") {
    const double alpha = 1.3;
    double best_grid = 0.0;
    for (int i = 0; i <= 20000; ++i) {
      const double xi_t = i * 0.9999 / 20000.0;
      best_grid = std::max(best_grid, an::fidelity_closed_form(alpha, xi_t));
    }
    const double best_closed =
        an::fidelity_closed_form(alpha, an::optimal_xi_t(alpha));
    CHECK(best_closed >= best_grid - 1e-6);
  }
}

TEST_CASE("maximum fidelity over alpha at fixed xi_T") {
  SUBCASE("is a maximum against neighboring alphas") {
    for (double xi_t : {0.1, 0.4, 0.7}) {
      const an::AlphaOptimum opt = an::max_fidelity_over_alpha(xi_t);
      CHECK(opt.fidelity >=
            an::fidelity_closed_form(opt.alpha_star * 1.01, xi_t));
      CHECK(opt.fidelity >=
            an::fidelity_closed_form(opt.alpha_star * 0.99, xi_t));
    }
  }

  SUBCASE("deep-squeezing regime split") {
    const double tanh_deep = 0.995;
    const double near_unit_t = an::max_fidelity_over_alpha(0.99 * 0.99 * tanh_deep).fidelity;
    const double half_t = an::max_fidelity_over_alpha(0.5 * 0.5 * tanh_deep).fidelity;
    CHECK(near_unit_t < 0.5);
    CHECK(half_t > 0.95);
  }
}

TEST_CASE("herald probability closed form") {
  CHECK(an::herald_probability(0.5, 0.2) ==
        doctest::Approx(7.27e-3).epsilon(1e-4 / 7.27e-3));
  CHECK(an::herald_probability(0.43, 0.99) ==
        doctest::Approx(3.8e-3).epsilon(1e-4 / 3.8e-3));
  CHECK(an::herald_probability(1e-6, 0.5) <= 1e-11);

  CHECK_THROWS_AS(an::herald_probability(0.5, 1.0), InvalidArgumentError);
  CHECK_THROWS_AS(an::herald_probability(0.5, 0.0), InvalidArgumentError);
  CHECK_THROWS_AS(an::herald_probability(0.0, 0.5), InvalidArgumentError);

  SUBCASE("struct view agrees with the scalar entry points") {
    const an::HeraldClosedForm cf = an::herald_closed_form(0.43, 0.9);
    CHECK(cf.xi_t == doctest::Approx(an::effective_xi_t(0.43, 0.9)).epsilon(1e-15));
    CHECK(cf.herald_prob ==
          doctest::Approx(an::herald_probability(0.43, 0.9)).epsilon(1e-15));
    const double sech = 1.0 / std::cosh(0.43);
    CHECK(cf.n_factor ==
          doctest::Approx(std::pow(1.0 - cf.xi_t * cf.xi_t, 0.75) /
                          (std::sqrt(sech) * cf.xi_t))
              .epsilon(1e-14));
  }

  SUBCASE("the ideal-subtraction limit heralds with probability zero") {
    const an::HeraldClosedForm cf = an::herald_closed_form(0.43, 1.0);
    CHECK(cf.herald_prob == 0.0);
    CHECK(cf.xi_t == doctest::Approx(std::tanh(0.43)).epsilon(1e-15));
  }

  SUBCASE("the normalization factor inverts the operator-route norm") {
    for (double xi : {0.3, 0.5, 0.8}) {
      for (double t : {0.6, 0.9}) {
        const double norm =
            annihilate(attenuate(make_squeezed_vacuum(xi, 100), t)).norm();
        CHECK(an::herald_closed_form(xi, t).n_factor * norm ==
              doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("entangled-output coefficient formulas") {
  const double xi = 0.6;
  const double t = 0.85;
  const double xi_t = an::effective_xi_t(xi, t);

  SUBCASE("printed coefficient form") {
    CHECK(an::tau_printed(2, xi, t) ==
          doctest::Approx(std::pow(1.0 - xi_t * xi_t, 1.5)).epsilon(1e-12));
    // Sign alternates and the ratio is -xi_T.
    for (int n = 2; n <= 7; ++n) {
      CHECK(an::tau_printed(n + 1, xi, t) / an::tau_printed(n, xi, t) ==
            doctest::Approx(-xi_t).epsilon(1e-12));
    }
    CHECK_THROWS_AS(an::tau_printed(1, xi, t), InvalidArgumentError);
  }

  SUBCASE("exact coefficients carry the combinatorial factor") {
    CHECK(std::abs(an::tau_exact(3, xi, t) / an::tau_exact(2, xi, t)) ==
          doctest::Approx(std::sqrt(3.0) * xi_t).epsilon(1e-12));
    // The printed ratio misses exactly the sqrt(n(n-1)/2) growth.
    const double printed_ratio =
        std::abs(an::tau_printed(3, xi, t) / an::tau_printed(2, xi, t));
    const double exact_ratio =
        std::abs(an::tau_exact(3, xi, t) / an::tau_exact(2, xi, t));
    CHECK(exact_ratio / printed_ratio ==
          doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK_THROWS_AS(an::tau_exact(0, xi, t), InvalidArgumentError);
  }

  SUBCASE("exact coefficients are normalized") {
    double total = 0.0;
    for (int n = 2; n <= 200; ++n) {
      const double tau = an::tau_exact(n, xi, t);
      total += 2.0 * tau * tau;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("closed form agrees with the numeric pipeline") {
  // Route one: the simulated subtraction pipeline at T = 1.
  // Route two: the closed form evaluated at xi_T = tanh(xi).
  for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
    for (double xi : {0.1, 0.4, 0.7, 1.0}) {
      const int cutoff = 160;
      const PureState subtracted =
          protocols::subtracted_squeezed_state(xi, 1.0, cutoff);
      const PureState cat =
          make_cat(Complex(0.0, alpha), CatSign::Minus, cutoff);
      const double numeric = fidelity_pure(subtracted, cat);
      const double closed = an::fidelity_closed_form(alpha, std::tanh(xi));
      CHECK(std::abs(numeric - closed) <= 1e-8);
    }
  }
}
