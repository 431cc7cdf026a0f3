#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "twolevel/diagnostics.hpp"
#include "twolevel/sweep.hpp"

using namespace twolevel;
using namespace std::complex_literals;

TEST(SourceTerm, OffDiagonalIsCoupling) {
  EXPECT_EQ(source_term_matrix(TwoLevelHamiltonian(0.5, 0.4, -1, -1, 0.1i)).w12, 0.1i);
  EXPECT_EQ(source_term_matrix(TwoLevelHamiltonian(0.5, 0.4, -1, -1, 0.0)).w12, Complex{});
  const Complex w = 0.05 * Complex(0.75, 0.25);
  const auto m = source_term_matrix(TwoLevelHamiltonian(0.5, 0.475, -0.05, 0.05, w));
  EXPECT_NEAR(std::abs(m.w12 - Complex(0.0375, 0.0125)), 0.0, 1e-17);
  const Vec2 v = m.apply({1.0, 0.0});
  EXPECT_EQ(v[0], Complex{});  // zero diagonal
}

TEST(NonlinearMagnitude, VanishesForUnmixedState) {
  const SourceTermMatrix w{Complex(0.3, 0.2)};
  EXPECT_EQ(nonlinear_magnitude({1.0, 0.0}, w, 1.0), 0.0);
  const auto s = solve(TwoLevelHamiltonian(0.5, 0.4, -1, -1, 0.0));
  EXPECT_EQ(diagnose(TwoLevelHamiltonian(0.5, 0.4, -1, -1, 0.0), s).nonlinear_mag1, 0.0);
}

TEST(NonlinearMagnitude, LinearInCoupling) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int n = 0; n < 500; ++n) {
    const auto s = solve(TwoLevelHamiltonian(u(rng), u(rng), u(rng), u(rng), Complex(u(rng), u(rng))));
    const Complex w(u(rng), u(rng));
    const double one = nonlinear_magnitude(s.vec1, {w}, s.a1);
    const double two = nonlinear_magnitude(s.vec1, {2.0 * w}, s.a1);
    EXPECT_NEAR(two, 2.0 * one, 1e-12 * std::max(1.0, two));
  }
}

TEST(NonlinearMagnitude, RejectsUnnormalized) {
  EXPECT_THROW(nonlinear_magnitude({1.0, 1.0}, {0.1}, 2.0), Error);
}

TEST(NonlinearMagnitude, Fig1LeftVanishesFarFromEp) {
  const auto recs = run_sweep(preset("fig1l"));
  double max_n = 0.0;
  for (const auto& r : recs) max_n = std::max({max_n, r.state[0].nl_mag, r.state[1].nl_mag});
  ASSERT_GT(max_n, 0.0);
  EXPECT_LT(recs.front().state[0].nl_mag, 0.1 * max_n);
  EXPECT_LT(recs.front().state[1].nl_mag, 0.1 * max_n);

  // Inside the EP pair the source term grows toward the EP: the grid point
  // just inside a = 0.4 is within a factor 2 of the interior maximum.
  double inner_max = 0.0;
  const SweepRecord* first_inside = nullptr;
  for (const auto& r : recs) {
    if (r.a > 0.4 && r.a < 0.6) {
      if (!first_inside) first_inside = &r;
      inner_max = std::max({inner_max, r.state[0].nl_mag, r.state[1].nl_mag});
    }
  }
  ASSERT_NE(first_inside, nullptr);
  EXPECT_GE(std::max(first_inside->state[0].nl_mag, first_inside->state[1].nl_mag), 0.5 * inner_max);
}

TEST(Alignment, Examples) {
  EXPECT_NEAR(ep_phase_alignment({1.0, 1i}, {1.0, 1i}), 0.0, 1e-15);
  EXPECT_NEAR(ep_phase_alignment({1.0, 0.0}, {0.0, 1.0}), std::numbers::sqrt2, 1e-15);
  EXPECT_THROW(ep_phase_alignment({0.0, 0.0}, {1.0, 0.0}), Error);
}

TEST(Alignment, ZeroForImaginaryMultiple) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int n = 0; n < 500; ++n) {
    const Vec2 v{Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
    EXPECT_NEAR(ep_phase_alignment(v, scaled(v, 1i)), 0.0, 1e-15);
  }
}

TEST(Alignment, InvariantUnderGlobalRephasing) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int n = 0; n < 500; ++n) {
    const Vec2 v{Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
    const Vec2 w{Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
    const double base = ep_phase_alignment(v, w);
    const Complex p1 = std::polar(1.0, u(rng)), p2 = std::polar(2.5, u(rng));
    EXPECT_NEAR(ep_phase_alignment(scaled(v, p1), scaled(w, p2)), base, 1e-12);
    EXPECT_GE(base, 0.0);
    EXPECT_LE(base, std::numbers::sqrt2 + 1e-15);
  }
}

TEST(Alignment, SmallStraddlingFig1LeftEp) {
  const SweepScenario s = preset("fig1l");
  for (const double a : {0.4 - 1e-6, 0.4 + 1e-6}) {
    const auto sol = solve(s.at(a));
    EXPECT_LT(ep_phase_alignment(sol.vec1, sol.vec2), 1e-2) << "a = " << a;
  }
}

TEST(Residual, Examples) {
  const TwoLevelHamiltonian h(0.3, 0.1, -0.4, -0.2, Complex(0.1, 0.05));
  const auto s = solve(h);
  EXPECT_LE(residual(h, s.eig1, s.vec1), 1e-12);
  const double perturbed = residual(h, s.eig1 + 1e-3, s.vec1);
  EXPECT_NEAR(perturbed, 1e-3 * std::sqrt(norm2(s.vec1)), 1e-9);
  EXPECT_GT(residual(h, s.eig1, {1.0, 0.3}), 0.0);
}
