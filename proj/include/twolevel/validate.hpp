#ifndef TWOLEVEL_VALIDATE_HPP
#define TWOLEVEL_VALIDATE_HPP

// Self-check suite behind `twolevel validate`: core invariants over seeded
// random Hamiltonians, analytic/numeric EP agreement on the presets, and
// spot values of the figure scenarios.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "core.hpp"
#include "diagnostics.hpp"
#include "ep.hpp"
#include "scenario.hpp"
#include "sweep.hpp"

namespace twolevel {

struct ValidationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
};

struct ValidateOptions {
  std::uint64_t seed = 42;
  int samples = 100000;
  /// Coalescence tolerance handed to the numeric EP locator. Exposed so a
  /// negative control can break the EP cross-check on purpose.
  double ep_z_tol_factor = kEpZTolFactor;
};

/// e_i, gamma_i uniform in [-bound, bound]; omega uniform in the disk |omega| <= bound.
template <typename Rng>
TwoLevelHamiltonian random_hamiltonian(Rng& rng, double bound = 10.0) {
  std::uniform_real_distribution<double> u(-bound, bound);
  const double e1 = u(rng), e2 = u(rng), g1 = u(rng), g2 = u(rng);
  Complex w;
  do {
    w = {u(rng), u(rng)};
  } while (std::abs(w) > bound);
  return {e1, e2, g1, g2, w};
}

namespace detail {

inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

inline ValidationCheck bound_check(std::string name, double worst, double limit) {
  return {std::move(name), worst <= limit, "max " + sci(worst) + " (limit " + sci(limit) + ")"};
}

inline void core_properties(const ValidateOptions& opt, ValidationReport& rep) {
  std::mt19937_64 rng(opt.seed);
  double trace = 0, det = 0, norm_ge1 = 0, ra = 0, resid = 0, cross_re = 0, scale_inv = 0;
  int skipped = 0;
  for (int n = 0; n < opt.samples; ++n) {
    const TwoLevelHamiltonian h = random_hamiltonian(rng);
    const EigenSolution s = solve(h);
    const double hn = std::max(1.0, h.norm());
    const Complex tr = h.eps1() + h.eps2();
    trace = std::max(trace, std::abs(s.eig1 + s.eig2 - tr) / std::max(1.0, std::abs(tr)));
    const Complex dt = h.eps1() * h.eps2() - h.omega() * h.omega();
    const double dscale = std::max(1.0, std::abs(h.eps1() * h.eps2()) + std::norm(h.omega()));
    det = std::max(det, std::abs(s.eig1 * s.eig2 - dt) / dscale);
    if (s.at_ep || s.degenerate_decoupled) {
      ++skipped;
      continue;
    }
    for (int i = 0; i < 2; ++i) {
      norm_ge1 = std::max(norm_ge1, 1.0 - s.a(i));
      ra = std::max(ra, std::abs(s.r(i) * s.a(i) - 1.0));
      resid = std::max(resid, residual(h, s.eig(i), s.vec(i)) / hn);
    }
    cross_re = std::max(cross_re, std::abs(s.cross_overlap.real()));
    const Complex c{0.3 - 1.7 * (n % 7), 2.1 + 0.01 * (n % 13)};
    scale_inv = std::max(scale_inv, std::abs(phase_rigidity(scaled(s.vec1, c)) - s.r1));
  }
  const std::string tag = " [" + std::to_string(opt.samples) + " samples, seed " + std::to_string(opt.seed) + "]";
  rep.checks.push_back(bound_check("core.trace_identity" + tag, trace, 1e-12));
  rep.checks.push_back(bound_check("core.determinant_identity" + tag, det, 1e-12));
  rep.checks.push_back(bound_check("core.norm_at_least_one", norm_ge1, 0.0));
  rep.checks.push_back(bound_check("core.rigidity_times_norm", ra, 1e-12));
  rep.checks.push_back(bound_check("core.residual", resid, 1e-11));
  rep.checks.push_back(bound_check("core.cross_overlap_imaginary", cross_re, 1e-10));
  rep.checks.push_back(bound_check("core.rigidity_scale_invariance", scale_inv, 1e-12));
  rep.checks.push_back({"core.flagged_samples_skipped", true, std::to_string(skipped)});
}

inline void ep_crosschecks(const ValidateOptions& opt, ValidationReport& rep) {
  EpSearchOptions search;
  search.z_tol_factor = opt.ep_z_tol_factor;
  for (const char* name : {"fig1l", "fig2l", "fig3l", "fig3r"}) {
    const SweepScenario s = preset(name);
    const auto roots = analytic_ep_conditions(s);
    double gap = s.a_max - s.a_min;
    for (std::size_t i = 1; i < roots.size(); ++i) gap = std::min(gap, roots[i] - roots[i - 1]);
    double worst_z = 0.0, worst_da = 0.0;
    bool all_true = !roots.empty();
    for (const double a : roots) {
      worst_z = std::max(worst_z, z_magnitude(s, a));
      const EpReport num = find_ep_numeric(s, {a - 0.25 * gap, a + 0.25 * gap}, search);
      worst_da = std::max(worst_da, std::abs(num.a_star - a));
      all_true = all_true && num.is_true_ep;
    }
    const std::string base = std::string("ep.") + name;
    rep.checks.push_back(bound_check(base + ".analytic_z", worst_z, 1e-13));
    rep.checks.push_back(bound_check(base + ".numeric_vs_analytic", worst_da, 1e-9));
    rep.checks.push_back({base + ".numeric_is_true_ep", all_true,
                          std::to_string(roots.size()) + " analytic roots"});
  }
}

inline void preset_checks(ValidationReport& rep) {
  {
    const SweepRecord r = evaluate_point(preset("fig1l"), 0.5);
    const double err = std::max({std::abs(r.state[0].G_half + 0.4), std::abs(r.state[1].G_half + 0.6),
                                 1.0 - r.state[0].r, 1.0 - r.state[1].r,
                                 std::abs(r.state[0].abs_b[0] - std::sqrt(0.5))});
    rep.checks.push_back(bound_check("preset.fig1l.max_width_bifurcation", err, 1e-12));
  }
  {
    const SweepRecord r = evaluate_point(preset("fig2l"), 0.0);
    const double err = std::max({std::abs(r.state[0].eig - 0.55), std::abs(r.state[1].eig - 0.45),
                                 1.0 - r.state[0].r, 1.0 - r.state[1].r});
    rep.checks.push_back(bound_check("preset.fig2l.max_level_repulsion", err, 1e-12));
  }
  {
    const SweepRecord r = evaluate_point(preset("fig2l"), 1.0);
    double err = 0.0;
    for (const auto& b : r.state) {
      err = std::max({err, std::abs(b.r - std::sqrt(3.0) / 2.0), std::abs(b.A - 2.0 / std::sqrt(3.0)),
                      std::abs(b.abs_b[0] - std::pow(3.0, -0.25)), std::abs(b.abs_b[1] - std::pow(3.0, -0.25))});
    }
    rep.checks.push_back(bound_check("preset.fig2l.spot_a1", err, 1e-9));
  }
  for (const char* name : {"fig1l", "fig2l", "fig3l", "fig3r"}) {
    const SweepScenario s = preset(name);
    const auto recs = run_sweep(s);
    double worst = 0.0;
    int count = 0;
    for (const double ep : analytic_ep_conditions(s)) {
      if (ep < s.a_min || ep > s.a_max) continue;
      double rmin = 1.0;
      for (const auto& r : recs) {
        if (std::abs(r.a - ep) <= 0.01) rmin = std::min({rmin, r.state[0].r, r.state[1].r});
      }
      worst = std::max(worst, rmin);
      ++count;
    }
    rep.checks.push_back(bound_check(std::string("preset.") + name + ".rigidity_collapse (" +
                                         std::to_string(count) + " EPs)",
                                     worst, 0.01));
  }
}

}  // namespace detail

inline ValidationReport run_validate(const ValidateOptions& opt = {}) {
  ValidationReport rep;
  detail::core_properties(opt, rep);
  detail::ep_crosschecks(opt, rep);
  detail::preset_checks(rep);
  return rep;
}

inline std::string format_report(const ValidationReport& rep) {
  std::string out;
  std::size_t passed = 0;
  for (const auto& c : rep.checks) {
    out += c.passed ? "PASS  " : "FAIL  ";
    out += c.name;
    out += "  ";
    out += c.detail;
    out += '\n';
    passed += c.passed ? 1 : 0;
  }
  out += std::to_string(passed) + "/" + std::to_string(rep.checks.size()) + " checks passed\n";
  return out;
}

}  // namespace twolevel

#endif  // TWOLEVEL_VALIDATE_HPP
