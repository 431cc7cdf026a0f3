#ifndef TWOLEVEL_EP_HPP
#define TWOLEVEL_EP_HPP

// Exceptional-point location along a one-parameter scenario.
//
// Z^2 = ((eps1 - eps2)^2 + 4 omega^2) / 4 = f+(a) f-(a) / 4 with
// f+-(a) = (eps1 - eps2)(a) +- 2i omega(a). For a linear scenario both
// factors are linear in a, so Z is evaluated from them directly: the
// coalescence then cancels inside one linear expression instead of between
// two squares.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "golden_section.hpp"
#include "scenario.hpp"

namespace twolevel {

enum class Regime { level_repulsion, width_bifurcation, mixed };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::level_repulsion: return "level_repulsion";
    case Regime::width_bifurcation: return "width_bifurcation";
    case Regime::mixed: return "mixed";
  }
  return "mixed";
}

enum class EpMethod { analytic_eq13, analytic_eq16, numeric_min };

inline const char* to_string(EpMethod m) {
  switch (m) {
    case EpMethod::analytic_eq13: return "analytic_eq13";
    case EpMethod::analytic_eq16: return "analytic_eq16";
    case EpMethod::numeric_min: return "numeric_min";
  }
  return "numeric_min";
}

struct RegimeLabel {
  Regime kind;
  double dominance;  // max(|Re Z|, |Im Z|) / (|Re Z| + |Im Z|)
};

struct EpReport {
  double a_star = 0.0;
  double z_mag = 0.0;
  EpMethod method = EpMethod::numeric_min;
  bool is_true_ep = false;
  Regime regime_left = Regime::mixed;
  Regime regime_right = Regime::mixed;
};

inline constexpr double kDominanceThreshold = 0.999;
inline constexpr double kEpZTolFactor = 1e-8;

/// f(a) = p + q a for one of the two factors of 4 Z^2.
struct LinearFactor {
  Complex p;
  Complex q;

  Complex at(double a) const { return {p.real() + q.real() * a, p.imag() + q.imag() * a}; }
};

/// The factors f+ (sign = +1) and f- (sign = -1).
inline LinearFactor coalescence_factor(const SweepScenario& s, int sign) {
  const Complex d0{s.e1.c0 - s.e2.c0, 0.5 * (s.gamma1.c0 - s.gamma2.c0)};
  const Complex d1{s.e1.c1 - s.e2.c1, 0.5 * (s.gamma1.c1 - s.gamma2.c1)};
  const auto two_i = [](Complex w) { return Complex{-2.0 * w.imag(), 2.0 * w.real()}; };
  const double sg = sign >= 0 ? 1.0 : -1.0;
  return {d0 + sg * two_i(s.omega.w0), d1 + sg * two_i(s.omega.w1)};
}

/// Complex Z at parameter a (principal square root).
inline Complex z_value(const SweepScenario& s, double a) {
  return 0.5 * std::sqrt(coalescence_factor(s, +1).at(a) * coalescence_factor(s, -1).at(a));
}

/// |Z| at parameter a; independent of the square-root branch.
inline double z_magnitude(const SweepScenario& s, double a) {
  return 0.5 * std::sqrt(std::abs(coalescence_factor(s, +1).at(a)) *
                         std::abs(coalescence_factor(s, -1).at(a)));
}

/// Natural size of Z at a, used to make the coalescence tolerance scale free.
inline double z_scale(const SweepScenario& s, double a) {
  const TwoLevelHamiltonian h = s.at(a);
  return 1.0 + 0.5 * std::abs(h.eps1() - h.eps2()) + std::abs(h.omega());
}

inline RegimeLabel regime_classify(const SweepScenario& s, double a) {
  const Complex z = z_value(s, a);
  const double mag = std::abs(z);
  if (mag < kEpZTolFactor * z_scale(s, a)) {
    throw Error(ErrorKind::AtEp, "regime undefined at a coalescence (a = " + std::to_string(a) + ")");
  }
  const double re = std::abs(z.real()), im = std::abs(z.imag());
  const double dominance = std::max(re, im) / (re + im);
  Regime kind = Regime::mixed;
  if (re > kDominanceThreshold * mag) {
    kind = Regime::level_repulsion;
  } else if (im > kDominanceThreshold * mag) {
    kind = Regime::width_bifurcation;
  }
  return {kind, dominance};
}

namespace detail {

inline Regime regime_or_mixed(const SweepScenario& s, double a) {
  try {
    return regime_classify(s, a).kind;
  } catch (const Error&) {
    return Regime::mixed;
  }
}

// Root of p + q a for one real component, moved to the neighbouring double
// that makes the evaluated expression smallest.
inline double polished_root(double p, double q) {
  const double root = -p / q;
  double best = root;
  double best_val = std::abs(p + q * root);
  for (const double dir : {HUGE_VAL, -HUGE_VAL}) {
    double x = root;
    for (int i = 0; i < 4 && best_val > 0.0; ++i) {
      x = std::nextafter(x, dir);
      const double v = std::abs(p + q * x);
      if (v < best_val) {
        best = x;
        best_val = v;
      }
    }
  }
  return best;
}

}  // namespace detail

/// Closed-form EP parameters when the scenario reduces to one of the two
/// exactly solvable families:
///   gamma1 == gamma2 and omega imaginary: e1 - e2 = +-2 Im(omega)
///   e1 == e2 and omega real:              gamma1 - gamma2 = +-4 omega
/// Both sides may depend linearly on a. Empty when neither applies.
inline std::vector<double> analytic_ep_conditions(const SweepScenario& s) {
  const bool widths_equal = s.gamma1 == s.gamma2 && s.omega.purely_imaginary();
  const bool energies_equal = s.e1 == s.e2 && s.omega.purely_real();
  if (widths_equal == energies_equal) return {};  // neither, or fully degenerate

  std::vector<double> roots;
  for (const int sign : {+1, -1}) {
    const LinearFactor f = coalescence_factor(s, sign);
    const double p = widths_equal ? f.p.real() : f.p.imag();
    const double q = widths_equal ? f.q.real() : f.q.imag();
    if (q == 0.0) continue;
    roots.push_back(detail::polished_root(p, q));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

inline EpMethod analytic_method(const SweepScenario& s) {
  return s.gamma1 == s.gamma2 ? EpMethod::analytic_eq13 : EpMethod::analytic_eq16;
}

struct EpSearchOptions {
  double x_tol = 1e-12;
  double z_tol_factor = kEpZTolFactor;
};

/// Minimizes |Z| on the bracket by golden section to x_tol, then keeps
/// shrinking inside the final bracket down to machine resolution: |Z| grows
/// like sqrt(|a - a*|), so a 1e-12 bracket alone leaves |Z| near 1e-6.
/// The minimum is always reported; is_true_ep tells whether it reaches zero
/// within tolerance.
inline EpReport find_ep_numeric(const SweepScenario& s, std::pair<double, double> bracket,
                                const EpSearchOptions& opts = {}) {
  const auto [lo, hi] = bracket;
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw Error(ErrorKind::EmptyBracket, "bracket must be a finite interval with lo < hi");
  }
  const auto zmag = [&s](double a) { return z_magnitude(s, a); };
  GoldenSectionResult g = golden_section_minimize(zmag, lo, hi, opts.x_tol);
  const double fine_lo = std::max(lo, g.x - opts.x_tol), fine_hi = std::min(hi, g.x + opts.x_tol);
  if (fine_lo < fine_hi) {
    const GoldenSectionResult fine = golden_section_minimize(zmag, fine_lo, fine_hi, 0.0);
    if (fine.fx <= g.fx) g = fine;
  }
  const double scale = std::max(1.0 + zmag(lo), 1.0 + zmag(hi));

  EpReport r;
  r.a_star = g.x;
  r.z_mag = g.fx;
  r.method = EpMethod::numeric_min;
  r.is_true_ep = g.fx < opts.z_tol_factor * scale;
  const double offset = 1e-3 * (hi - lo);
  r.regime_left = detail::regime_or_mixed(s, g.x - offset);
  r.regime_right = detail::regime_or_mixed(s, g.x + offset);
  return r;
}

inline std::vector<EpReport> analytic_ep_reports(const SweepScenario& s) {
  std::vector<EpReport> out;
  const double offset = 1e-3 * (s.a_max - s.a_min);
  for (const double a : analytic_ep_conditions(s)) {
    EpReport r;
    r.a_star = a;
    r.z_mag = z_magnitude(s, a);
    r.method = analytic_method(s);
    r.is_true_ep = r.z_mag < kEpZTolFactor * z_scale(s, a);
    r.regime_left = detail::regime_or_mixed(s, a - offset);
    r.regime_right = detail::regime_or_mixed(s, a + offset);
    out.push_back(r);
  }
  return out;
}

/// Brackets [a_{k-1}, a_{k+1}] around interior grid minima of |Z|.
inline std::vector<std::pair<double, double>> coalescence_brackets(const SweepScenario& s) {
  std::vector<double> z(static_cast<std::size_t>(s.n_steps));
  for (int k = 0; k < s.n_steps; ++k) z[static_cast<std::size_t>(k)] = z_magnitude(s, s.grid(k));
  std::vector<std::pair<double, double>> out;
  for (int k = 1; k + 1 < s.n_steps; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (z[i] < z[i - 1] && z[i] <= z[i + 1]) out.emplace_back(s.grid(k - 1), s.grid(k + 1));
  }
  return out;
}

/// Analytic EPs (when the scenario admits them) followed by numeric minima
/// of |Z| inside the sweep window.
inline std::vector<EpReport> locate_eps(const SweepScenario& s, const EpSearchOptions& opts = {}) {
  std::vector<EpReport> out = analytic_ep_reports(s);
  for (const auto& br : coalescence_brackets(s)) out.push_back(find_ep_numeric(s, br, opts));
  return out;
}

}  // namespace twolevel

#endif  // TWOLEVEL_EP_HPP
