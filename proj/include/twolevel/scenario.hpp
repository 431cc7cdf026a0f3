#ifndef TWOLEVEL_SCENARIO_HPP
#define TWOLEVEL_SCENARIO_HPP

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace twolevel {

/// c0 + c1 * a
struct Linear {
  double c0 = 0.0;
  double c1 = 0.0;

  double at(double a) const { return c0 + c1 * a; }
  bool constant() const { return c1 == 0.0; }
  friend bool operator==(const Linear&, const Linear&) = default;
};

/// w0 + w1 * a with complex coefficients.
struct ComplexLinear {
  Complex w0;
  Complex w1;

  Complex at(double a) const { return w0 + w1 * a; }
  bool purely_real() const { return w0.imag() == 0.0 && w1.imag() == 0.0; }
  bool purely_imaginary() const { return w0.real() == 0.0 && w1.real() == 0.0; }
  friend bool operator==(const ComplexLinear&, const ComplexLinear&) = default;
};

/// One-parameter family of Hamiltonians, every entry linear in a, together
/// with the uniform grid it is swept on.
struct SweepScenario {
  std::string name;
  Linear e1, e2, gamma1, gamma2;
  ComplexLinear omega;
  double a_min = 0.0;
  double a_max = 1.0;
  int n_steps = 2001;

  TwoLevelHamiltonian at(double a) const {
    return {e1.at(a), e2.at(a), gamma1.at(a), gamma2.at(a), omega.at(a)};
  }

  double grid(int k) const {
    if (n_steps == 1) return a_min;
    return a_min + (a_max - a_min) * static_cast<double>(k) / static_cast<double>(n_steps - 1);
  }

  double step() const { return (a_max - a_min) / static_cast<double>(n_steps - 1); }

  /// Same family with the two unperturbed states relabelled.
  SweepScenario swapped() const {
    SweepScenario s = *this;
    std::swap(s.e1, s.e2);
    std::swap(s.gamma1, s.gamma2);
    return s;
  }

  void validate() const {
    auto finite = [](double x) { return std::isfinite(x); };
    const bool coeffs_ok = finite(e1.c0) && finite(e1.c1) && finite(e2.c0) && finite(e2.c1) &&
                           finite(gamma1.c0) && finite(gamma1.c1) && finite(gamma2.c0) &&
                           finite(gamma2.c1) && is_finite(omega.w0) && is_finite(omega.w1);
    if (!coeffs_ok) throw Error(ErrorKind::InvalidInput, "scenario coefficients must be finite");
    if (!finite(a_min) || !finite(a_max) || !(a_min < a_max)) {
      throw Error(ErrorKind::InvalidInput, "scenario requires finite a_min < a_max");
    }
    if (n_steps < 2) throw Error(ErrorKind::InvalidInput, "scenario requires n_steps >= 2");
  }

  friend bool operator==(const SweepScenario&, const SweepScenario&) = default;
};

struct PresetInfo {
  std::string_view name;
  std::string_view description;
};

inline constexpr std::array<PresetInfo, 6> kPresets{{
    {"fig1l", "e1=1-a, e2=a, gamma1/2=gamma2/2=-0.5, omega=0.1i; a in [0,1]"},
    {"fig1r", "e1=1-a, e2=a, gamma1/2=-0.05, gamma2/2=-0.1, omega=0.1(1/4+3i/4); a in [0,1]"},
    {"fig2l", "e1=e2=0.5, gamma1=-0.05a, gamma2=0.05a, omega=0.05; a in [-4,4]"},
    {"fig2r", "e1=0.5, e2=0.475, gamma1=-0.05a, gamma2=0.05a, omega=0.05(3/4+i/4); a in [-4,4]"},
    {"fig3l", "e1=0.5, e2=0.4, gamma1=gamma2=-0.05, omega=0.05ai; a in [0,2]"},
    {"fig3r", "e1=e2=0.5, gamma1=-0.5, gamma2=-0.4, omega=0.05a; a in [0,2]"},
}};

/// The six figure scenarios, 2001 grid points each.
inline SweepScenario preset(std::string_view name) {
  SweepScenario s;
  s.name = std::string(name);
  s.n_steps = 2001;
  if (name == "fig1l" || name == "fig1r") {
    s.e1 = {1.0, -1.0};
    s.e2 = {0.0, 1.0};
    s.a_min = 0.0;
    s.a_max = 1.0;
    if (name == "fig1l") {
      s.gamma1 = {-1.0, 0.0};
      s.gamma2 = {-1.0, 0.0};
      s.omega = {{0.0, 0.1}, {}};
    } else {
      s.gamma1 = {-0.1, 0.0};
      s.gamma2 = {-0.2, 0.0};
      s.omega = {{0.025, 0.075}, {}};
    }
  } else if (name == "fig2l" || name == "fig2r") {
    s.e1 = {0.5, 0.0};
    s.e2 = {name == "fig2l" ? 0.5 : 0.475, 0.0};
    s.gamma1 = {0.0, -0.05};
    s.gamma2 = {0.0, 0.05};
    s.omega = name == "fig2l" ? ComplexLinear{{0.05, 0.0}, {}} : ComplexLinear{{0.0375, 0.0125}, {}};
    s.a_min = -4.0;
    s.a_max = 4.0;
  } else if (name == "fig3l") {
    s.e1 = {0.5, 0.0};
    s.e2 = {0.4, 0.0};
    s.gamma1 = {-0.05, 0.0};
    s.gamma2 = {-0.05, 0.0};
    s.omega = {{}, {0.0, 0.05}};
    s.a_min = 0.0;
    s.a_max = 2.0;
  } else if (name == "fig3r") {
    s.e1 = {0.5, 0.0};
    s.e2 = {0.5, 0.0};
    s.gamma1 = {-0.5, 0.0};
    s.gamma2 = {-0.4, 0.0};
    s.omega = {{}, {0.05, 0.0}};
    s.a_min = 0.0;
    s.a_max = 2.0;
  } else {
    throw Error(ErrorKind::UnknownPreset, "unknown preset '" + std::string(name) + "'");
  }
  return s;
}

inline std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& p : kPresets) names.emplace_back(p.name);
  return names;
}

}  // namespace twolevel

#endif  // TWOLEVEL_SCENARIO_HPP
