#ifndef TWOLEVEL_DIAGNOSTICS_HPP
#define TWOLEVEL_DIAGNOSTICS_HPP

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core.hpp"

namespace twolevel {

/// Off-diagonal coupling block that turns H into H0 plus a source term.
/// The diagonal is zero by construction.
struct SourceTermMatrix {
  Complex w12;

  Vec2 apply(const Vec2& v) const { return {w12 * v[1], w12 * v[0]}; }
};

inline SourceTermMatrix source_term_matrix(const TwoLevelHamiltonian& h) { return {h.omega()}; }

/// N_n = |<Phi_n|W|Phi_n>| * A_n, the size of the cubic source contribution
/// for a biorthogonally normalized state. Vanishes for unmixed states.
inline double nonlinear_magnitude(const Vec2& phi, const SourceTermMatrix& w, double a_norm) {
  detail::require_normalized(phi, "nonlinear_magnitude");
  return std::abs(inner(phi, w.apply(phi))) * a_norm;
}

/// Distance of u1 from the orbit {s i e^{i phi} u2}, unit-normalizing both
/// inputs first. 0 iff the two states differ only by a phase, sqrt(2) for
/// orthogonal states.
inline double ep_phase_alignment(const Vec2& phi1, const Vec2& phi2) {
  detail::require_nonzero(phi1);
  detail::require_nonzero(phi2);
  const Vec2 u1 = scaled(phi1, 1.0 / std::sqrt(norm2(phi1)));
  const Vec2 u2 = scaled(phi2, 1.0 / std::sqrt(norm2(phi2)));
  double best = std::numbers::sqrt2;
  for (const double s : {1.0, -1.0}) {
    const Vec2 t = scaled(u2, Complex{0.0, s});
    const Complex ov = inner(t, u1);
    const Complex phase = ov == Complex{} ? Complex{1.0} : ov / std::abs(ov);
    const Vec2 rotated = scaled(t, phase);
    const double d = std::sqrt(std::norm(u1[0] - rotated[0]) + std::norm(u1[1] - rotated[1]));
    best = std::min(best, d);
  }
  return best;
}

/// ||(H - eig) phi||.
inline double residual(const TwoLevelHamiltonian& h, Complex eig, const Vec2& phi) {
  const Vec2 hv = h.apply(phi);
  return std::sqrt(std::norm(hv[0] - eig * phi[0]) + std::norm(hv[1] - eig * phi[1]));
}

struct DiagnosticsRecord {
  double nonlinear_mag1 = 0.0;
  double nonlinear_mag2 = 0.0;
  double ep_alignment = 0.0;
  double residual1 = 0.0;
  double residual2 = 0.0;
};

inline DiagnosticsRecord diagnose(const TwoLevelHamiltonian& h, const EigenSolution& s) {
  const SourceTermMatrix w = source_term_matrix(h);
  DiagnosticsRecord d;
  // at_ep vectors carry unit conjugate norm and are not bilinear-normalized
  auto nl = [&](const Vec2& phi, double a) {
    return s.at_ep ? std::abs(inner(phi, w.apply(phi))) * a : nonlinear_magnitude(phi, w, a);
  };
  d.nonlinear_mag1 = nl(s.vec1, s.a1);
  d.nonlinear_mag2 = nl(s.vec2, s.a2);
  d.ep_alignment = ep_phase_alignment(s.vec1, s.vec2);
  d.residual1 = residual(h, s.eig1, s.vec1);
  d.residual2 = residual(h, s.eig2, s.vec2);
  return d;
}

}  // namespace twolevel

#endif  // TWOLEVEL_DIAGNOSTICS_HPP
