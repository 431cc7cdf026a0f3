#ifndef TWOLEVEL_CORE_HPP
#define TWOLEVEL_CORE_HPP

// Exact diagonalization of the symmetric complex 2x2 Hamiltonian
//
//     H = | eps1   omega |      eps_i = e_i + (i/2) gamma_i
//         | omega  eps2  |
//
// with biorthogonal (bilinear) normalization of the right eigenvectors.
// For a complex symmetric matrix the left eigenvectors are the complex
// conjugates of the right ones, so <Phi_i^*|Phi_j> = delta_ij is the only
// normalization needed.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "types.hpp"

namespace twolevel {

/// Relative threshold on |v^T v| / (v^dagger v) below which a vector is
/// treated as self-orthogonal (coalesced).
inline constexpr double kEpTol = 1e-12;

/// Sentinel reported for the conjugate norm A of a self-orthogonal vector.
inline constexpr double kACap = 1e12;

class TwoLevelHamiltonian {
public:
  TwoLevelHamiltonian(double e1, double e2, double gamma1, double gamma2, Complex omega)
      : e1_(e1), e2_(e2), gamma1_(gamma1), gamma2_(gamma2), omega_(omega) {
    if (!std::isfinite(e1) || !std::isfinite(e2) || !std::isfinite(gamma1) ||
        !std::isfinite(gamma2) || !is_finite(omega)) {
      throw Error(ErrorKind::InvalidInput, "Hamiltonian parameters must be finite");
    }
  }

  double e1() const { return e1_; }
  double e2() const { return e2_; }
  double gamma1() const { return gamma1_; }
  double gamma2() const { return gamma2_; }
  Complex omega() const { return omega_; }

  Complex eps1() const { return {e1_, 0.5 * gamma1_}; }
  Complex eps2() const { return {e2_, 0.5 * gamma2_}; }

  /// Frobenius norm.
  double norm() const {
    return std::sqrt(std::norm(eps1()) + std::norm(eps2()) + 2.0 * std::norm(omega_));
  }

  /// Same Hamiltonian with the two unperturbed states relabelled.
  TwoLevelHamiltonian swapped() const { return {e2_, e1_, gamma2_, gamma1_, omega_}; }

  Vec2 apply(const Vec2& v) const {
    return {eps1() * v[0] + omega_ * v[1], omega_ * v[0] + eps2() * v[1]};
  }

private:
  double e1_, e2_, gamma1_, gamma2_;
  Complex omega_;
};

struct Eigenvalues {
  Complex eig1;  // mean + Z
  Complex eig2;  // mean - Z
  Complex z;
};

/// E_{1,2} = (eps1 + eps2)/2 +- Z,  Z = sqrt((eps1 - eps2)^2 + 4 omega^2) / 2.
/// The radicand is formed as (d + 2i omega)(d - 2i omega) so that the
/// cancellation at a coalescence happens in a single subtraction.
inline Eigenvalues eigenvalues(const TwoLevelHamiltonian& h) {
  const Complex d = h.eps1() - h.eps2();
  const Complex two_i_omega{-2.0 * h.omega().imag(), 2.0 * h.omega().real()};
  const Complex z = 0.5 * std::sqrt((d + two_i_omega) * (d - two_i_omega));
  const Complex mean = 0.5 * (h.eps1() + h.eps2());
  return {mean + z, mean - z, z};
}

struct RawEigenvector {
  Vec2 v;
  bool degenerate_decoupled = false;
};

/// Null vector of (H - eig), built from whichever of the two matrix rows
/// gives the larger candidate. For omega == 0 and eps1 == eps2 every vector
/// is an eigenvector; the first basis vector is returned with the flag set.
inline RawEigenvector raw_eigenvector(const TwoLevelHamiltonian& h, Complex eig) {
  const Complex w = h.omega();
  if (w == Complex{} && h.eps1() == h.eps2()) {
    return {{Complex{1.0}, Complex{}}, true};
  }
  // row 1: (eps1 - eig) x + w y = 0  ->  (w, eig - eps1)
  // row 2: w x + (eps2 - eig) y = 0  ->  (eig - eps2, w)
  const Vec2 from_row1{w, eig - h.eps1()};
  const Vec2 from_row2{eig - h.eps2(), w};
  return {norm2(from_row1) >= norm2(from_row2) ? from_row1 : from_row2, false};
}

namespace detail {

// Phi is fixed only up to a sign; rotate so the dominant component has
// argument in (-pi/2, pi/2].
inline Vec2 fix_sign(Vec2 v) {
  const std::size_t k = std::abs(v[1]) > std::abs(v[0]) ? 1 : 0;
  const Complex c = v[k];
  if (c.real() < 0.0 || (c.real() == 0.0 && c.imag() < 0.0)) {
    v = scaled(v, -1.0);
  }
  return v;
}

inline void require_nonzero(const Vec2& v) {
  if (norm2(v) == 0.0) throw Error(ErrorKind::ZeroVector, "vector must be nonzero");
}

inline void require_normalized(const Vec2& phi, const char* what) {
  const double tol = 1e-10 * std::max(1.0, norm2(phi));
  if (!(std::abs(bilinear(phi, phi) - 1.0) <= tol)) {
    throw Error(ErrorKind::NotNormalized, std::string(what) + ": phi^T phi != 1");
  }
}

}  // namespace detail

struct NormalizedVector {
  Vec2 phi;
  double a_norm;
  bool at_ep;
};

/// Scales v so that phi^T phi = 1 and reports A = phi^dagger phi >= 1.
/// Self-orthogonal input (|v^T v| < kEpTol * v^dagger v) cannot be scaled
/// that way; it is returned with unit conjugate norm, A = kACap, at_ep set.
inline NormalizedVector biorthogonal_normalize(const Vec2& v) {
  detail::require_nonzero(v);
  const Complex c = bilinear(v, v);
  const double nn = norm2(v);
  if (std::abs(c) < kEpTol * nn) {
    return {detail::fix_sign(scaled(v, 1.0 / std::sqrt(nn))), kACap, true};
  }
  return {detail::fix_sign(scaled(v, 1.0 / std::sqrt(c))), nn / std::abs(c), false};
}

/// r = |v^T v| / (v^dagger v); scale invariant, 1 for real vectors, 0 at an EP.
inline double phase_rigidity(const Vec2& v) {
  detail::require_nonzero(v);
  return std::abs(bilinear(v, v)) / norm2(v);
}

/// <Phi_i|Phi_j> for biorthogonally normalized states; purely imaginary.
inline Complex cross_overlap(const Vec2& phi_i, const Vec2& phi_j) {
  detail::require_normalized(phi_i, "cross_overlap");
  detail::require_normalized(phi_j, "cross_overlap");
  return inner(phi_i, phi_j);
}

struct MixingCoefficients {
  Vec2 b;
  std::array<double, 2> theta;
};

namespace detail {

inline double angle(Complex b) {
  if (b == Complex{}) return 0.0;
  const double t = std::atan2(b.imag(), b.real());
  return t <= -std::numbers::pi ? std::numbers::pi : t;
}

inline MixingCoefficients mixing_unchecked(const Vec2& phi) {
  return {phi, {angle(phi[0]), angle(phi[1])}};
}

}  // namespace detail

/// The unperturbed Hamiltonian is diagonal, so the expansion coefficients
/// b_ij of Phi_i are its components. theta_ij in (-pi, pi]; 0 when b_ij = 0.
inline MixingCoefficients mixing_coefficients(const Vec2& phi) {
  detail::require_normalized(phi, "mixing_coefficients");
  return detail::mixing_unchecked(phi);
}

struct EigenSolution {
  Complex eig1, eig2, z;
  Vec2 raw1, raw2;
  Vec2 vec1, vec2;
  double a1 = 1.0, a2 = 1.0;
  double r1 = 1.0, r2 = 1.0;
  std::array<Vec2, 2> b;                      // b[i][j] = b_{i+1, j+1}
  std::array<std::array<double, 2>, 2> theta;
  Complex cross_overlap;
  bool at_ep = false;
  bool degenerate_decoupled = false;

  Complex eig(int i) const { return i == 0 ? eig1 : eig2; }
  const Vec2& vec(int i) const { return i == 0 ? vec1 : vec2; }
  double a(int i) const { return i == 0 ? a1 : a2; }
  double r(int i) const { return i == 0 ? r1 : r2; }
};

/// Decomposition around a caller-supplied Z, one of the two square roots of
/// ((eps1 - eps2)^2 + 4 omega^2) / 4. Used by sweeps, which evaluate Z from
/// the parametrization's coefficients.
inline EigenSolution solve(const TwoLevelHamiltonian& h, Complex z) {
  EigenSolution s;
  const Complex mean = 0.5 * (h.eps1() + h.eps2());
  s.eig1 = mean + z;
  s.eig2 = mean - z;
  s.z = z;

  const RawEigenvector raw1 = raw_eigenvector(h, s.eig1);
  if (raw1.degenerate_decoupled) {
    s.degenerate_decoupled = true;
    s.raw1 = s.vec1 = {Complex{1.0}, Complex{}};
    s.raw2 = s.vec2 = {Complex{}, Complex{1.0}};
  } else {
    s.raw1 = raw1.v;
    s.raw2 = raw_eigenvector(h, s.eig2).v;
  }

  if (s.degenerate_decoupled) {
    s.a1 = s.a2 = 1.0;
    s.r1 = s.r2 = 1.0;
  } else {
    const NormalizedVector n1 = biorthogonal_normalize(s.raw1);
    const NormalizedVector n2 = biorthogonal_normalize(s.raw2);
    s.vec1 = n1.phi;
    s.vec2 = n2.phi;
    s.a1 = n1.a_norm;
    s.a2 = n2.a_norm;
    s.at_ep = n1.at_ep || n2.at_ep;
    s.r1 = phase_rigidity(s.vec1);
    s.r2 = phase_rigidity(s.vec2);
  }

  const MixingCoefficients m1 = detail::mixing_unchecked(s.vec1);
  const MixingCoefficients m2 = detail::mixing_unchecked(s.vec2);
  s.b = {m1.b, m2.b};
  s.theta = {m1.theta, m2.theta};
  s.cross_overlap = inner(s.vec1, s.vec2);
  return s;
}

/// Full eigen-decomposition with all per-state observables. Never throws on
/// a valid Hamiltonian: coalesced and degenerate-decoupled cases are flagged.
inline EigenSolution solve(const TwoLevelHamiltonian& h) { return solve(h, eigenvalues(h).z); }

}  // namespace twolevel

#endif  // TWOLEVEL_CORE_HPP
