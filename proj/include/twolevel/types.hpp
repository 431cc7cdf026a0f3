#ifndef TWOLEVEL_TYPES_HPP
#define TWOLEVEL_TYPES_HPP

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace twolevel {

using Complex = std::complex<double>;

/// Two-component complex state vector in the unperturbed basis.
using Vec2 = std::array<Complex, 2>;

enum class ErrorKind {
  InvalidInput,
  ZeroVector,
  NotNormalized,
  DegenerateDecoupled,
  EmptyBracket,
  AtEp,
  UnknownPreset,
  ParseError,
  EmptyInput,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::DegenerateDecoupled: return "DegenerateDecoupled";
    case ErrorKind::EmptyBracket: return "EmptyBracket";
    case ErrorKind::AtEp: return "AtEp";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyInput: return "EmptyInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline double norm2(const Vec2& v) { return std::norm(v[0]) + std::norm(v[1]); }

/// Complex bilinear self-product v^T v (no conjugation).
inline Complex bilinear(const Vec2& u, const Vec2& v) { return u[0] * v[0] + u[1] * v[1]; }

/// Conjugate inner product <u|v>.
inline Complex inner(const Vec2& u, const Vec2& v) {
  return std::conj(u[0]) * v[0] + std::conj(u[1]) * v[1];
}

inline Vec2 scaled(const Vec2& v, Complex s) { return {v[0] * s, v[1] * s}; }

}  // namespace twolevel

#endif  // TWOLEVEL_TYPES_HPP
