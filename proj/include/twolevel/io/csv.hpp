#ifndef TWOLEVEL_IO_CSV_HPP
#define TWOLEVEL_IO_CSV_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "../sweep.hpp"
#include "config.hpp"

namespace twolevel::io {

/// Column order of the sweep CSV. Angles in radians, theta = 0 where the
/// coefficient vanishes; at_ep is 0/1; regime is "ep" where undefined.
inline constexpr std::array<std::string_view, 26> kCsvColumns{
    "a",        "E1",           "G1_half",      "E2",      "G2_half", "r1",      "r2",
    "one_minus_r1", "one_minus_r2", "abs_b11",   "abs_b12", "abs_b21", "abs_b22", "theta11",
    "theta12",  "theta21",      "theta22",      "absZ",    "reZ",     "imZ",     "absB12",
    "ep_alignment", "nl_mag1",  "nl_mag2",      "at_ep",   "regime"};

/// Numeric columns of a record, in kCsvColumns order (without at_ep, regime).
inline std::array<double, 24> record_values(const SweepRecord& r) {
  const StateBlock& s1 = r.state[0];
  const StateBlock& s2 = r.state[1];
  return {r.a,          s1.E,          s1.G_half,    s2.E,          s2.G_half,   s1.r,
          s2.r,         1.0 - s1.r,    1.0 - s2.r,   s1.abs_b[0],   s1.abs_b[1], s2.abs_b[0],
          s2.abs_b[1],  s1.theta[0],   s1.theta[1],  s2.theta[0],   s2.theta[1], r.abs_z,
          r.z.real(),   r.z.imag(),    r.abs_b12,    r.ep_alignment, s1.nl_mag,  s2.nl_mag};
}

inline std::string emit_csv(const std::vector<SweepRecord>& records) {
  if (records.empty()) throw Error(ErrorKind::EmptyInput, "emit_csv: no records");
  std::string out;
  for (std::size_t i = 0; i < kCsvColumns.size(); ++i) {
    if (i) out += ',';
    out += kCsvColumns[i];
  }
  out += '\n';
  for (const auto& r : records) {
    for (const double v : record_values(r)) {
      out += detail::format_double(v);
      out += ',';
    }
    out += r.at_ep ? '1' : '0';
    out += ',';
    out += regime_name(r.regime);
    out += '\n';
  }
  return out;
}

}  // namespace twolevel::io

#endif  // TWOLEVEL_IO_CSV_HPP
