#ifndef TWOLEVEL_GOLDEN_SECTION_HPP
#define TWOLEVEL_GOLDEN_SECTION_HPP

#include <cmath>

namespace twolevel {

struct GoldenSectionResult {
  double x;
  double fx;
  int iterations;
};

/// Golden-section search for a minimum of a unimodal f on [lo, hi].
/// Stops when the bracket is narrower than x_tol or can no longer be split
/// in doubles (x_tol = 0 runs to machine resolution). Returns the best point
/// evaluated, endpoints included.
template <typename F>
GoldenSectionResult golden_section_minimize(F&& f, double lo, double hi, double x_tol,
                                            int max_iterations = 500) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);

  int it = 0;
  for (; it < max_iterations && (b - a) > x_tol; ++it) {
    if (!(a < c && c < d && d < b)) break;
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }

  GoldenSectionResult best{c, fc, it};
  if (fd < best.fx) best = {d, fd, it};
  const double mid = 0.5 * (a + b);
  if (const double fm = f(mid); fm < best.fx) best = {mid, fm, it};
  if (const double fl = f(lo); fl < best.fx) best = {lo, fl, it};
  if (const double fh = f(hi); fh < best.fx) best = {hi, fh, it};
  return best;
}

}  // namespace twolevel

#endif  // TWOLEVEL_GOLDEN_SECTION_HPP
