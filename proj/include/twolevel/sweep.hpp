#ifndef TWOLEVEL_SWEEP_HPP
#define TWOLEVEL_SWEEP_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "core.hpp"
#include "diagnostics.hpp"
#include "ep.hpp"
#include "scenario.hpp"

namespace twolevel {

/// Observables of one state at one parameter value.
struct StateBlock {
  Complex eig;
  double E = 0.0;       // Re(eig)
  double G_half = 0.0;  // Im(eig), i.e. Gamma/2
  double r = 1.0;
  double A = 1.0;
  std::array<double, 2> abs_b{};
  std::array<double, 2> theta{};
  double nl_mag = 0.0;
  Vec2 unit;  // unit conjugate-norm eigenvector, used for tracking
};

struct SweepRecord {
  double a = 0.0;
  std::array<StateBlock, 2> state;
  Complex z;
  double abs_z = 0.0;
  double abs_b12 = 0.0;  // |<Phi_1|Phi_2>|
  double ep_alignment = 0.0;
  bool at_ep = false;
  bool degenerate_decoupled = false;
  std::optional<Regime> regime;  // empty where |Z| is below the coalescence tolerance
  std::array<int, 2> perm{0, 1};  // perm[label] = index in the "+Z first" ordering
};

inline std::string regime_name(const std::optional<Regime>& r) {
  return r ? to_string(*r) : "ep";
}

namespace detail {

inline StateBlock make_block(const EigenSolution& s, int i, double nl_mag) {
  StateBlock b;
  b.eig = s.eig(i);
  b.E = b.eig.real();
  b.G_half = b.eig.imag();
  b.r = s.r(i);
  b.A = s.a(i);
  const auto& bi = s.b[static_cast<std::size_t>(i)];
  b.abs_b = {std::abs(bi[0]), std::abs(bi[1])};
  b.theta = s.theta[static_cast<std::size_t>(i)];
  b.nl_mag = nl_mag;
  const Vec2& v = s.vec(i);
  b.unit = scaled(v, 1.0 / std::sqrt(norm2(v)));
  return b;
}

inline SweepRecord make_record(double a, const EigenSolution& s, const DiagnosticsRecord& d,
                               std::optional<Regime> regime) {
  SweepRecord rec;
  rec.a = a;
  rec.state = {make_block(s, 0, d.nonlinear_mag1), make_block(s, 1, d.nonlinear_mag2)};
  rec.z = s.z;
  rec.abs_z = std::abs(s.z);
  rec.abs_b12 = std::abs(s.cross_overlap);
  rec.ep_alignment = d.ep_alignment;
  rec.at_ep = s.at_ep;
  rec.degenerate_decoupled = s.degenerate_decoupled;
  rec.regime = regime;
  return rec;
}

inline SweepRecord relabel(SweepRecord rec, std::array<int, 2> perm) {
  const auto blocks = rec.state;
  rec.state = {blocks[static_cast<std::size_t>(perm[0])], blocks[static_cast<std::size_t>(perm[1])]};
  rec.perm = perm;
  return rec;
}

struct EvaluatedPoint {
  EigenSolution solution;
  SweepRecord record;
};

inline EvaluatedPoint evaluate(const SweepScenario& s, double a) {
  const TwoLevelHamiltonian h = s.at(a);
  EvaluatedPoint p;
  p.solution = solve(h, z_value(s, a));
  std::optional<Regime> regime;
  try {
    regime = regime_classify(s, a).kind;
  } catch (const Error&) {
  }
  p.record = make_record(a, p.solution, diagnose(h, p.solution), regime);
  return p;
}

}  // namespace detail

/// All observables at a, with provisional labels ("+Z" state first).
inline SweepRecord evaluate_point(const SweepScenario& s, double a) {
  return detail::evaluate(s, a).record;
}

/// Assignment of the current eigenpairs to the previous point's labels.
/// Primary criterion is eigenvalue distance; near-ties are broken by
/// eigenvector overlap. At a flagged coalescence the previous assignment is
/// carried forward.
inline std::array<int, 2> track_branches(const SweepRecord& prev, const EigenSolution& cur) {
  if (cur.at_ep) return prev.perm;
  const Complex p0 = prev.state[0].eig, p1 = prev.state[1].eig;
  const double cost_keep = std::abs(p0 - cur.eig1) + std::abs(p1 - cur.eig2);
  const double cost_swap = std::abs(p0 - cur.eig2) + std::abs(p1 - cur.eig1);
  if (std::abs(cost_keep - cost_swap) > 1e-14) {
    return cost_keep <= cost_swap ? std::array<int, 2>{0, 1} : std::array<int, 2>{1, 0};
  }
  const auto unit = [](const Vec2& v) { return scaled(v, 1.0 / std::sqrt(norm2(v))); };
  const Vec2 c0 = unit(cur.vec1), c1 = unit(cur.vec2);
  const Vec2& u0 = prev.state[0].unit;
  const Vec2& u1 = prev.state[1].unit;
  const double ov_keep = std::abs(inner(u0, c0)) + std::abs(inner(u1, c1));
  const double ov_swap = std::abs(inner(u0, c1)) + std::abs(inner(u1, c0));
  return ov_swap > ov_keep ? std::array<int, 2>{1, 0} : std::array<int, 2>{0, 1};
}

/// Label 1 goes to the state with the larger weight on unperturbed state 1.
inline std::array<int, 2> initial_labels(const EigenSolution& s) {
  const double w0 = std::norm(s.vec1[0]) / norm2(s.vec1);
  const double w1 = std::norm(s.vec2[0]) / norm2(s.vec2);
  return w1 > w0 ? std::array<int, 2>{1, 0} : std::array<int, 2>{0, 1};
}

/// Evaluates every grid point (in parallel), then labels branches in a
/// single sequential pass.
inline std::vector<SweepRecord> run_sweep(const SweepScenario& s, unsigned max_threads = 0) {
  s.validate();
  const auto n = static_cast<std::size_t>(s.n_steps);
  std::vector<detail::EvaluatedPoint> points(n);

  unsigned threads = max_threads ? max_threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, (n + 255) / 256));
  if (threads <= 1) {
    for (std::size_t k = 0; k < n; ++k) points[k] = detail::evaluate(s, s.grid(static_cast<int>(k)));
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t k = t; k < n; k += threads) {
            points[k] = detail::evaluate(s, s.grid(static_cast<int>(k)));
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<SweepRecord> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::array<int, 2> perm =
        k == 0 ? initial_labels(points[0].solution) : track_branches(out.back(), points[k].solution);
    out.push_back(detail::relabel(points[k].record, perm));
  }
  return out;
}

}  // namespace twolevel

#endif  // TWOLEVEL_SWEEP_HPP
