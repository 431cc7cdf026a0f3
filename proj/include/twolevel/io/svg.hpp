#ifndef TWOLEVEL_IO_SVG_HPP
#define TWOLEVEL_IO_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "../sweep.hpp"

namespace twolevel::io {

enum class Quantity { energies, widths, rigidity, one_minus_rigidity, mixing, alignment, source_term };

inline constexpr std::array<std::string_view, 7> kQuantityNames{
    "energies", "widths", "rigidity", "one_minus_rigidity", "mixing", "alignment", "source_term"};

inline std::string_view to_string(Quantity q) { return kQuantityNames[static_cast<std::size_t>(q)]; }

inline std::optional<Quantity> parse_quantity(std::string_view name) {
  for (std::size_t i = 0; i < kQuantityNames.size(); ++i) {
    if (kQuantityNames[i] == name) return static_cast<Quantity>(i);
  }
  return std::nullopt;
}

namespace detail {

struct Series {
  std::string label;
  std::vector<double> y;
  bool dashed = false;
};

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

inline std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

inline std::vector<double> nice_ticks(double lo, double hi) {
  const double raw = (hi - lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (const double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step) ticks.push_back(t);
  return ticks;
}

inline std::vector<Series> collect(const std::vector<SweepRecord>& recs, Quantity q,
                                   const SweepScenario* scenario) {
  auto per_state = [&](auto get, const char* name) {
    std::vector<Series> out;
    for (int i = 0; i < 2; ++i) {
      Series s{std::string(name) + std::to_string(i + 1), {}, false};
      for (const auto& r : recs) s.y.push_back(get(r.state[static_cast<std::size_t>(i)]));
      out.push_back(std::move(s));
    }
    return out;
  };
  auto overlay = [&](auto get, const char* name) {
    std::vector<Series> out;
    if (!scenario) return out;
    for (int i = 0; i < 2; ++i) {
      Series s{std::string(name) + std::to_string(i + 1), {}, true};
      for (const auto& r : recs) s.y.push_back(get(i, r.a));
      if (!out.empty() && out.front().y == s.y) continue;  // coinciding unperturbed curves
      out.push_back(std::move(s));
    }
    return out;
  };

  std::vector<Series> series;
  auto append = [&](std::vector<Series> more) {
    for (auto& s : more) series.push_back(std::move(s));
  };
  switch (q) {
    case Quantity::energies:
      append(per_state([](const StateBlock& b) { return b.E; }, "E"));
      append(overlay([&](int i, double a) { return (i == 0 ? scenario->e1 : scenario->e2).at(a); }, "e"));
      break;
    case Quantity::widths:
      append(per_state([](const StateBlock& b) { return b.G_half; }, "Gamma/2 "));
      append(overlay(
          [&](int i, double a) { return 0.5 * (i == 0 ? scenario->gamma1 : scenario->gamma2).at(a); },
          "gamma/2 "));
      break;
    case Quantity::rigidity:
      append(per_state([](const StateBlock& b) { return b.r; }, "r"));
      break;
    case Quantity::one_minus_rigidity:
      append(per_state([](const StateBlock& b) { return 1.0 - b.r; }, "1-r"));
      break;
    case Quantity::mixing:
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          Series s{"|b" + std::to_string(i + 1) + std::to_string(j + 1) + "|", {}, false};
          for (const auto& r : recs) {
            s.y.push_back(r.state[static_cast<std::size_t>(i)].abs_b[static_cast<std::size_t>(j)]);
          }
          series.push_back(std::move(s));
        }
      }
      break;
    case Quantity::alignment: {
      Series s{"alignment", {}, false};
      for (const auto& r : recs) s.y.push_back(r.ep_alignment);
      series.push_back(std::move(s));
      break;
    }
    case Quantity::source_term:
      append(per_state([](const StateBlock& b) { return b.nl_mag; }, "N"));
      break;
  }
  return series;
}

// Quantities scaled by the diverging norm A get a robust upper limit so
// the region away from the coalescence stays readable.
inline std::pair<double, double> y_range(const std::vector<Series>& series, Quantity q) {
  std::vector<double> all;
  for (const auto& s : series) {
    for (const double v : s.y) {
      if (std::isfinite(v)) all.push_back(v);
    }
  }
  if (all.empty()) return {0.0, 1.0};
  std::sort(all.begin(), all.end());
  double lo = all.front(), hi = all.back();
  if (q == Quantity::mixing || q == Quantity::source_term) {
    const double p95 = all[static_cast<std::size_t>(0.95 * static_cast<double>(all.size() - 1))];
    if (p95 > 0.0) hi = std::min(hi, 4.0 * p95);
  }
  if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
    const double pad = std::max(0.5, 0.5 * std::abs(hi));
    lo -= pad;
    hi += pad;
  }
  const double margin = 0.05 * (hi - lo);
  return {lo - margin, hi + margin};
}

}  // namespace detail

/// Standalone SVG line plot of one quantity against a. Solid polylines per
/// state, dashed overlays for the unperturbed e_i(a) or gamma_i(a)/2 when a
/// scenario is given. Values outside the frame, and at_ep records, are
/// drawn clipped to the frame with a marker.
inline std::string emit_svg(const std::vector<SweepRecord>& records, Quantity q,
                            const SweepScenario* scenario = nullptr) {
  if (records.empty()) throw Error(ErrorKind::EmptyInput, "emit_svg: no records");
  using detail::fmt;

  constexpr double W = 720, H = 440, L = 70, R = 150, T = 30, B = 50;
  const double pw = W - L - R, ph = H - T - B;
  const auto series = detail::collect(records, q, scenario);
  const auto [ylo, yhi] = detail::y_range(series, q);
  double xlo = records.front().a, xhi = records.back().a;
  if (xhi <= xlo) {
    xlo -= 0.5;
    xhi += 0.5;
  }
  const auto px = [&](double a) { return L + (a - xlo) / (xhi - xlo) * pw; };
  const auto py = [&](double y) { return T + (yhi - y) / (yhi - ylo) * ph; };

  static constexpr std::array<const char*, 4> kColors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(W) + "\" height=\"" + fmt(H) +
         "\" viewBox=\"0 0 " + fmt(W) + " " + fmt(H) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + fmt(W) + "\" height=\"" + fmt(H) + "\" fill=\"white\"/>\n";
  out += "<rect class=\"frame\" x=\"" + fmt(L) + "\" y=\"" + fmt(T) + "\" width=\"" + fmt(pw) +
         "\" height=\"" + fmt(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

  for (const double t : detail::nice_ticks(xlo, xhi)) {
    const double x = px(t);
    out += "<line class=\"xtick\" x1=\"" + fmt(x) + "\" y1=\"" + fmt(T + ph) + "\" x2=\"" + fmt(x) +
           "\" y2=\"" + fmt(T + ph + 5) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(T + ph + 18) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + detail::tick_label(t) + "</text>\n";
  }
  for (const double t : detail::nice_ticks(ylo, yhi)) {
    const double y = py(t);
    out += "<line class=\"ytick\" x1=\"" + fmt(L - 5) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(L) +
           "\" y2=\"" + fmt(y) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt(L - 8) + "\" y=\"" + fmt(y + 4) +
           "\" font-size=\"11\" text-anchor=\"end\">" + detail::tick_label(t) + "</text>\n";
  }
  out += "<text x=\"" + fmt(L + pw / 2) + "\" y=\"" + fmt(H - 10) +
         "\" font-size=\"13\" text-anchor=\"middle\">a</text>\n";
  out += "<text x=\"" + fmt(L + pw / 2) + "\" y=\"" + fmt(T - 10) +
         "\" font-size=\"13\" text-anchor=\"middle\">" + std::string(to_string(q)) + "</text>\n";

  std::size_t solid = 0;
  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = s.dashed ? "#555555" : kColors[solid++ % kColors.size()];
    std::string points;
    std::string markers;
    for (std::size_t k = 0; k < s.y.size(); ++k) {
      const double v = s.y[k];
      const double x = px(records[k].a);
      const bool clipped = !std::isfinite(v) || v > yhi || v < ylo;
      const double y = clipped ? (std::isfinite(v) && v < ylo ? py(ylo) : py(yhi)) : py(v);
      if (!points.empty()) points += ' ';
      points += fmt(x) + "," + fmt(y);
      if (!s.dashed && (clipped || records[k].at_ep)) {
        markers += "<path class=\"clip-marker\" d=\"M" + fmt(x - 3) + " " + fmt(y - 3) + " L" +
                   fmt(x + 3) + " " + fmt(y + 3) + " M" + fmt(x - 3) + " " + fmt(y + 3) + " L" +
                   fmt(x + 3) + " " + fmt(y - 3) + "\" stroke=\"" + color + "\"/>\n";
      }
    }
    const std::string cls = s.dashed ? "overlay" : "series";
    if (records.size() == 1) {
      const double x = px(records[0].a);
      const double v = s.y[0];
      const double y = std::isfinite(v) ? py(std::clamp(v, ylo, yhi)) : py(yhi);
      out += "<circle class=\"" + cls + "-point\" data-label=\"" + s.label + "\" cx=\"" + fmt(x) +
             "\" cy=\"" + fmt(y) + "\" r=\"3\" fill=\"" + color + "\"/>\n";
    } else {
      out += "<polyline class=\"" + cls + "\" data-label=\"" + s.label + "\" fill=\"none\" stroke=\"" +
             color + "\" stroke-width=\"1.5\"" + (s.dashed ? " stroke-dasharray=\"6,4\"" : "") +
             " points=\"" + points + "\"/>\n";
      out += markers;
    }

    const double ly = T + 15 + 18 * static_cast<double>(si);
    out += "<line class=\"legend\" x1=\"" + fmt(L + pw + 10) + "\" y1=\"" + fmt(ly) + "\" x2=\"" +
           fmt(L + pw + 35) + "\" y2=\"" + fmt(ly) + "\" stroke=\"" + color + "\"" +
           (s.dashed ? " stroke-dasharray=\"6,4\"" : "") + "/>\n";
    out += "<text x=\"" + fmt(L + pw + 40) + "\" y=\"" + fmt(ly + 4) + "\" font-size=\"11\">" +
           s.label + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace twolevel::io

#endif  // TWOLEVEL_IO_SVG_HPP
