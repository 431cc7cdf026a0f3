// Acceptance checks: one [PASS]/[FAIL] line per criterion.
// usage: acceptance <path-to-twolevel-cli> <work-dir>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "twolevel/twolevel.hpp"

using namespace twolevel;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(const std::string& id, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << "  " << detail << std::endl;
  if (!ok) ++failures;
}

void guarded(const std::string& id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

std::string g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

const SweepRecord& nearest(const std::vector<SweepRecord>& recs, double a) {
  return *std::min_element(recs.begin(), recs.end(), [a](const auto& x, const auto& y) {
    return std::abs(x.a - a) < std::abs(y.a - a);
  });
}

double min_r(const SweepRecord& r) { return std::min(r.state[0].r, r.state[1].r); }

std::vector<double> roots_in_window(const SweepScenario& s) {
  std::vector<double> out;
  for (const double a : analytic_ep_conditions(s)) {
    if (a >= s.a_min && a <= s.a_max) out.push_back(a);
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run(const std::string& cli, const std::string& args, const fs::path& out) {
  const std::string cmd = "\"" + cli + "\" " + args + " > \"" + out.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void criterion1() {
  const SweepScenario s = preset("fig1l");
  const double z = std::max(z_magnitude(s, 0.4), z_magnitude(s, 0.6));
  const double d1 = std::abs(find_ep_numeric(s, {0.3, 0.5}).a_star - 0.4);
  const double d2 = std::abs(find_ep_numeric(s, {0.5, 0.7}).a_star - 0.6);
  report("1 fig1l analytic EPs", z < 1e-13 && d1 < 1e-9 && d2 < 1e-9,
         "max|Z|=" + g(z) + " numeric |da|=" + g(d1) + "," + g(d2));
}

void criterion2() {
  double worst = 0.0;
  bool located = true;
  std::string detail;
  const std::vector<std::pair<const char*, std::vector<double>>> expected{
      {"fig2l", {-2.0, 2.0}}, {"fig3l", {1.0}}, {"fig3r", {0.5}}};
  for (const auto& [name, eps] : expected) {
    const SweepScenario s = preset(name);
    const auto roots = roots_in_window(s);
    for (const double ep : eps) {
      const auto hit = std::find_if(roots.begin(), roots.end(), [ep](double r) { return std::abs(r - ep) < 1e-13; });
      located = located && hit != roots.end();
      if (hit != roots.end()) worst = std::max(worst, z_magnitude(s, *hit));
    }
    detail += std::string(name) + ":" + std::to_string(roots.size()) + " roots ";
  }
  report("2 fig2l/fig3l/fig3r analytic EPs", located && worst < 1e-13, detail + "max|Z|=" + g(worst));
}

void criterion3() {
  const SweepRecord r = evaluate_point(preset("fig1l"), 0.5);
  double err = std::max(std::abs(r.state[0].G_half + 0.4), std::abs(r.state[1].G_half + 0.6));
  double berr = 0.0;
  for (const auto& b : r.state) {
    for (const double x : b.abs_b) berr = std::max(berr, std::abs(x - std::sqrt(0.5)));
  }
  const bool ok = err < 1e-12 && min_r(r) > 1 - 1e-12 && berr < 1e-12;
  report("3 fig1l maximum width bifurcation", ok,
         "Gamma/2 err=" + g(err) + " 1-r=" + g(1 - min_r(r)) + " |b|-1/sqrt2=" + g(berr));
}

void criterion4() {
  const SweepRecord r = evaluate_point(preset("fig2l"), 0.0);
  const double err = std::max(std::abs(r.state[0].eig - 0.55), std::abs(r.state[1].eig - 0.45));
  const double im = std::max(std::abs(r.state[0].G_half), std::abs(r.state[1].G_half));
  report("4 fig2l maximum level repulsion", err < 1e-13 && im == 0.0 && min_r(r) > 1 - 1e-12,
         "eig err=" + g(err) + " max|Im|=" + g(im) + " 1-r=" + g(1 - min_r(r)));
}

void criterion5() {
  // closed form at a=1: delta = -0.1i, omega = 0.05 gives Z = sqrt(3)/2 * 0.05 and
  // eigenvector components of modulus 3^(-1/4)
  const SweepRecord r = evaluate_point(preset("fig2l"), 1.0);
  double err = 0.0;
  for (const auto& b : r.state) {
    err = std::max({err, std::abs(b.r - std::sqrt(3.0) / 2), std::abs(b.A - 2 / std::sqrt(3.0)),
                    std::abs(b.abs_b[0] - std::pow(3.0, -0.25)), std::abs(b.abs_b[1] - std::pow(3.0, -0.25))});
  }
  report("5 fig2l spot values at a=1", err < 1e-9, "max err=" + g(err));
}

void criterion6() {
  bool ok = true;
  std::string detail;
  for (const char* name : {"fig1l", "fig2l", "fig3l", "fig3r"}) {
    const SweepScenario s = preset(name);
    const auto recs = run_sweep(s);
    double worst = 0.0;
    for (const double ep : roots_in_window(s)) {
      double m = 1.0;
      for (const auto& r : recs) {
        if (std::abs(r.a - ep) <= 0.01) m = std::min(m, min_r(r));
      }
      worst = std::max(worst, m);
    }
    int flags = 0, mismatched = 0;
    for (const auto& r : recs) {
      flags += r.at_ep;
      mismatched += r.at_ep != (min_r(r) < kEpTol);
    }
    ok = ok && worst < 0.01 && mismatched == 0;
    detail += std::string(name) + ": min r=" + g(worst) + " flags=" + std::to_string(flags) + " ";
  }
  const auto f1 = run_sweep(preset("fig1l"));
  const bool grid_eps_flagged = nearest(f1, 0.4).at_ep && nearest(f1, 0.6).at_ep;
  report("6 rigidity collapse and at_ep flag", ok && grid_eps_flagged,
         detail + (grid_eps_flagged ? "fig1l grid EPs flagged" : "fig1l grid EPs NOT flagged"));
}

void criterion7() {
  bool ok = true;
  double worst_align = 0.0, worst_da = 0.0;
  for (const char* name : {"fig1l", "fig2l", "fig3l", "fig3r"}) {
    const SweepScenario s = preset(name);
    const auto recs = run_sweep(s);
    const double h = s.step();
    for (const double ep : roots_in_window(s)) {
      worst_align = std::max(worst_align, nearest(recs, ep).ep_alignment);
      const double half = 0.05 * (s.a_max - s.a_min);
      const SweepRecord* best = nullptr;
      for (const auto& r : recs) {
        if (std::abs(r.a - ep) <= half && (!best || r.ep_alignment < best->ep_alignment)) best = &r;
      }
      const double da = std::abs(best->a - ep);
      worst_da = std::max(worst_da, da / h);
      ok = ok && da <= h * (1 + 1e-9);
    }
  }
  ok = ok && worst_align < 1e-2;
  report("7 phase alignment at EPs", ok,
         "max alignment=" + g(worst_align) + " argmin offset=" + g(worst_da) + " steps");
}

void criterion8() {
  const auto recs = run_sweep(preset("fig1l"));
  double max_n = 0.0, a_max = 0.0;
  for (const auto& r : recs) {
    for (const auto& b : r.state) {
      if (b.nl_mag > max_n) {
        max_n = b.nl_mag;
        a_max = r.a;
      }
    }
  }
  const double n0 = std::max(recs.front().state[0].nl_mag, recs.front().state[1].nl_mag);
  report("8 source term vanishes far from EP", n0 < 0.1 * max_n && a_max >= 0.4 && a_max <= 0.6,
         "N(0)/max=" + g(n0 / max_n) + " argmax a=" + g(a_max));
}

void criterion9() {
  int checked = 0, wrong = 0;
  for (const char* name : {"fig1l", "fig2l"}) {
    const SweepScenario s = preset(name);
    const auto roots = roots_in_window(s);
    for (const auto& r : run_sweep(s)) {
      const bool adjacent =
          std::any_of(roots.begin(), roots.end(), [&](double e) { return std::abs(r.a - e) <= 2 * s.step(); });
      if (adjacent) continue;
      const Complex z = eigenvalues(s.at(r.a)).z;
      const double z2 = (z * z).real();
      const Regime expected = z2 > 0 ? Regime::level_repulsion : Regime::width_bifurcation;
      ++checked;
      wrong += !(r.regime && *r.regime == expected);
    }
  }
  report("9 regime classification on fig1l/fig2l", checked > 0 && wrong == 0,
         std::to_string(checked) + " points, " + std::to_string(wrong) + " mismatched");
}

void criterion10() {
  ValidateOptions opt;
  opt.samples = 100000;
  ValidationReport rep;
  detail::core_properties(opt, rep);
  std::string detail;
  for (const auto& c : rep.checks) {
    if (!c.passed) detail += c.name + "=" + c.detail + " ";
  }
  report("10 property suite over 1e5 Hamiltonians", rep.passed(),
         detail.empty() ? std::to_string(rep.checks.size()) + " properties hold" : detail);
}

void criterion11() {
  for (const char* name : {"fig1r", "fig2r"}) {
    const SweepScenario s = preset(name);
    const std::string n = name;
    std::vector<SweepRecord> recs;
    std::vector<EpReport> eps;
    bool threw = false;
    try {
      recs = run_sweep(s);
      eps = locate_eps(s);
    } catch (const std::exception& e) {
      threw = true;
      report("11a " + n + " sweep completes", false, e.what());
    }
    if (threw) continue;
    report("11a " + n + " sweep completes", recs.size() == static_cast<std::size_t>(s.n_steps),
           std::to_string(recs.size()) + " records, " + std::to_string(eps.size()) + " coalescence candidates");

    bool honest = !eps.empty();
    std::string rep_detail;
    int avoided = 0;
    for (const auto& e : eps) {
      const double tol = kEpZTolFactor * z_scale(s, e.a_star);
      honest = honest && (e.is_true_ep == (e.z_mag < tol));
      avoided += !e.is_true_ep;
      rep_detail += "a*=" + g(e.a_star) + " |Z|=" + g(e.z_mag) + (e.is_true_ep ? " true" : " avoided") + "; ";
    }
    report("11b " + n + " locator reports achieved minimum", honest && avoided > 0, rep_detail);

    bool dips = avoided > 0;
    std::string dip_detail;
    for (const auto& e : eps) {
      if (e.is_true_ep) continue;
      double m = 1.0;
      for (const auto& r : recs) {
        if (std::abs(r.a - e.a_star) <= 0.05 * (s.a_max - s.a_min)) m = std::min(m, min_r(r));
      }
      dips = dips && m < 0.2;
      dip_detail += "a*=" + g(e.a_star) + " min r=" + g(m) + "; ";
    }
    report("11c " + n + " r minimum below 0.2 near each avoided coalescence", dips, dip_detail);

    const double lo = s.a_min + 0.25 * (s.a_max - s.a_min), hi = s.a_max - 0.25 * (s.a_max - s.a_min);
    const SweepRecord* peak = nullptr;
    for (const auto& r : recs) {
      if (r.a >= lo && r.a <= hi && (!peak || min_r(r) > min_r(*peak))) peak = &r;
    }
    report("11d " + n + " r exceeds 0.95 at mid-window extremum", peak && min_r(*peak) > 0.95,
           peak ? "r=" + g(min_r(*peak)) + " at a=" + g(peak->a) : "no interior points");
  }
}

void criterion12(const std::string& cli, const fs::path& work) {
  const fs::path a = work / "run_a", b = work / "run_b";
  fs::remove_all(a);
  fs::remove_all(b);
  fs::create_directories(a);
  fs::create_directories(b);
  const int c1 = run(cli, "sweep --preset fig1l --format csv --out \"" + a.string() + "\"", work / "log_a.txt");
  const int c2 = run(cli, "sweep --preset fig1l --format csv --out \"" + b.string() + "\"", work / "log_b.txt");
  const std::string x = slurp(a / "fig1l.csv"), y = slurp(b / "fig1l.csv");
  const bool csv_same = c1 == 0 && c2 == 0 && !x.empty() && x == y;

  const int v1 = run(cli, "validate --seed 42", work / "validate_a.txt");
  const int v2 = run(cli, "validate --seed 42", work / "validate_b.txt");
  const std::string p = slurp(work / "validate_a.txt"), q = slurp(work / "validate_b.txt");
  const bool report_same = v1 == 0 && v2 == 0 && !p.empty() && p == q;
  report("12 determinism", csv_same && report_same,
         std::string("csv ") + (csv_same ? "identical" : "differs") + " (" + std::to_string(x.size()) +
             " bytes), validate " + (report_same ? "identical" : "differs") + " (exit " + std::to_string(v1) +
             "," + std::to_string(v2) + ")");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <twolevel-cli> <work-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path work = argv[2];
  fs::create_directories(work);

  guarded("1", criterion1);
  guarded("2", criterion2);
  guarded("3", criterion3);
  guarded("4", criterion4);
  guarded("5", criterion5);
  guarded("6", criterion6);
  guarded("7", criterion7);
  guarded("8", criterion8);
  guarded("9", criterion9);
  guarded("10", criterion10);
  guarded("11", criterion11);
  guarded("12", [&] { criterion12(cli, work); });

  std::cout << (failures ? std::to_string(failures) + " check(s) failed" : std::string("all checks passed"))
            << std::endl;
  return failures ? 1 : 0;
}
