#ifndef TWOLEVEL_IO_CONFIG_HPP
#define TWOLEVEL_IO_CONFIG_HPP

// Scenario files: one `key = value` per line, `#` starts a comment.
//
//   name    = fig1l
//   e1      = [1, -1]             # c0 + c1 a
//   e2      = [0, 1]
//   gamma1  = [-1, 0]
//   gamma2  = [-1, 0]
//   omega   = [0, 0.1, 0, 0]      # re0, im0, re1, im1
//   a_min   = 0
//   a_max   = 1
//   n_steps = 2001

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "../scenario.hpp"

namespace twolevel::io {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] inline void parse_fail(int line, std::string_view key, const std::string& msg) {
  std::string where = line > 0 ? "line " + std::to_string(line) + ": " : std::string{};
  if (!key.empty()) where += "'" + std::string(key) + "': ";
  throw Error(ErrorKind::ParseError, where + msg);
}

inline double parse_number(std::string_view tok, int line, std::string_view key) {
  tok = trim(tok);
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    parse_fail(line, key, "malformed number '" + std::string(tok) + "'");
  }
  return v;
}

inline std::vector<double> parse_list(std::string_view value, std::size_t expected, int line,
                                      std::string_view key) {
  value = trim(value);
  if (value.size() < 2 || value.front() != '[' || value.back() != ']') {
    parse_fail(line, key, "expected a bracketed list of " + std::to_string(expected) + " numbers");
  }
  value = value.substr(1, value.size() - 2);
  std::vector<double> out;
  while (true) {
    const auto comma = value.find(',');
    out.push_back(parse_number(value.substr(0, comma), line, key));
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  if (out.size() != expected) {
    parse_fail(line, key,
               "expected " + std::to_string(expected) + " numbers, got " + std::to_string(out.size()));
  }
  return out;
}

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

/// Parses a scenario document. Every key is required exactly once; unknown
/// keys are rejected. Errors name the line and key.
inline SweepScenario parse_config(std::string_view text) {
  static const std::set<std::string, std::less<>> kKeys{
      "name", "e1", "e2", "gamma1", "gamma2", "omega", "a_min", "a_max", "n_steps"};

  std::map<std::string, std::pair<std::string, int>, std::less<>> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) detail::parse_fail(line_no, {}, "expected 'key = value'");
    const std::string_view key = detail::trim(line.substr(0, eq));
    const std::string_view value = detail::trim(line.substr(eq + 1));
    if (!kKeys.contains(key)) detail::parse_fail(line_no, key, "unknown key");
    if (entries.contains(key)) detail::parse_fail(line_no, key, "duplicate key");
    if (value.empty()) detail::parse_fail(line_no, key, "missing value");
    entries.emplace(std::string(key), std::pair{std::string(value), line_no});
  }
  for (const auto& k : kKeys) {
    if (!entries.contains(k)) detail::parse_fail(0, k, "missing required key");
  }

  auto linear = [&](const char* key) {
    const auto& [v, ln] = entries.at(key);
    const auto c = detail::parse_list(v, 2, ln, key);
    return Linear{c[0], c[1]};
  };
  auto scalar = [&](const char* key) {
    const auto& [v, ln] = entries.at(key);
    return detail::parse_number(v, ln, key);
  };

  SweepScenario s;
  {
    std::string_view name = entries.at("name").first;
    if (name.size() >= 2 && name.front() == '"' && name.back() == '"') name = name.substr(1, name.size() - 2);
    s.name = std::string(name);
  }
  s.e1 = linear("e1");
  s.e2 = linear("e2");
  s.gamma1 = linear("gamma1");
  s.gamma2 = linear("gamma2");
  {
    const auto& [v, ln] = entries.at("omega");
    const auto c = detail::parse_list(v, 4, ln, "omega");
    s.omega = {{c[0], c[1]}, {c[2], c[3]}};
  }
  s.a_min = scalar("a_min");
  s.a_max = scalar("a_max");
  {
    const auto& [v, ln] = entries.at("n_steps");
    const double n = detail::parse_number(v, ln, "n_steps");
    if (n != std::floor(n) || n < 2 || n > 1e8) detail::parse_fail(ln, "n_steps", "must be an integer >= 2");
    s.n_steps = static_cast<int>(n);
  }
  if (!(s.a_min < s.a_max)) {
    detail::parse_fail(entries.at("a_max").second, "a_max", "range requires a_min < a_max");
  }
  return s;
}

/// Inverse of parse_config; 17 significant digits so the round trip is exact.
inline std::string format_scenario(const SweepScenario& s) {
  using detail::format_double;
  auto pair = [](const Linear& l) { return "[" + format_double(l.c0) + ", " + format_double(l.c1) + "]"; };
  std::ostringstream os;
  os << "name = " << s.name << "\n"
     << "e1 = " << pair(s.e1) << "\n"
     << "e2 = " << pair(s.e2) << "\n"
     << "gamma1 = " << pair(s.gamma1) << "\n"
     << "gamma2 = " << pair(s.gamma2) << "\n"
     << "omega = [" << format_double(s.omega.w0.real()) << ", " << format_double(s.omega.w0.imag())
     << ", " << format_double(s.omega.w1.real()) << ", " << format_double(s.omega.w1.imag()) << "]\n"
     << "a_min = " << format_double(s.a_min) << "\n"
     << "a_max = " << format_double(s.a_max) << "\n"
     << "n_steps = " << s.n_steps << "\n";
  return os.str();
}

}  // namespace twolevel::io

#endif  // TWOLEVEL_IO_CONFIG_HPP
