#ifndef TWOLEVEL_IO_JSON_HPP
#define TWOLEVEL_IO_JSON_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "../ep.hpp"
#include "../sweep.hpp"
#include "csv.hpp"

namespace twolevel::io {

inline nlohmann::ordered_json scenario_json(const SweepScenario& s) {
  return {{"name", s.name},
          {"e1", {s.e1.c0, s.e1.c1}},
          {"e2", {s.e2.c0, s.e2.c1}},
          {"gamma1", {s.gamma1.c0, s.gamma1.c1}},
          {"gamma2", {s.gamma2.c0, s.gamma2.c1}},
          {"omega", {s.omega.w0.real(), s.omega.w0.imag(), s.omega.w1.real(), s.omega.w1.imag()}},
          {"a_min", s.a_min},
          {"a_max", s.a_max},
          {"n_steps", s.n_steps}};
}

/// Same field names as the CSV columns.
inline nlohmann::ordered_json record_json(const SweepRecord& r) {
  nlohmann::ordered_json j;
  const auto values = record_values(r);
  for (std::size_t i = 0; i < values.size(); ++i) j[std::string(kCsvColumns[i])] = values[i];
  j["at_ep"] = r.at_ep;
  j["regime"] = regime_name(r.regime);
  return j;
}

inline std::string emit_json(const SweepScenario& s, const std::vector<SweepRecord>& records) {
  if (records.empty()) throw Error(ErrorKind::EmptyInput, "emit_json: no records");
  nlohmann::ordered_json doc;
  doc["scenario"] = scenario_json(s);
  auto& arr = doc["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) arr.push_back(record_json(r));
  return doc.dump(1) + "\n";
}

inline nlohmann::ordered_json ep_report_json(const EpReport& r) {
  return {{"a_star", r.a_star},
          {"z_mag", r.z_mag},
          {"method", to_string(r.method)},
          {"is_true_ep", r.is_true_ep},
          {"regime_left", to_string(r.regime_left)},
          {"regime_right", to_string(r.regime_right)}};
}

inline std::string emit_ep_json(const SweepScenario& s, const std::vector<EpReport>& reports) {
  nlohmann::ordered_json doc;
  doc["scenario"] = scenario_json(s);
  auto& arr = doc["eps"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(ep_report_json(r));
  return doc.dump(1) + "\n";
}

}  // namespace twolevel::io

#endif  // TWOLEVEL_IO_JSON_HPP
