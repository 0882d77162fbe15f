#include "elparg/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace elparg {

void RunReport::add(std::string name, bool pass, std::string detail) {
  results.push_back({std::move(name), pass, std::move(detail)});
}

bool RunReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) j["params"][k] = v;
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& r : results) j["results"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  if (!lines.empty()) j["output"] = lines;
  return j.dump(2);
}

void RunReport::print_text(std::ostream& os, bool quiet) const {
  if (!quiet)
    for (const auto& l : lines) os << l << '\n';
  for (const auto& r : results) {
    if (quiet && r.pass) continue;
    os << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) os << ": " << r.detail;
    os << '\n';
  }
}

}  // namespace elparg
