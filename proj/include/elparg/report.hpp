// Results of CLI commands and property checks, printable as text or JSON.
#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace elparg {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct RunReport {
  std::string command;
  std::map<std::string, std::string> params;
  std::vector<CheckResult> results;
  /// Plain output lines for text mode (listings, models, matrices).
  std::vector<std::string> lines;

  void add(std::string name, bool pass, std::string detail = {});
  bool ok() const;

  /// {command, params, results: [{name, pass, detail}]}; `lines` go to
  /// an extra "output" array when present.
  std::string to_json() const;
  /// `lines`, then one `PASS name` / `FAIL name: detail` line per result.
  void print_text(std::ostream& os, bool quiet) const;
};

}  // namespace elparg
