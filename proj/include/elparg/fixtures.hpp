// Example programs compiled into the library from fixtures/*.elp, together
// with the expectations used by `selftest`.
#pragma once

#include <string_view>
#include <vector>

#include "elparg/syntax.hpp"

namespace elparg {

struct Fixture {
  std::string_view name;  // file stem
  std::string_view text;
};

/// Sorted by name.
const std::vector<Fixture>& fixtures();

/// Parses the named fixture; throws std::out_of_range if unknown.
Program fixture_program(std::string_view name);

/// Contents of fixtures/expected.json.
std::string_view fixture_expectations();

}  // namespace elparg
