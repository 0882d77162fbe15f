#include "elparg/fixtures.hpp"

#include <stdexcept>
#include <string>

#include "fixtures_data.inc"

namespace elparg {

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all(std::begin(kFixtureData), std::end(kFixtureData));
  return all;
}

Program fixture_program(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return parse_program(f.text);
  throw std::out_of_range("unknown fixture '" + std::string(name) + "'");
}

std::string_view fixture_expectations() { return kExpectations; }

}  // namespace elparg
