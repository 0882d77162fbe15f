// The built-in self test: expectations on the bundled fixtures, every
// cross-engine property on each fixture, and optionally on a random corpus.
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "elparg/report.hpp"
#include "elparg/semantics.hpp"

namespace elparg {

struct SelftestOptions {
  std::size_t corpus_size = 0;
  std::uint64_t seed = 1;
};

RunReport selftest(const SelftestOptions& options = {});

/// "u/a" -> {u, a}; "u/x" expands to all five defences over {u,a,d,sa,su}.
/// Returns nullopt for malformed text.
std::optional<std::vector<SemanticsParams>> parse_params_pattern(std::string_view text);

}  // namespace elparg
