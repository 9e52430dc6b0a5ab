#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paretoscope/polity.hpp"
#include "paretoscope/transforms.hpp"
#include "paretoscope/welfare.hpp"

namespace paretoscope {

struct DiscoverySettings {
  std::optional<AgentId> beneficiary;
  std::optional<std::size_t> steps;
  std::optional<Quantity> increment;
  std::optional<Allocation> initial;
  std::optional<Quantity> lattice_step;
};

/// A fully validated scenario file.
struct Scenario {
  std::string source;
  /// FNV-1a 64 of the file bytes, 16 lowercase hex digits.
  std::string digest;
  Polity polity{1, 1};
  FeasibleSet feasible{ExplicitList{}};
  std::vector<TransformSpec> transforms;
  std::optional<SwfSpec> swf;
  std::vector<Move> moves;
  DiscoverySettings discover;
  std::size_t scan_cap = 1'000'000;
};

/// Reads `key = value` lines; `#` starts a comment. See README for the keys.
/// Raises ParseError (with line and column) or ValidationError.
Scenario parse_scenario(const std::filesystem::path& path);
Scenario parse_scenario_text(std::string_view text, std::string source = "<memory>");

std::string fnv1a_hex(std::string_view bytes);

}  // namespace paretoscope
