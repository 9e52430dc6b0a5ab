#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paretoscope/scenario.hpp"

namespace paretoscope {

inline constexpr std::string_view kEngineVersion = "paretoscope 0.1.0";

enum class Command { CheckMove, Efficient, Frontier, Scan, Discover, Welfare };
enum class Format { Table, Csv };

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command c);

struct RunFlags {
  /// 1-based enumeration id or an allocation literal.
  std::optional<std::string> state;
  unsigned parallel = 1;
  /// Overrides the scenario's scan.cap.
  std::optional<std::size_t> cap;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// Extra body lines shown after the table (text format only).
  std::vector<std::string> details;
  std::vector<std::string> diagnostics;
};

/// Runs one command. Missing scenario fields raise MissingField; engine
/// errors are rethrown with the offending move or state in the message.
Report run_command(Command cmd, const Scenario& scenario, const RunFlags& flags = {});

/// CSV carries only the column header and rows, so golden files stay
/// stable; the table form adds the report header and diagnostics.
std::string emit_report(const Report& report, Format format);

}  // namespace paretoscope
