// paretoscope: Pareto-improvement and efficiency checks over scenario files.
//
// Exit codes: 0 success, 1 parse/validation error, 2 engine error,
// 3 scan cap exceeded.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "paretoscope/error.hpp"
#include "paretoscope/report.hpp"
#include "paretoscope/scenario.hpp"

namespace {

int exit_code_for(paretoscope::Errc code) {
  using paretoscope::Errc;
  switch (code) {
    case Errc::ParseError:
    case Errc::ValidationError:
    case Errc::MissingField: return 1;
    case Errc::CapExceeded: return 3;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide Pareto improvements, efficiency and frontiers over a finite feasible set", "paretoscope"};
  app.set_version_flag("--version", std::string(paretoscope::kEngineVersion));

  std::string command;
  std::string scenario_path;
  std::string format = "table";
  std::string output;
  std::string state;
  unsigned parallel = 1;
  std::size_t cap = 0;

  app.add_option("command", command, "check-move | efficient | frontier | scan | discover | welfare")
      ->required()
      ->check(CLI::IsMember({"check-move", "efficient", "frontier", "scan", "discover", "welfare"}));
  app.add_option("--scenario", scenario_path, "Scenario file")->required();
  app.add_option("--state", state, "State id (1-based, enumeration order) or allocation literal");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv"}));
  app.add_option("--output", output, "Write the report here instead of stdout");
  app.add_option("--parallel", parallel, "Worker threads for scan and frontier")->check(CLI::Range(1u, 256u));
  app.add_option("--cap", cap, "Maximum ordered moves a scan may examine")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    const auto scenario = paretoscope::parse_scenario(scenario_path);
    paretoscope::RunFlags flags;
    flags.parallel = parallel;
    if (!state.empty()) flags.state = state;
    if (cap > 0) flags.cap = cap;

    const auto report = paretoscope::run_command(*paretoscope::parse_command(command), scenario, flags);
    const auto bytes =
        paretoscope::emit_report(report, format == "csv" ? paretoscope::Format::Csv : paretoscope::Format::Table);

    if (output.empty()) {
      std::cout << bytes;
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out) {
        std::cerr << "paretoscope: cannot write '" << output << "'\n";
        return 2;
      }
      out << bytes;
    }
    return 0;
  } catch (const paretoscope::Error& e) {
    std::cerr << "paretoscope: " << paretoscope::to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}
