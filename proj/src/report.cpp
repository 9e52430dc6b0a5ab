#include "paretoscope/report.hpp"

#include <algorithm>

#include "paretoscope/discovery.hpp"
#include "paretoscope/error.hpp"
#include "paretoscope/pareto.hpp"
#include "paretoscope/text.hpp"
#include "paretoscope/welfare.hpp"

namespace paretoscope {

namespace {

template <class F>
auto with_context(const std::string& context, F&& f) {
  try {
    return f();
  } catch (const CapExceeded&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw Error(e.code(), context + ": " + e.what());
  }
}

[[noreturn]] void missing(Command cmd, const std::string& what) {
  throw Error(Errc::MissingField, "command '" + std::string(to_string(cmd)) + "' needs " + what);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string agent_list(const std::vector<AgentId>& ids) {
  if (ids.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ";";
    out += std::to_string(ids[i] + 1);
  }
  return out;
}

std::string violator_list(const std::vector<Violation>& vs) {
  if (vs.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ";";
    out += std::to_string(vs[i].agent + 1) + ":" + to_string(vs[i].reason);
  }
  return out;
}

bool same_verdict(const ImprovementVerdict& a, const ImprovementVerdict& b) {
  return a.is_improvement == b.is_improvement && a.strict_gainers == b.strict_gainers &&
         a.violators == b.violators;
}

Report base_report(Command cmd, const Scenario& sc) {
  Report r;
  r.command = std::string(to_string(cmd));
  r.header = {
      {"engine", std::string(kEngineVersion)},
      {"command", r.command},
      {"scenario digest", sc.digest},
      {"polity", std::to_string(sc.polity.n_agents) + (sc.polity.n_agents == 1 ? " agent, " : " agents, ") +
                     std::to_string(sc.polity.commodity_dim) +
                     (sc.polity.commodity_dim == 1 ? " commodity" : " commodities")},
      {"feasible set", sc.feasible.describe()},
      {"note", "efficiency is judged only against the declared feasible set"},
  };
  std::string ts;
  for (std::size_t i = 0; i < sc.transforms.size(); ++i) {
    if (i) ts += " ";
    ts += std::to_string(i + 1) + "=" + text::format_transform(sc.transforms[i]);
  }
  r.header.emplace_back("transforms", ts);
  return r;
}

Allocation resolve_state(const std::string& spec, const std::vector<Allocation>& states, const Polity& p) {
  if (!spec.empty() && spec.front() == '(') {
    Allocation a = text::parse_allocation(spec);
    if (a.polity() != p) throw Error(Errc::ValidationError, "--state " + spec + " does not match the polity");
    return a;
  }
  const auto id = try_parse_rational(spec);
  if (!id || boost::multiprecision::denominator(*id) != 1 || *id < 1 || *id > states.size()) {
    throw Error(Errc::ValidationError, "--state must be an allocation or an id in 1.." +
                                           std::to_string(states.size()) + ", got '" + spec + "'");
  }
  return states[boost::multiprecision::numerator(*id).convert_to<std::size_t>() - 1];
}

Report check_moves(const Scenario& sc) {
  if (sc.moves.empty()) missing(Command::CheckMove, "key 'moves'");
  Report r = base_report(Command::CheckMove, sc);
  r.columns = {"move", "from", "to", "definitional", "neoclassical", "ratio_form", "agree", "strict_gainers",
               "violators"};
  for (std::size_t i = 0; i < sc.moves.size(); ++i) {
    const Move& m = sc.moves[i];
    const std::string ctx = "move " + std::to_string(i + 1) + " " + text::format_move(m);
    const auto def = with_context(ctx, [&] { return check_improvement(m, sc.transforms); });
    const auto neo = check_improvement_neoclassical(m);
    std::optional<ImprovementVerdict> ratio;
    try {
      ratio = with_context(ctx, [&] { return check_improvement_ratio_form(m, sc.transforms); });
    } catch (const Error& e) {
      if (e.code() != Errc::HypothesisViolated) throw;
    }
    r.rows.push_back({std::to_string(i + 1), text::format_allocation(m.from), text::format_allocation(m.to),
                      bool_str(def.is_improvement), bool_str(neo.is_improvement),
                      ratio ? bool_str(ratio->is_improvement) : "n/a",
                      ratio ? yes_no(same_verdict(def, *ratio)) : "n/a", agent_list(def.strict_gainers),
                      violator_list(def.violators)});
    if (ratio && !same_verdict(def, *ratio)) {
      r.diagnostics.push_back("warning: move " + std::to_string(i + 1) +
                              ": ratio test disagrees with the definitional check");
    }
  }
  return r;
}

Report efficient(const Scenario& sc, const RunFlags& flags) {
  if (!flags.state) missing(Command::Efficient, "--state");
  const auto states = enumerate_feasible(sc.feasible, sc.polity);
  const Allocation state = resolve_state(*flags.state, states, sc.polity);
  const auto v = with_context("state " + text::format_allocation(state),
                              [&] { return is_pareto_efficient(state, sc.feasible, sc.transforms); });
  Report r = base_report(Command::Efficient, sc);
  r.columns = {"state", "efficient", "witness", "skipped_states"};
  r.rows.push_back({text::format_allocation(state), bool_str(v.is_efficient),
                    v.witness ? text::format_move(*v.witness) : "-", std::to_string(v.skipped_states)});
  for (const auto& w : v.warnings) r.diagnostics.push_back("warning: " + w);
  if (v.skipped_states) {
    r.diagnostics.push_back("warning: " + std::to_string(v.skipped_states) +
                            " candidate states skipped (zero reference point)");
  }
  return r;
}

Report frontier(const Scenario& sc, const RunFlags& flags) {
  ScanOptions opts;
  opts.workers = flags.parallel;
  const auto states = enumerate_feasible(sc.feasible, sc.polity);
  const auto f = with_context("frontier", [&] { return enumerate_frontier(sc.feasible, sc.polity, sc.transforms, opts); });
  Report r = base_report(Command::Frontier, sc);
  r.header.emplace_back("frontier size", std::to_string(f.state_ids.size()) + " of " + std::to_string(states.size()));
  r.columns = {"state_id", "allocation", "efficient"};
  for (std::size_t i = 0; i < states.size(); ++i) {
    std::string eff;
    if (std::binary_search(f.skipped_state_ids.begin(), f.skipped_state_ids.end(), i)) {
      eff = "undefined";
    } else {
      eff = bool_str(std::binary_search(f.state_ids.begin(), f.state_ids.end(), i));
    }
    r.rows.push_back({std::to_string(i + 1), text::format_allocation(states[i]), eff});
  }
  if (!f.skipped_state_ids.empty()) {
    r.diagnostics.push_back("warning: " + std::to_string(f.skipped_state_ids.size()) +
                            " states skipped (zero reference point)");
  }
  return r;
}

Report scan(const Scenario& sc, const RunFlags& flags) {
  ScanOptions opts;
  opts.workers = flags.parallel;
  opts.cap = flags.cap.value_or(sc.scan_cap);
  const auto rep = with_context("scan", [&] { return scan_all_moves(sc.feasible, sc.polity, sc.transforms, opts); });
  Report r = base_report(Command::Scan, sc);
  r.columns = {"states", "moves", "improvements", "efficient_states"};
  r.rows.push_back({std::to_string(rep.states_examined), std::to_string(rep.moves_examined),
                    std::to_string(rep.improvements_found), std::to_string(rep.efficient_state_count)});
  for (std::size_t i = 0; i < rep.improving_moves.size(); ++i) {
    r.details.push_back("improvement " + std::to_string(rep.improving_pairs[i].first + 1) + "->" +
                        std::to_string(rep.improving_pairs[i].second + 1) + "  " +
                        text::format_move(rep.improving_moves[i]));
  }
  if (rep.improvements_found == 0 && rep.states_examined > 0) {
    r.details.push_back("no improving move exists: every examined state is efficient");
  }
  if (!rep.skipped_state_ids.empty()) {
    r.diagnostics.push_back("warning: " + std::to_string(rep.skipped_state_ids.size()) +
                            " states skipped (zero reference point)");
  }
  return r;
}

Report discover(const Scenario& sc, const RunFlags& flags) {
  const auto& d = sc.discover;
  if (!d.beneficiary) missing(Command::Discover, "key 'discover.beneficiary'");
  if (!d.steps) missing(Command::Discover, "key 'discover.steps'");
  if (!d.increment) missing(Command::Discover, "key 'discover.increment'");

  Allocation initial;
  if (flags.state) {
    initial = resolve_state(*flags.state, enumerate_feasible(sc.feasible, sc.polity), sc.polity);
  } else if (d.initial) {
    initial = *d.initial;
  } else {
    missing(Command::Discover, "key 'discover.initial' or --state");
  }
  Quantity lattice_step = 1;
  if (d.lattice_step) {
    lattice_step = *d.lattice_step;
  } else if (const auto* lat = std::get_if<FixedTotalLattice>(&sc.feasible.kind())) {
    lattice_step = lat->step;
  }

  const auto run = with_context("discovery run", [&] {
    return simulate_discovery(initial, *d.beneficiary, *d.steps, *d.increment, lattice_step);
  });
  Report r = base_report(Command::Discover, sc);
  r.header.emplace_back("beneficiary", std::to_string(*d.beneficiary + 1));
  r.header.emplace_back("lattice step", to_string(lattice_step));
  r.columns = {"step", "allocation", "improvement", "efficient", "gap"};
  for (std::size_t t = 0; t < run.trajectory.size(); ++t) {
    r.rows.push_back({std::to_string(t), text::format_allocation(run.trajectory[t]),
                      t == 0 ? "-" : bool_str(run.step_verdicts[t - 1].is_improvement),
                      bool_str(run.efficiency_verdicts[t].is_efficient), to_string(run.gap_series[t])});
  }
  return r;
}

Report welfare(const Scenario& sc) {
  if (!sc.swf) missing(Command::Welfare, "key 'swf'");
  const auto states = enumerate_feasible(sc.feasible, sc.polity);
  const auto ranking = with_context("welfare", [&] { return welfare_rank(*sc.swf, states); });
  Report r = base_report(Command::Welfare, sc);
  r.header.emplace_back("welfare functional", to_string(sc.swf->combiner));
  r.columns = {"rank", "state_id", "allocation", "welfare", "tie"};
  for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
    const auto& e = ranking.entries[i];
    r.rows.push_back({std::to_string(i + 1), std::to_string(e.input_index + 1), text::format_allocation(e.state),
                      to_string(e.value), yes_no(e.tied)});
  }
  if (ranking.has_ties) r.diagnostics.push_back("note: ties kept in enumeration order");
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::CheckMove, Command::Efficient, Command::Frontier, Command::Scan, Command::Discover,
                    Command::Welfare}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::CheckMove: return "check-move";
    case Command::Efficient: return "efficient";
    case Command::Frontier: return "frontier";
    case Command::Scan: return "scan";
    case Command::Discover: return "discover";
    case Command::Welfare: return "welfare";
  }
  return "?";
}

Report run_command(Command cmd, const Scenario& scenario, const RunFlags& flags) {
  switch (cmd) {
    case Command::CheckMove: return check_moves(scenario);
    case Command::Efficient: return efficient(scenario, flags);
    case Command::Frontier: return frontier(scenario, flags);
    case Command::Scan: return scan(scenario, flags);
    case Command::Discover: return discover(scenario, flags);
    case Command::Welfare: return welfare(scenario);
  }
  throw Error(Errc::InternalInvariant, "unknown command");
}

std::string emit_report(const Report& report, Format format) {
  std::string out;
  if (format == Format::Csv) {
    auto line = [&](const std::vector<std::string>& fields) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
      }
      out += '\n';
    };
    line(report.columns);
    for (const auto& row : report.rows) line(row);
    return out;
  }

  for (const auto& [k, v] : report.header) out += "# " + k + ": " + v + "\n";
  out += "\n";
  std::vector<std::size_t> width(report.columns.size());
  for (std::size_t c = 0; c < width.size(); ++c) {
    width[c] = report.columns[c].size();
    for (const auto& row : report.rows) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& fields) {
    std::string l;
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (c) l += "  ";
      l += fields[c];
      if (c + 1 < fields.size()) l.append(width[c] - fields[c].size(), ' ');
    }
    out += l + "\n";
  };
  line(report.columns);
  for (const auto& row : report.rows) line(row);
  if (!report.details.empty()) {
    out += "\n";
    for (const auto& d : report.details) out += d + "\n";
  }
  if (!report.diagnostics.empty()) {
    out += "\n";
    for (const auto& d : report.diagnostics) out += d + "\n";
  }
  return out;
}

}  // namespace paretoscope
