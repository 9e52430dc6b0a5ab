#include "paretoscope/scenario.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "paretoscope/error.hpp"
#include "paretoscope/text.hpp"

namespace paretoscope {

namespace {

struct Entry {
  std::string value;
  std::size_t line;
  std::size_t column;  // of the first value character
};

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  std::size_t e = s.size();
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  if (lead) *lead = b;
  return s.substr(b, e - b);
}

[[noreturn]] void invalid(const std::string& key, const std::string& why) {
  throw Error(Errc::ValidationError, "key '" + key + "': " + why);
}

class Entries {
 public:
  explicit Entries(std::map<std::string, Entry> m) : m_(std::move(m)) {}

  const Entry* find(const std::string& key) {
    auto it = m_.find(key);
    if (it == m_.end()) return nullptr;
    used_.insert(key);
    return &it->second;
  }

  const Entry& require(const std::string& key) {
    if (const Entry* e = find(key)) return *e;
    throw Error(Errc::ValidationError, "key '" + key + "': required but missing");
  }

  /// Runs `f(value)` and rebases any ParseError column onto the file.
  template <class F>
  auto parse(const std::string& key, const Entry& e, F&& f) {
    try {
      return f(std::string_view(e.value));
    } catch (const ParseError& pe) {
      throw ParseError("key '" + key + "': " + pe.detail(), e.line, e.column + pe.column() - 1);
    } catch (const Error& err) {
      if (err.code() == Errc::ValidationError) throw;
      invalid(key, err.what());
    }
  }

  std::vector<std::string> unused() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : m_) {
      if (!used_.count(k)) out.push_back(k);
    }
    return out;
  }

  std::vector<std::string> keys_with_prefix(const std::string& prefix) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : m_) {
      if (k.rfind(prefix, 0) == 0) out.push_back(k);
    }
    return out;
  }

 private:
  std::map<std::string, Entry> m_;
  std::set<std::string> used_;
};

std::size_t positive_integer(const std::string& key, std::string_view value) {
  const Rational v = parse_rational(value);
  if (boost::multiprecision::denominator(v) != 1 || v < 1) {
    invalid(key, "expected a positive integer, got '" + std::string(value) + "'");
  }
  return boost::multiprecision::numerator(v).convert_to<std::size_t>();
}

void check_shape(const std::string& key, const Allocation& a, const Polity& p) {
  if (a.n_agents() != p.n_agents || a.commodity_dim() != p.commodity_dim) {
    invalid(key, "allocation " + text::format_allocation(a) + " does not have " +
                     std::to_string(p.n_agents) + " agents and " + std::to_string(p.commodity_dim) +
                     " commodities");
  }
}

void check_transform(const std::string& key, const TransformSpec& t, const Polity& p) {
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (!std::is_same_v<K, OwnBundle>) {
          if (!k.weights.empty() && k.weights.size() != p.commodity_dim) {
            invalid(key, std::to_string(k.weights.size()) + " weights for " +
                             std::to_string(p.commodity_dim) + " commodities");
          }
        }
        if constexpr (std::is_same_v<K, RelativeToNeighborhood>) {
          for (AgentId id : k.neighbors) {
            if (id >= p.n_agents) invalid(key, "neighbour " + std::to_string(id + 1) + " is not a valid agent id");
          }
        }
      },
      t.kind());
}

std::map<std::string, Entry> read_entries(std::string_view text) {
  std::map<std::string, Entry> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    if (!trim(line).empty()) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        std::size_t lead = 0;
        trim(line, &lead);
        throw ParseError("expected 'key = value'", line_no, lead + 1);
      }
      std::size_t key_lead = 0;
      const std::string key(trim(line.substr(0, eq), &key_lead));
      if (key.empty()) throw ParseError("missing key before '='", line_no, eq + 1);
      std::size_t value_lead = 0;
      const std::string value(trim(line.substr(eq + 1), &value_lead));
      if (value.empty()) throw ParseError("key '" + key + "' has no value", line_no, eq + 2);
      if (out.count(key)) {
        throw Error(Errc::ValidationError, "key '" + key + "': declared twice (line " +
                                               std::to_string(out[key].line) + " and line " +
                                               std::to_string(line_no) + ")");
      }
      out.emplace(key, Entry{value, line_no, eq + 2 + value_lead});
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Scenario parse_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ValidationError, "cannot read scenario file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str(), path.string());
}

Scenario parse_scenario_text(std::string_view text, std::string source) {
  Entries entries(read_entries(text));
  Scenario sc;
  sc.source = std::move(source);
  sc.digest = fnv1a_hex(text);

  const std::size_t agents = entries.parse("agents", entries.require("agents"),
                                           [](std::string_view v) { return positive_integer("agents", v); });
  std::size_t commodities = 1;
  if (const Entry* e = entries.find("commodities")) {
    commodities = entries.parse("commodities", *e,
                                [](std::string_view v) { return positive_integer("commodities", v); });
  }
  sc.polity = Polity(agents, commodities);
  const Polity& p = sc.polity;

  // feasible set
  const Entry& kind = entries.require("feasible.kind");
  if (kind.value == "box_grid") {
    auto levels = entries.parse("feasible.levels", entries.require("feasible.levels"), text::parse_levels);
    if (levels.size() != 1 && levels.size() != p.commodity_dim) {
      invalid("feasible.levels", std::to_string(levels.size()) + " level lists for " +
                                     std::to_string(p.commodity_dim) + " commodities");
    }
    sc.feasible = FeasibleSet::box_grid(std::move(levels));
  } else if (kind.value == "fixed_total") {
    auto totals = entries.parse("feasible.total", entries.require("feasible.total"), text::parse_quantity_list);
    if (totals.size() != 1 && totals.size() != p.commodity_dim) {
      invalid("feasible.total", std::to_string(totals.size()) + " totals for " +
                                    std::to_string(p.commodity_dim) + " commodities");
    }
    Quantity step = 1;
    if (const Entry* e = entries.find("feasible.step")) {
      step = entries.parse("feasible.step", *e, [](std::string_view v) { return Quantity::parse(v); });
    }
    if (step.is_zero()) invalid("feasible.step", "must be positive");
    for (const auto& t : totals) {
      if (boost::multiprecision::denominator(Rational(t.value() / step.value())) != 1) {
        invalid("feasible.step", "step " + to_string(step) + " does not divide total " + to_string(t));
      }
    }
    sc.feasible = FeasibleSet::fixed_total(std::move(totals), step);
  } else if (kind.value == "list") {
    auto list = entries.parse("feasible.list", entries.require("feasible.list"), text::parse_allocation_list);
    if (list.empty()) invalid("feasible.list", "must name at least one allocation");
    for (const auto& a : list) check_shape("feasible.list", a, p);
    sc.feasible = FeasibleSet::explicit_list(std::move(list));
  } else {
    invalid("feasible.kind", "expected box_grid, fixed_total or list, got '" + kind.value + "'");
  }

  // transforms
  std::optional<TransformSpec> fallback;
  if (const Entry* e = entries.find("transform.*")) {
    fallback = entries.parse("transform.*", *e, text::parse_transform);
    check_transform("transform.*", *fallback, p);
  }
  for (AgentId i = 0; i < p.n_agents; ++i) {
    const std::string key = "transform." + std::to_string(i + 1);
    if (const Entry* e = entries.find(key)) {
      auto t = entries.parse(key, *e, text::parse_transform);
      check_transform(key, t, p);
      sc.transforms.push_back(std::move(t));
    } else if (fallback) {
      sc.transforms.push_back(*fallback);
    } else {
      invalid(key, "required but missing (or declare transform.*)");
    }
  }

  if (const Entry* e = entries.find("swf")) {
    auto combiner = entries.parse("swf", *e, text::parse_combiner);
    if (const auto* ws = std::get_if<WeightedSum>(&combiner); ws && ws->weights.size() != p.n_agents) {
      invalid("swf", std::to_string(ws->weights.size()) + " weights for " + std::to_string(p.n_agents) + " agents");
    }
    std::vector<TransformSpec> values;
    if (const Entry* v = entries.find("swf.value")) {
      auto t = entries.parse("swf.value", *v, text::parse_transform);
      check_transform("swf.value", t, p);
      values = uniform(t, p.n_agents);
    }
    try {
      sc.swf = SwfSpec(std::move(combiner), std::move(values));
    } catch (const Error& err) {
      invalid("swf", err.what());
    }
  } else if (entries.find("swf.value")) {
    invalid("swf.value", "given without swf");
  }

  if (const Entry* e = entries.find("moves")) {
    sc.moves = entries.parse("moves", *e, text::parse_moves);
    for (const auto& m : sc.moves) check_shape("moves", m.from, p);
  }

  if (const Entry* e = entries.find("discover.beneficiary")) {
    const std::size_t id = entries.parse("discover.beneficiary", *e, [](std::string_view v) {
      return positive_integer("discover.beneficiary", v);
    });
    if (id > p.n_agents) invalid("discover.beneficiary", "agent " + std::to_string(id) + " does not exist");
    sc.discover.beneficiary = id - 1;
  }
  if (const Entry* e = entries.find("discover.steps")) {
    sc.discover.steps = entries.parse("discover.steps", *e, [](std::string_view v) {
      return positive_integer("discover.steps", v);
    });
  }
  if (const Entry* e = entries.find("discover.increment")) {
    sc.discover.increment = entries.parse("discover.increment", *e, [](std::string_view v) { return Quantity::parse(v); });
    if (sc.discover.increment->is_zero()) invalid("discover.increment", "must be positive");
  }
  if (const Entry* e = entries.find("discover.initial")) {
    sc.discover.initial = entries.parse("discover.initial", *e, text::parse_allocation);
    check_shape("discover.initial", *sc.discover.initial, p);
  }
  if (const Entry* e = entries.find("discover.lattice_step")) {
    sc.discover.lattice_step =
        entries.parse("discover.lattice_step", *e, [](std::string_view v) { return Quantity::parse(v); });
    if (sc.discover.lattice_step->is_zero()) invalid("discover.lattice_step", "must be positive");
  }

  if (const Entry* e = entries.find("scan.cap")) {
    sc.scan_cap = entries.parse("scan.cap", *e, [](std::string_view v) { return positive_integer("scan.cap", v); });
  }

  if (auto extra = entries.unused(); !extra.empty()) invalid(extra.front(), "unknown key");
  return sc;
}

}  // namespace paretoscope
