#include "paretoscope/polity.hpp"

#include <algorithm>
#include <functional>

#include "paretoscope/error.hpp"

namespace paretoscope {

Polity::Polity(std::size_t agents, std::size_t commodities)
    : n_agents(agents), commodity_dim(commodities) {
  if (n_agents == 0) throw Error(Errc::InvalidArgument, "polity needs at least one agent");
  if (commodity_dim == 0) throw Error(Errc::InvalidArgument, "polity needs at least one commodity");
}

Bundle::Bundle(std::vector<Quantity> quantities) : quantities_(std::move(quantities)) {
  if (quantities_.empty()) throw Error(Errc::DimensionMismatch, "bundle needs at least one commodity");
}

Bundle::Bundle(std::initializer_list<Rational> quantities)
    : Bundle(std::vector<Quantity>(quantities.begin(), quantities.end())) {}

Bundle Bundle::plus(const Quantity& delta) const {
  std::vector<Quantity> out = quantities_;
  for (auto& q : out) q += delta;
  return Bundle(std::move(out));
}

Allocation::Allocation(std::vector<Bundle> bundles) : bundles_(std::move(bundles)) {
  if (bundles_.empty()) throw Error(Errc::InvalidArgument, "allocation needs at least one agent");
  const std::size_t dim = bundles_.front().dimension();
  for (const auto& b : bundles_) {
    if (b.dimension() != dim) {
      throw Error(Errc::DimensionMismatch, "allocation mixes bundle dimensions " +
                                               std::to_string(dim) + " and " +
                                               std::to_string(b.dimension()));
    }
  }
}

Allocation Allocation::with_bundle(AgentId agent, Bundle bundle) const {
  if (agent >= bundles_.size()) {
    throw Error(Errc::InvalidAgent, "agent index " + std::to_string(agent) + " out of range");
  }
  std::vector<Bundle> out = bundles_;
  out[agent] = std::move(bundle);
  return Allocation(std::move(out));
}

std::vector<Quantity> Allocation::totals() const {
  std::vector<Quantity> out(commodity_dim());
  for (const auto& b : bundles_) {
    for (std::size_t c = 0; c < b.dimension(); ++c) out[c] += b[c];
  }
  return out;
}

Allocation allocation(std::initializer_list<std::initializer_list<Rational>> bundles) {
  std::vector<Bundle> out;
  out.reserve(bundles.size());
  for (const auto& b : bundles) out.emplace_back(b);
  return Allocation(std::move(out));
}

Allocation scalar_allocation(std::initializer_list<Rational> per_agent) {
  std::vector<Bundle> out;
  out.reserve(per_agent.size());
  for (const auto& q : per_agent) out.push_back(Bundle{q});
  return Allocation(std::move(out));
}

Move::Move(Allocation from_state, Allocation to_state)
    : from(std::move(from_state)), to(std::move(to_state)) {
  if (from.n_agents() != to.n_agents() || from.commodity_dim() != to.commodity_dim()) {
    throw Error(Errc::DimensionMismatch, "move endpoints differ in agent count or commodity dimension");
  }
}

PartialOrderResult compare_bundles(const Bundle& a, const Bundle& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(Errc::DimensionMismatch, "cannot compare bundles of dimension " +
                                             std::to_string(a.dimension()) + " and " +
                                             std::to_string(b.dimension()));
  }
  bool some_greater = false;
  bool some_less = false;
  for (std::size_t c = 0; c < a.dimension(); ++c) {
    if (a[c] > b[c]) some_greater = true;
    if (a[c] < b[c]) some_less = true;
  }
  if (some_greater && some_less) return PartialOrderResult::Incomparable;
  if (some_greater) return PartialOrderResult::StrictlyGreater;
  if (some_less) return PartialOrderResult::StrictlyLess;
  return PartialOrderResult::Equal;
}

MoveClassification classify_move_agents(const Move& move) {
  MoveClassification out;
  for (AgentId i = 0; i < move.from.n_agents(); ++i) {
    switch (compare_bundles(move.to[i], move.from[i])) {
      case PartialOrderResult::StrictlyGreater: out.gainers.push_back(i); break;
      case PartialOrderResult::Incomparable: out.mixed.push_back(i); break;
      case PartialOrderResult::Equal:
      case PartialOrderResult::StrictlyLess: out.weak_losers.push_back(i); break;
    }
  }
  return out;
}

FeasibleSet FeasibleSet::box_grid(std::vector<Quantity> shared_levels) {
  return FeasibleSet(BoxGrid{{std::move(shared_levels)}});
}

FeasibleSet FeasibleSet::box_grid(std::vector<std::vector<Quantity>> per_commodity_levels) {
  return FeasibleSet(BoxGrid{std::move(per_commodity_levels)});
}

FeasibleSet FeasibleSet::fixed_total(std::vector<Quantity> totals, Quantity step) {
  return FeasibleSet(FixedTotalLattice{std::move(totals), std::move(step)});
}

FeasibleSet FeasibleSet::fixed_total(Quantity total, Quantity step) {
  return fixed_total(std::vector<Quantity>{std::move(total)}, std::move(step));
}

FeasibleSet FeasibleSet::explicit_list(std::vector<Allocation> allocations) {
  return FeasibleSet(ExplicitList{std::move(allocations)});
}

namespace {

std::string join(const std::vector<Quantity>& qs) {
  std::string out;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i) out += ",";
    out += to_string(qs[i]);
  }
  return out;
}

template <class T>
const T& per_commodity(const std::vector<T>& values, std::size_t c) {
  return values.size() == 1 ? values.front() : values[c];
}

std::vector<Allocation> enumerate_box(const BoxGrid& grid, const Polity& p) {
  if (grid.levels.size() != 1 && grid.levels.size() != p.commodity_dim) {
    throw Error(Errc::InfeasibleConfig, "box grid declares " + std::to_string(grid.levels.size()) +
                                            " level lists for " + std::to_string(p.commodity_dim) +
                                            " commodities");
  }
  std::vector<std::vector<Quantity>> levels;
  for (std::size_t c = 0; c < p.commodity_dim; ++c) {
    auto l = per_commodity(grid.levels, c);
    if (l.empty()) throw Error(Errc::InfeasibleConfig, "box grid has an empty level list");
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    levels.push_back(std::move(l));
  }

  const std::size_t positions = p.n_agents * p.commodity_dim;
  std::vector<std::size_t> index(positions, 0);
  std::vector<Allocation> out;
  for (;;) {
    std::vector<Bundle> bundles;
    bundles.reserve(p.n_agents);
    for (std::size_t a = 0; a < p.n_agents; ++a) {
      std::vector<Quantity> qs;
      for (std::size_t c = 0; c < p.commodity_dim; ++c) {
        qs.push_back(levels[c][index[a * p.commodity_dim + c]]);
      }
      bundles.emplace_back(std::move(qs));
    }
    out.emplace_back(std::move(bundles));

    // odometer, last position fastest
    std::size_t pos = positions;
    while (pos > 0) {
      --pos;
      const std::size_t c = pos % p.commodity_dim;
      if (++index[pos] < levels[c].size()) break;
      index[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

std::vector<Allocation> enumerate_lattice(const FixedTotalLattice& lat, const Polity& p) {
  if (lat.totals.size() != 1 && lat.totals.size() != p.commodity_dim) {
    throw Error(Errc::InfeasibleConfig, "fixed-total lattice declares " +
                                            std::to_string(lat.totals.size()) + " totals for " +
                                            std::to_string(p.commodity_dim) + " commodities");
  }
  if (lat.step.is_zero()) throw Error(Errc::InfeasibleConfig, "lattice step must be positive");

  std::vector<long long> units(p.commodity_dim);
  for (std::size_t c = 0; c < p.commodity_dim; ++c) {
    const Rational ratio = per_commodity(lat.totals, c).value() / lat.step.value();
    if (boost::multiprecision::denominator(ratio) != 1) {
      throw Error(Errc::InfeasibleConfig, "lattice step " + to_string(lat.step) +
                                              " does not divide total " +
                                              to_string(per_commodity(lat.totals, c)));
    }
    units[c] = boost::multiprecision::numerator(ratio).convert_to<long long>();
  }

  const std::size_t n = p.n_agents;
  const std::size_t d = p.commodity_dim;
  std::vector<long long> flat(n * d, 0);
  std::vector<long long> remaining = units;
  std::vector<Allocation> out;

  auto emit = [&] {
    std::vector<Bundle> bundles;
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<Quantity> qs;
      for (std::size_t c = 0; c < d; ++c) {
        qs.emplace_back(Rational(flat[a * d + c]) * lat.step.value());
      }
      bundles.emplace_back(std::move(qs));
    }
    out.emplace_back(std::move(bundles));
  };

  // The last agent takes the remainder, so ascending choices over the
  // earlier positions give lexicographic order.
  std::function<void(std::size_t)> place = [&](std::size_t pos) {
    if (pos == (n - 1) * d) {
      for (std::size_t c = 0; c < d; ++c) flat[pos + c] = remaining[c];
      emit();
      return;
    }
    const std::size_t c = pos % d;
    const long long budget = remaining[c];
    for (long long u = 0; u <= budget; ++u) {
      flat[pos] = u;
      remaining[c] = budget - u;
      place(pos + 1);
    }
    remaining[c] = budget;
  };
  place(0);
  return out;
}

}  // namespace

std::string FeasibleSet::describe() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, BoxGrid>) {
          std::string out = "box_grid(levels=";
          for (std::size_t i = 0; i < k.levels.size(); ++i) {
            if (i) out += ";";
            out += "{" + join(k.levels[i]) + "}";
          }
          return out + ")";
        } else if constexpr (std::is_same_v<K, FixedTotalLattice>) {
          return "fixed_total(total=" + join(k.totals) + ", step=" + to_string(k.step) + ")";
        } else {
          return "list(" + std::to_string(k.allocations.size()) + " allocations)";
        }
      },
      kind_);
}

std::vector<Allocation> enumerate_feasible(const FeasibleSet& fs, const Polity& polity) {
  return std::visit(
      [&](const auto& k) -> std::vector<Allocation> {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, BoxGrid>) {
          return enumerate_box(k, polity);
        } else if constexpr (std::is_same_v<K, FixedTotalLattice>) {
          return enumerate_lattice(k, polity);
        } else {
          for (const auto& a : k.allocations) {
            if (a.polity() != polity) {
              throw Error(Errc::DimensionMismatch,
                          "explicit feasible list contains an allocation of the wrong shape");
            }
          }
          return k.allocations;
        }
      },
      fs.kind());
}

std::string to_string(PartialOrderResult r) {
  switch (r) {
    case PartialOrderResult::Equal: return "Equal";
    case PartialOrderResult::StrictlyGreater: return "StrictlyGreater";
    case PartialOrderResult::StrictlyLess: return "StrictlyLess";
    case PartialOrderResult::Incomparable: return "Incomparable";
  }
  return "?";
}

}  // namespace paretoscope
