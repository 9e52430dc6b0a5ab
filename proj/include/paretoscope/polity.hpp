#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

#include "paretoscope/rational.hpp"

namespace paretoscope {

/// Agents are addressed by 0-based index in the library. Scenario files and
/// reports number them from 1.
using AgentId = std::size_t;

struct Polity {
  Polity(std::size_t agents, std::size_t commodities);

  std::size_t n_agents;
  std::size_t commodity_dim;

  friend bool operator==(const Polity&, const Polity&) = default;
};

/// One agent's commodity vector.
class Bundle {
 public:
  Bundle() = default;
  explicit Bundle(std::vector<Quantity> quantities);
  Bundle(std::initializer_list<Rational> quantities);

  std::size_t dimension() const noexcept { return quantities_.size(); }
  const Quantity& operator[](std::size_t c) const { return quantities_[c]; }
  const std::vector<Quantity>& quantities() const noexcept { return quantities_; }
  auto begin() const noexcept { return quantities_.begin(); }
  auto end() const noexcept { return quantities_.end(); }

  /// Every component raised by `delta`.
  Bundle plus(const Quantity& delta) const;

  friend bool operator==(const Bundle&, const Bundle&) = default;

 private:
  std::vector<Quantity> quantities_;
};

/// One bundle per agent, all of equal dimension.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::vector<Bundle> bundles);

  std::size_t n_agents() const noexcept { return bundles_.size(); }
  std::size_t commodity_dim() const noexcept {
    return bundles_.empty() ? 0 : bundles_.front().dimension();
  }
  Polity polity() const { return {n_agents(), commodity_dim()}; }

  const Bundle& operator[](AgentId agent) const { return bundles_[agent]; }
  const std::vector<Bundle>& bundles() const noexcept { return bundles_; }

  /// Copy with `agent`'s bundle replaced.
  Allocation with_bundle(AgentId agent, Bundle bundle) const;

  /// Per-commodity totals across all agents.
  std::vector<Quantity> totals() const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<Bundle> bundles_;
};

/// Shorthand for tests and examples: `allocation({{1, 2}, {0, 3}})`.
Allocation allocation(std::initializer_list<std::initializer_list<Rational>> bundles);
/// Single-commodity shorthand: `scalar_allocation({1, 1})`.
Allocation scalar_allocation(std::initializer_list<Rational> per_agent);

struct Move {
  Move(Allocation from_state, Allocation to_state);

  Allocation from;
  Allocation to;

  friend bool operator==(const Move&, const Move&) = default;
};

enum class PartialOrderResult { Equal, StrictlyGreater, StrictlyLess, Incomparable };

/// Componentwise order; "strictly greater" means >= everywhere with at
/// least one strict component.
PartialOrderResult compare_bundles(const Bundle& a, const Bundle& b);

struct MoveClassification {
  std::vector<AgentId> gainers;
  std::vector<AgentId> weak_losers;
  std::vector<AgentId> mixed;
};

MoveClassification classify_move_agents(const Move& move);

struct BoxGrid {
  /// One level list shared by every commodity, or one list per commodity.
  std::vector<std::vector<Quantity>> levels;
};

struct FixedTotalLattice {
  /// One total shared by every commodity, or one per commodity.
  std::vector<Quantity> totals;
  Quantity step;
};

struct ExplicitList {
  std::vector<Allocation> allocations;
};

class FeasibleSet {
 public:
  using Kind = std::variant<BoxGrid, FixedTotalLattice, ExplicitList>;

  explicit FeasibleSet(Kind kind) : kind_(std::move(kind)) {}

  static FeasibleSet box_grid(std::vector<Quantity> shared_levels);
  static FeasibleSet box_grid(std::vector<std::vector<Quantity>> per_commodity_levels);
  static FeasibleSet fixed_total(std::vector<Quantity> totals, Quantity step);
  static FeasibleSet fixed_total(Quantity total, Quantity step);
  static FeasibleSet explicit_list(std::vector<Allocation> allocations);

  const Kind& kind() const noexcept { return kind_; }

  /// Human-readable one-liner used in report headers.
  std::string describe() const;

 private:
  Kind kind_;
};

/// Every member of `fs`, lexicographic over the flattened (agent, commodity)
/// vector. Explicit lists keep their declared order.
std::vector<Allocation> enumerate_feasible(const FeasibleSet& fs, const Polity& polity);

std::string to_string(PartialOrderResult r);

}  // namespace paretoscope
