#pragma once

#include <span>
#include <variant>
#include <vector>

#include "paretoscope/polity.hpp"
#include "paretoscope/rational.hpp"

namespace paretoscope {

// Transform kinds. An empty weight list means unit weight on every commodity.

struct OwnBundle {
  friend bool operator==(const OwnBundle&, const OwnBundle&) = default;
};

/// Weighted sum of the agent's own bundle.
struct WeightedOwn {
  std::vector<Rational> weights;
  friend bool operator==(const WeightedOwn&, const WeightedOwn&) = default;
};

/// Own aggregate over the mean aggregate of the whole population.
struct RelativeToMean {
  std::vector<Rational> weights;
  friend bool operator==(const RelativeToMean&, const RelativeToMean&) = default;
};

/// Own aggregate over the mean aggregate of a declared reference group.
struct RelativeToNeighborhood {
  std::vector<AgentId> neighbors;
  std::vector<Rational> weights;
  friend bool operator==(const RelativeToNeighborhood&, const RelativeToNeighborhood&) = default;
};

/// Declarative description of how one agent reads an allocation.
class TransformSpec {
 public:
  using Kind = std::variant<OwnBundle, WeightedOwn, RelativeToMean, RelativeToNeighborhood>;

  TransformSpec() = default;
  explicit TransformSpec(Kind kind);

  static TransformSpec own() { return TransformSpec(OwnBundle{}); }
  static TransformSpec weighted_own(std::vector<Rational> weights = {}) {
    return TransformSpec(WeightedOwn{std::move(weights)});
  }
  static TransformSpec relative_mean(std::vector<Rational> weights = {}) {
    return TransformSpec(RelativeToMean{std::move(weights)});
  }
  static TransformSpec relative_nbhd(std::vector<AgentId> neighbors,
                                     std::vector<Rational> weights = {}) {
    return TransformSpec(RelativeToNeighborhood{std::move(neighbors), std::move(weights)});
  }

  const Kind& kind() const noexcept { return kind_; }

  friend bool operator==(const TransformSpec&, const TransformSpec&) = default;

 private:
  Kind kind_{OwnBundle{}};
};

/// The same transform for every agent.
std::vector<TransformSpec> uniform(const TransformSpec& t, std::size_t n_agents);

/// What an agent's preferences range over: a number, or a whole bundle when
/// the agent reads its own multi-commodity bundle.
class PreferenceInfo {
 public:
  explicit PreferenceInfo(Rational scalar) : value_(std::move(scalar)) {}
  explicit PreferenceInfo(Bundle vector) : value_(std::move(vector)) {}

  bool is_scalar() const noexcept { return std::holds_alternative<Rational>(value_); }
  const Rational& scalar() const;
  const Bundle& vector() const;

  friend bool operator==(const PreferenceInfo&, const PreferenceInfo&) = default;

 private:
  std::variant<Rational, Bundle> value_;
};

/// Orders two pieces of preference-information: numerically for scalars,
/// componentwise for vectors. Mixed kinds raise DimensionMismatch.
PartialOrderResult compare_info(const PreferenceInfo& a, const PreferenceInfo& b);

/// Raises ZeroReferencePoint when a relative transform's reference mean is 0
/// and InvalidAgent for out-of-range ids.
PreferenceInfo evaluate_transform(const TransformSpec& t, const Allocation& a, AgentId agent);

enum class Sign { Negative, Zero, Positive, Incomparable };

struct SignReport {
  Sign sign;
  PreferenceInfo before;
  PreferenceInfo after;
};

/// Sign of f_agent(a with agent's bundle + delta) - f_agent(a).
SignReport verify_own_monotonicity(const TransformSpec& t, const Allocation& a, AgentId agent,
                                   const Quantity& delta);

/// Sign of the change in the observer's information when the gainer's
/// bundle grows by delta in every commodity.
SignReport cross_effect_sign(const TransformSpec& t, const Allocation& a, AgentId observer,
                             AgentId gainer, const Quantity& delta);

std::string to_string(Sign s);

}  // namespace paretoscope
