#include "paretoscope/transforms.hpp"

#include "paretoscope/error.hpp"

namespace paretoscope {

namespace {

void check_weights(const std::vector<Rational>& weights) {
  for (const auto& w : weights) {
    if (w <= 0) throw Error(Errc::InvalidTransform, "transform weights must be strictly positive");
  }
}

Rational aggregate(const Bundle& b, const std::vector<Rational>& weights) {
  if (!weights.empty() && weights.size() != b.dimension()) {
    throw Error(Errc::DimensionMismatch, "transform has " + std::to_string(weights.size()) +
                                             " weights for " + std::to_string(b.dimension()) +
                                             " commodities");
  }
  Rational sum = 0;
  for (std::size_t c = 0; c < b.dimension(); ++c) {
    sum += weights.empty() ? b[c].value() : weights[c] * b[c].value();
  }
  return sum;
}

void check_agent(const Allocation& a, AgentId agent) {
  if (agent >= a.n_agents()) {
    throw Error(Errc::InvalidAgent, "agent " + std::to_string(agent + 1) + " is not in a polity of " +
                                        std::to_string(a.n_agents()));
  }
}

Rational relative(const Allocation& a, AgentId agent, std::span<const AgentId> group,
                  const std::vector<Rational>& weights) {
  Rational sum = 0;
  for (AgentId m : group) {
    check_agent(a, m);
    sum += aggregate(a[m], weights);
  }
  const Rational mean = sum / Rational(static_cast<long long>(group.size()));
  if (mean == 0) {
    throw Error(Errc::ZeroReferencePoint,
                "reference point for agent " + std::to_string(agent + 1) + " is zero");
  }
  return aggregate(a[agent], weights) / mean;
}

Sign sign_of_change(const PreferenceInfo& before, const PreferenceInfo& after) {
  switch (compare_info(after, before)) {
    case PartialOrderResult::StrictlyGreater: return Sign::Positive;
    case PartialOrderResult::StrictlyLess: return Sign::Negative;
    case PartialOrderResult::Equal: return Sign::Zero;
    case PartialOrderResult::Incomparable: return Sign::Incomparable;
  }
  return Sign::Incomparable;
}

}  // namespace

TransformSpec::TransformSpec(Kind kind) : kind_(std::move(kind)) {
  std::visit(
      [](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, RelativeToNeighborhood>) {
          if (k.neighbors.empty()) {
            throw Error(Errc::InvalidTransform, "neighbourhood must name at least one agent");
          }
          check_weights(k.weights);
        } else if constexpr (!std::is_same_v<K, OwnBundle>) {
          check_weights(k.weights);
        }
      },
      kind_);
}

std::vector<TransformSpec> uniform(const TransformSpec& t, std::size_t n_agents) {
  return std::vector<TransformSpec>(n_agents, t);
}

const Rational& PreferenceInfo::scalar() const {
  if (!is_scalar()) throw Error(Errc::VectorValuedAgentInfo, "preference-information is a vector");
  return std::get<Rational>(value_);
}

const Bundle& PreferenceInfo::vector() const {
  if (is_scalar()) throw Error(Errc::InvalidArgument, "preference-information is a scalar");
  return std::get<Bundle>(value_);
}

PartialOrderResult compare_info(const PreferenceInfo& a, const PreferenceInfo& b) {
  if (a.is_scalar() != b.is_scalar()) {
    throw Error(Errc::DimensionMismatch, "cannot compare scalar and vector preference-information");
  }
  if (!a.is_scalar()) return compare_bundles(a.vector(), b.vector());
  const int c = a.scalar().compare(b.scalar());
  if (c > 0) return PartialOrderResult::StrictlyGreater;
  if (c < 0) return PartialOrderResult::StrictlyLess;
  return PartialOrderResult::Equal;
}

PreferenceInfo evaluate_transform(const TransformSpec& t, const Allocation& a, AgentId agent) {
  check_agent(a, agent);
  return std::visit(
      [&](const auto& k) -> PreferenceInfo {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, OwnBundle>) {
          if (a.commodity_dim() == 1) return PreferenceInfo(a[agent][0].value());
          return PreferenceInfo(a[agent]);
        } else if constexpr (std::is_same_v<K, WeightedOwn>) {
          return PreferenceInfo(aggregate(a[agent], k.weights));
        } else if constexpr (std::is_same_v<K, RelativeToMean>) {
          std::vector<AgentId> everyone(a.n_agents());
          for (AgentId i = 0; i < everyone.size(); ++i) everyone[i] = i;
          return PreferenceInfo(relative(a, agent, everyone, k.weights));
        } else {
          return PreferenceInfo(relative(a, agent, k.neighbors, k.weights));
        }
      },
      t.kind());
}

SignReport verify_own_monotonicity(const TransformSpec& t, const Allocation& a, AgentId agent,
                                   const Quantity& delta) {
  if (delta.is_zero()) throw Error(Errc::InvalidArgument, "perturbation must be positive");
  check_agent(a, agent);
  auto before = evaluate_transform(t, a, agent);
  auto after = evaluate_transform(t, a.with_bundle(agent, a[agent].plus(delta)), agent);
  const Sign s = sign_of_change(before, after);
  return {s, std::move(before), std::move(after)};
}

SignReport cross_effect_sign(const TransformSpec& t, const Allocation& a, AgentId observer,
                             AgentId gainer, const Quantity& delta) {
  if (delta.is_zero()) throw Error(Errc::InvalidArgument, "perturbation must be positive");
  if (observer == gainer) throw Error(Errc::InvalidArgument, "observer and gainer must differ");
  check_agent(a, observer);
  check_agent(a, gainer);
  auto before = evaluate_transform(t, a, observer);
  auto after = evaluate_transform(t, a.with_bundle(gainer, a[gainer].plus(delta)), observer);
  const Sign s = sign_of_change(before, after);
  return {s, std::move(before), std::move(after)};
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "Negative";
    case Sign::Zero: return "Zero";
    case Sign::Positive: return "Positive";
    case Sign::Incomparable: return "Incomparable";
  }
  return "?";
}

}  // namespace paretoscope
