#include "paretoscope/welfare.hpp"

#include <algorithm>

#include "paretoscope/error.hpp"

namespace paretoscope {

SwfSpec::SwfSpec(Combiner c, std::vector<TransformSpec> values)
    : combiner(std::move(c)), agent_value(std::move(values)) {
  if (const auto* ws = std::get_if<WeightedSum>(&combiner)) {
    bool any_positive = false;
    for (const auto& w : ws->weights) {
      if (w < 0) throw Error(Errc::ValidationError, "welfare weights must be non-negative");
      if (w > 0) any_positive = true;
    }
    if (!any_positive) throw Error(Errc::ValidationError, "weights all zero");
  }
}

Rational welfare_value(const SwfSpec& swf, const Allocation& a) {
  if (!swf.agent_value.empty() && swf.agent_value.size() != a.n_agents()) {
    throw Error(Errc::InvalidArgument, "welfare functional values " +
                                           std::to_string(swf.agent_value.size()) + " agents, allocation has " +
                                           std::to_string(a.n_agents()));
  }
  std::vector<Rational> values;
  values.reserve(a.n_agents());
  for (AgentId i = 0; i < a.n_agents(); ++i) {
    const TransformSpec t = swf.agent_value.empty() ? TransformSpec::weighted_own() : swf.agent_value[i];
    const auto info = evaluate_transform(t, a, i);
    if (!info.is_scalar()) {
      throw Error(Errc::VectorValuedAgentInfo,
                  "agent " + std::to_string(i + 1) + " is valued by a vector, welfare needs a scalar");
    }
    values.push_back(info.scalar());
  }

  return std::visit(
      [&](const auto& c) -> Rational {
        using C = std::decay_t<decltype(c)>;
        Rational out = 0;
        if constexpr (std::is_same_v<C, Sum>) {
          for (const auto& v : values) out += v;
        } else if constexpr (std::is_same_v<C, WeightedSum>) {
          if (c.weights.size() != values.size()) {
            throw Error(Errc::InvalidArgument, std::to_string(c.weights.size()) + " welfare weights for " +
                                                   std::to_string(values.size()) + " agents");
          }
          for (std::size_t i = 0; i < values.size(); ++i) out += c.weights[i] * values[i];
        } else {
          out = *std::min_element(values.begin(), values.end());
        }
        return out;
      },
      swf.combiner);
}

Ranking welfare_rank(const SwfSpec& swf, std::span<const Allocation> states) {
  if (states.empty()) throw Error(Errc::InvalidArgument, "cannot rank an empty list of states");
  Ranking r;
  for (std::size_t i = 0; i < states.size(); ++i) {
    r.entries.push_back({i, states[i], welfare_value(swf, states[i]), false});
  }
  std::stable_sort(r.entries.begin(), r.entries.end(),
                   [](const auto& a, const auto& b) { return a.value > b.value; });
  for (std::size_t i = 0; i + 1 < r.entries.size(); ++i) {
    if (r.entries[i].value == r.entries[i + 1].value) {
      r.entries[i].tied = r.entries[i + 1].tied = true;
      r.has_ties = true;
    }
  }
  return r;
}

std::string to_string(const Combiner& c) {
  return std::visit(
      [](const auto& k) -> std::string {
        using C = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<C, Sum>) {
          return "sum";
        } else if constexpr (std::is_same_v<C, Maximin>) {
          return "maximin";
        } else {
          std::string out = "weighted_sum(";
          for (std::size_t i = 0; i < k.weights.size(); ++i) {
            if (i) out += ",";
            out += to_string(k.weights[i]);
          }
          return out + ")";
        }
      },
      c);
}

}  // namespace paretoscope
