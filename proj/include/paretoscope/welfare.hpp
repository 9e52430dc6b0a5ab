#pragma once

#include <span>
#include <variant>
#include <vector>

#include "paretoscope/polity.hpp"
#include "paretoscope/transforms.hpp"

namespace paretoscope {

struct Sum {
  friend bool operator==(const Sum&, const Sum&) = default;
};
struct WeightedSum {
  std::vector<Rational> weights;
  friend bool operator==(const WeightedSum&, const WeightedSum&) = default;
};
struct Maximin {
  friend bool operator==(const Maximin&, const Maximin&) = default;
};

using Combiner = std::variant<Sum, WeightedSum, Maximin>;

/// A social welfare functional: per-agent values combined into one number.
/// Per-agent values come from transforms; an empty list means every agent
/// is valued by the unit-weighted sum of its own bundle.
struct SwfSpec {
  SwfSpec() = default;
  explicit SwfSpec(Combiner c, std::vector<TransformSpec> values = {});

  Combiner combiner{Sum{}};
  std::vector<TransformSpec> agent_value;
};

Rational welfare_value(const SwfSpec& swf, const Allocation& a);

struct Ranking {
  struct Entry {
    std::size_t input_index;
    Allocation state;
    Rational value;
    bool tied;
  };
  /// Descending by value; equal values keep input order and are flagged.
  std::vector<Entry> entries;
  bool has_ties = false;
};

Ranking welfare_rank(const SwfSpec& swf, std::span<const Allocation> states);

std::string to_string(const Combiner& c);

}  // namespace paretoscope
