#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "paretoscope/polity.hpp"
#include "paretoscope/transforms.hpp"

namespace testing_support {

inline paretoscope::Allocation to_allocation(const oracle::State& s) {
  std::vector<paretoscope::Bundle> bundles;
  for (long long x : s) bundles.push_back(paretoscope::Bundle{paretoscope::Rational(x)});
  return paretoscope::Allocation(std::move(bundles));
}

inline std::vector<paretoscope::Quantity> levels(std::initializer_list<int> ls) {
  return {ls.begin(), ls.end()};
}

struct Family {
  std::string name;
  std::vector<paretoscope::TransformSpec> transforms;
  oracle::Kind oracle_kind;
  bool has_oracle;
};

/// The built-in transform kinds configured for n single-commodity agents.
inline std::vector<Family> builtin_families(std::size_t n) {
  using paretoscope::TransformSpec;
  std::vector<TransformSpec> nbhd;
  for (std::size_t k = 0; k < n; ++k) nbhd.push_back(TransformSpec::relative_nbhd({(k + 1) % n}));
  return {
      {"own", paretoscope::uniform(TransformSpec::own(), n), oracle::Kind::Own, true},
      {"weighted_own", paretoscope::uniform(TransformSpec::weighted_own({2}), n), oracle::Kind::Own, true},
      {"relative_mean", paretoscope::uniform(TransformSpec::relative_mean(), n), oracle::Kind::RelativeMean, true},
      {"relative_nbhd", nbhd, oracle::Kind::NextNeighbour, true},
  };
}

}  // namespace testing_support
