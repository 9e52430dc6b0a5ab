#pragma once

#include <vector>

#include "paretoscope/pareto.hpp"

namespace paretoscope {

/// A run in which every newly discovered unit of supply goes to one agent.
struct DiscoveryRun {
  Allocation initial;
  AgentId beneficiary = 0;
  std::size_t steps = 0;
  Quantity increment;
  Quantity lattice_step;
  /// steps + 1 states, starting at `initial`.
  std::vector<Allocation> trajectory;
  /// Neoclassical verdict for trajectory[t] -> trajectory[t+1].
  std::vector<ImprovementVerdict> step_verdicts;
  /// Own-bundle efficiency of trajectory[t] among redistributions of its totals.
  std::vector<EfficiencyVerdict> efficiency_verdicts;
  /// Beneficiary's aggregate minus the largest aggregate among the others.
  std::vector<Rational> gap_series;
};

/// Raises InfeasibleLattice if lattice_step does not divide a per-commodity
/// total somewhere along the trajectory.
DiscoveryRun simulate_discovery(const Allocation& initial, AgentId beneficiary, std::size_t steps,
                                const Quantity& increment, const Quantity& lattice_step);

/// The redistribution-only feasible set around `a`.
FeasibleSet redistribution_lattice(const Allocation& a, const Quantity& step);

}  // namespace paretoscope
