#include "paretoscope/discovery.hpp"

#include <algorithm>

namespace paretoscope {

namespace {

Rational aggregate(const Bundle& b) {
  Rational out = 0;
  for (const auto& q : b) out += q.value();
  return out;
}

Rational gap(const Allocation& a, AgentId beneficiary) {
  Rational best_other;
  bool first = true;
  for (AgentId i = 0; i < a.n_agents(); ++i) {
    if (i == beneficiary) continue;
    const Rational v = aggregate(a[i]);
    if (first || v > best_other) best_other = v;
    first = false;
  }
  return aggregate(a[beneficiary]) - best_other;
}

}  // namespace

FeasibleSet redistribution_lattice(const Allocation& a, const Quantity& step) {
  return FeasibleSet::fixed_total(a.totals(), step);
}

DiscoveryRun simulate_discovery(const Allocation& initial, AgentId beneficiary, std::size_t steps,
                                const Quantity& increment, const Quantity& lattice_step) {
  if (beneficiary >= initial.n_agents()) {
    throw Error(Errc::InvalidAgent, "beneficiary " + std::to_string(beneficiary + 1) +
                                        " is not in a polity of " + std::to_string(initial.n_agents()));
  }
  if (initial.n_agents() < 2) {
    throw Error(Errc::InvalidArgument, "a discovery run needs at least two agents");
  }
  if (increment.is_zero()) throw Error(Errc::InvalidArgument, "increment must be positive");
  if (lattice_step.is_zero()) throw Error(Errc::InvalidArgument, "lattice step must be positive");
  if (steps == 0) throw Error(Errc::InvalidArgument, "a discovery run needs at least one step");

  DiscoveryRun run;
  run.initial = initial;
  run.beneficiary = beneficiary;
  run.steps = steps;
  run.increment = increment;
  run.lattice_step = lattice_step;

  run.trajectory.push_back(initial);
  for (std::size_t t = 0; t < steps; ++t) {
    const Allocation& cur = run.trajectory.back();
    run.trajectory.push_back(cur.with_bundle(beneficiary, cur[beneficiary].plus(increment)));
  }

  const auto own = uniform(TransformSpec::own(), initial.n_agents());
  for (std::size_t t = 0; t < run.trajectory.size(); ++t) {
    const Allocation& s = run.trajectory[t];
    if (t + 1 < run.trajectory.size()) {
      run.step_verdicts.push_back(check_improvement_neoclassical(Move(s, run.trajectory[t + 1])));
    }
    try {
      run.efficiency_verdicts.push_back(is_pareto_efficient(s, redistribution_lattice(s, lattice_step), own));
    } catch (const Error& e) {
      if (e.code() != Errc::InfeasibleConfig) throw;
      throw Error(Errc::InfeasibleLattice, "step " + std::to_string(t) + ": " + e.what());
    }
    run.gap_series.push_back(gap(s, beneficiary));
  }
  return run;
}

}  // namespace paretoscope
