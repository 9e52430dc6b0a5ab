#include "paretoscope/pareto.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>

namespace paretoscope {

namespace {

void check_transform_count(std::span<const TransformSpec> transforms, const Allocation& a) {
  if (transforms.size() != a.n_agents()) {
    throw Error(Errc::InvalidArgument, std::to_string(transforms.size()) + " transforms for " +
                                           std::to_string(a.n_agents()) + " agents");
  }
}

InfoProfile profile_at(std::span<const TransformSpec> transforms, const Allocation& a,
                       Endpoint endpoint) {
  try {
    return evaluate_profile(transforms, a);
  } catch (const Error& e) {
    if (e.code() != Errc::ZeroReferencePoint) throw;
    throw ZeroReferenceError(endpoint, e.what());
  }
}

ImprovementVerdict judge(const InfoProfile& from, const InfoProfile& to, Method method) {
  ImprovementVerdict v;
  v.method = method;
  for (AgentId k = 0; k < from.size(); ++k) {
    switch (compare_info(to[k], from[k])) {
      case PartialOrderResult::StrictlyGreater: v.strict_gainers.push_back(k); break;
      case PartialOrderResult::Equal: break;
      case PartialOrderResult::StrictlyLess:
        v.violators.push_back({k, ViolationReason::StrictlyWorse});
        break;
      case PartialOrderResult::Incomparable:
        v.violators.push_back({k, ViolationReason::IncomparableInfo});
        break;
    }
  }
  v.is_improvement = v.violators.empty() && !v.strict_gainers.empty();
  return v;
}

/// Concatenated information vector; improvement between profiles is exactly
/// componentwise dominance of these.
std::vector<Rational> flatten(const InfoProfile& p) {
  std::vector<Rational> out;
  for (const auto& info : p) {
    if (info.is_scalar()) {
      out.push_back(info.scalar());
    } else {
      for (const auto& q : info.vector()) out.push_back(q.value());
    }
  }
  return out;
}

bool dominates(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

std::vector<std::optional<InfoProfile>> profiles_of(std::span<const TransformSpec> transforms,
                                                    const std::vector<Allocation>& states) {
  std::vector<std::optional<InfoProfile>> out;
  out.reserve(states.size());
  for (const auto& s : states) {
    try {
      out.emplace_back(evaluate_profile(transforms, s));
    } catch (const Error& e) {
      if (e.code() != Errc::ZeroReferencePoint) throw;
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

/// Runs body(begin, end, chunk) over contiguous chunks of [0, n); the first
/// exception from any chunk is rethrown after every worker has joined.
template <class Body>
void partitioned(std::size_t n, unsigned workers, Body&& body) {
  workers = std::max(1u, workers);
  const std::size_t chunks = std::min<std::size_t>(workers, std::max<std::size_t>(n, 1));
  if (chunks <= 1) {
    body(std::size_t{0}, n, std::size_t{0});
    return;
  }
  const std::size_t per = (n + chunks - 1) / chunks;
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> pool;
    for (std::size_t c = 0; c < chunks; ++c) {
      const std::size_t begin = std::min(n, c * per);
      const std::size_t end = std::min(n, begin + per);
      pool.emplace_back([&body, &errors, begin, end, c] {
        try {
          body(begin, end, c);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

EfficiencyVerdict efficiency_among(const Allocation& state, const std::vector<Allocation>& candidates,
                                   std::span<const TransformSpec> transforms) {
  check_transform_count(transforms, state);
  profile_at(transforms, state, Endpoint::From);

  EfficiencyVerdict out;
  if (std::find(candidates.begin(), candidates.end(), state) == candidates.end()) {
    out.warnings.push_back("state is not a member of the feasible set");
  }
  for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
    const Move move(state, candidates[idx]);
    try {
      if (check_improvement(move, transforms).is_improvement) {
        out.is_efficient = false;
        out.witness = move;
        out.witness_state = idx;
        return out;
      }
    } catch (const ZeroReferenceError& e) {
      if (e.endpoint() != Endpoint::To) throw;
      ++out.skipped_states;
    }
  }
  return out;
}

}  // namespace

ZeroReferenceError::ZeroReferenceError(Endpoint endpoint, const std::string& detail)
    : Error(Errc::ZeroReferencePoint,
            std::string(endpoint == Endpoint::From ? "at 'from' endpoint: " : "at 'to' endpoint: ") +
                detail),
      endpoint_(endpoint) {}

InfoProfile evaluate_profile(std::span<const TransformSpec> transforms, const Allocation& a) {
  check_transform_count(transforms, a);
  InfoProfile out;
  out.reserve(a.n_agents());
  for (AgentId k = 0; k < a.n_agents(); ++k) out.push_back(evaluate_transform(transforms[k], a, k));
  return out;
}

ImprovementVerdict check_improvement(const Move& move, std::span<const TransformSpec> transforms) {
  const auto from = profile_at(transforms, move.from, Endpoint::From);
  const auto to = profile_at(transforms, move.to, Endpoint::To);
  return judge(from, to, Method::Definitional);
}

ImprovementVerdict check_improvement_neoclassical(const Move& move) {
  InfoProfile from;
  InfoProfile to;
  for (AgentId k = 0; k < move.from.n_agents(); ++k) {
    from.emplace_back(move.from[k]);
    to.emplace_back(move.to[k]);
  }
  return judge(from, to, Method::Neoclassical);
}

ImprovementVerdict check_improvement_ratio_form(const Move& move,
                                                std::span<const TransformSpec> transforms) {
  if (move.from.commodity_dim() != 1) {
    throw Error(Errc::HypothesisViolated, "ratio test needs a single commodity");
  }
  const auto cls = classify_move_agents(move);
  if (!cls.mixed.empty()) {
    throw Error(Errc::HypothesisViolated, "ratio test needs every agent's bundle to move monotonically");
  }
  if (cls.gainers.empty()) {
    throw Error(Errc::HypothesisViolated, "ratio test needs at least one agent whose bundle grows");
  }

  const auto from = profile_at(transforms, move.from, Endpoint::From);
  const auto to = profile_at(transforms, move.to, Endpoint::To);

  auto dx = [&](AgentId n) { return move.to[n][0].value() - move.from[n][0].value(); };

  ImprovementVerdict v;
  v.method = Method::RatioForm;
  for (AgentId k = 0; k < from.size(); ++k) {
    const Rational df = to[k].scalar() - from[k].scalar();
    bool fails = false;
    bool strict = false;
    // The numerator does not depend on i or j; the pairs are still walked
    // one by one so the test reads as stated.
    for (AgentId i : cls.gainers) {
      const Rational ratio = df / dx(i);
      if (ratio < 0) fails = true;
      if (ratio > 0) strict = true;
    }
    for (AgentId j : cls.weak_losers) {
      const Rational d = dx(j);
      if (d == 0) continue;
      const Rational ratio = df / d;
      if (ratio > 0) fails = true;
      if (ratio < 0) strict = true;
    }
    if (fails) {
      v.violators.push_back({k, ViolationReason::StrictlyWorse});
    } else if (strict) {
      v.strict_gainers.push_back(k);
    }
  }
  v.is_improvement = v.violators.empty() && !v.strict_gainers.empty();
  return v;
}

EfficiencyVerdict is_pareto_efficient(const Allocation& state, const FeasibleSet& fs,
                                      std::span<const TransformSpec> transforms) {
  return efficiency_among(state, enumerate_feasible(fs, state.polity()), transforms);
}

Frontier enumerate_frontier(const FeasibleSet& fs, const Polity& polity,
                            std::span<const TransformSpec> transforms, const ScanOptions& opts) {
  const auto states = enumerate_feasible(fs, polity);
  std::vector<std::optional<InfoProfile>> profiles(states.size());
  partitioned(states.size(), opts.workers, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        profiles[i] = evaluate_profile(transforms, states[i]);
      } catch (const Error& e) {
        if (e.code() != Errc::ZeroReferencePoint) throw;
      }
    }
  });

  Frontier out;
  std::vector<std::vector<Rational>> points(states.size());
  std::vector<Rational> key(states.size());
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!profiles[i]) {
      out.skipped_state_ids.push_back(i);
      continue;
    }
    points[i] = flatten(*profiles[i]);
    key[i] = std::accumulate(points[i].begin(), points[i].end(), Rational(0));
    order.push_back(i);
  }
  out.states_examined = order.size();

  // A dominator always has a strictly larger component sum, so after sorting
  // by descending sum only already-accepted maxima need to be consulted.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key[a] > key[b]; });
  std::vector<std::size_t> window;
  for (std::size_t i : order) {
    const bool dominated = std::any_of(window.begin(), window.end(),
                                       [&](std::size_t w) { return dominates(points[w], points[i]); });
    if (!dominated) window.push_back(i);
  }
  std::sort(window.begin(), window.end());

  if (out.states_examined > 0 && window.empty()) {
    throw Error(Errc::InternalInvariant, "non-empty feasible set produced an empty frontier");
  }
  out.state_ids = window;
  for (std::size_t i : window) out.states.push_back(states[i]);
  return out;
}

Frontier enumerate_frontier_naive(const FeasibleSet& fs, const Polity& polity,
                                  std::span<const TransformSpec> transforms) {
  const auto states = enumerate_feasible(fs, polity);
  Frontier out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    EfficiencyVerdict v;
    try {
      v = efficiency_among(states[i], states, transforms);
    } catch (const ZeroReferenceError&) {
      out.skipped_state_ids.push_back(i);
      continue;
    }
    ++out.states_examined;
    if (v.is_efficient) {
      out.state_ids.push_back(i);
      out.states.push_back(states[i]);
    }
  }
  if (out.states_examined > 0 && out.state_ids.empty()) {
    throw Error(Errc::InternalInvariant, "non-empty feasible set produced an empty frontier");
  }
  return out;
}

ScanReport scan_all_moves(const FeasibleSet& fs, const Polity& polity,
                          std::span<const TransformSpec> transforms, const ScanOptions& opts) {
  const auto states = enumerate_feasible(fs, polity);
  const std::size_t n = states.size();
  const std::size_t pairs = n == 0 ? 0 : n * (n - 1);
  if (pairs > opts.cap) throw CapExceeded(pairs, opts.cap);

  const auto profiles = profiles_of(transforms, states);

  struct Partial {
    std::vector<std::pair<std::size_t, std::size_t>> improving;
    std::size_t moves = 0;
  };
  const unsigned workers = std::max(1u, opts.workers);
  std::vector<Partial> partials(workers);
  std::vector<char> efficient(n, 0);

  partitioned(n, workers, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    Partial& part = partials[chunk];
    for (std::size_t s = begin; s < end; ++s) {
      if (!profiles[s]) continue;
      bool any = false;
      for (std::size_t t = 0; t < n; ++t) {
        if (t == s || !profiles[t]) continue;
        ++part.moves;
        if (judge(*profiles[s], *profiles[t], Method::Definitional).is_improvement) {
          part.improving.emplace_back(s, t);
          any = true;
        }
      }
      efficient[s] = any ? 0 : 1;
    }
  });

  ScanReport out;
  out.efficient.assign(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (!profiles[s]) {
      out.skipped_state_ids.push_back(s);
      continue;
    }
    ++out.states_examined;
    out.efficient[s] = efficient[s] != 0;
    if (out.efficient[s]) ++out.efficient_state_count;
  }
  for (const auto& part : partials) {
    out.moves_examined += part.moves;
    for (const auto& [s, t] : part.improving) {
      out.improving_pairs.emplace_back(s, t);
      out.improving_moves.emplace_back(states[s], states[t]);
    }
  }
  out.improvements_found = out.improving_moves.size();
  return out;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Definitional: return "definitional";
    case Method::Neoclassical: return "neoclassical";
    case Method::RatioForm: return "ratio_form";
  }
  return "?";
}

std::string to_string(ViolationReason r) {
  return r == ViolationReason::StrictlyWorse ? "StrictlyWorse" : "IncomparableInfo";
}

}  // namespace paretoscope
