#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "paretoscope/error.hpp"
#include "paretoscope/polity.hpp"
#include "paretoscope/transforms.hpp"

namespace paretoscope {

enum class Method { Definitional, Neoclassical, RatioForm };
enum class ViolationReason { StrictlyWorse, IncomparableInfo };

struct Violation {
  AgentId agent;
  ViolationReason reason;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ImprovementVerdict {
  bool is_improvement = false;
  std::vector<AgentId> strict_gainers;
  /// Every agent failing the weak (at-least-as-preferred) condition.
  std::vector<Violation> violators;
  Method method = Method::Definitional;
};

enum class Endpoint { From, To };

/// ZeroReferencePoint raised while evaluating one end of a move.
class ZeroReferenceError : public Error {
 public:
  ZeroReferenceError(Endpoint endpoint, const std::string& detail);
  Endpoint endpoint() const noexcept { return endpoint_; }

 private:
  Endpoint endpoint_;
};

using InfoProfile = std::vector<PreferenceInfo>;

/// Every agent's preference-information at `a`.
InfoProfile evaluate_profile(std::span<const TransformSpec> transforms, const Allocation& a);

/// Pareto improvement over arbitrary per-agent transforms: everyone weakly
/// better off and somebody strictly.
ImprovementVerdict check_improvement(const Move& move, std::span<const TransformSpec> transforms);

/// Own bundles under the componentwise order.
ImprovementVerdict check_improvement_neoclassical(const Move& move);

/// The ratio test: for a single-commodity move with at least one gainer,
/// (f_k' - f_k)/(x_i' - x_i) >= 0 over gainers i, <= 0 over weak losers j
/// whose bundle changed, with one strict sign somewhere. Zero denominators
/// are vacuous. Raises HypothesisViolated outside that setting.
ImprovementVerdict check_improvement_ratio_form(const Move& move,
                                                std::span<const TransformSpec> transforms);

struct EfficiencyVerdict {
  bool is_efficient = true;
  std::optional<Move> witness;
  /// Enumeration index of the witness's target state.
  std::optional<std::size_t> witness_state;
  /// Candidates whose preference-information was undefined.
  std::size_t skipped_states = 0;
  std::vector<std::string> warnings;
};

/// Efficient iff no member of `fs` is reached from `state` by an
/// improvement. The witness is the first improving target in enumeration
/// order. Raises ZeroReferenceError if `state` itself is undefined.
EfficiencyVerdict is_pareto_efficient(const Allocation& state, const FeasibleSet& fs,
                                      std::span<const TransformSpec> transforms);

struct ScanOptions {
  std::size_t cap = 1'000'000;
  unsigned workers = 1;
};

struct Frontier {
  std::vector<std::size_t> state_ids;
  std::vector<Allocation> states;
  std::size_t states_examined = 0;
  std::vector<std::size_t> skipped_state_ids;
};

/// Sort-filter pass over cached preference profiles.
Frontier enumerate_frontier(const FeasibleSet& fs, const Polity& polity,
                            std::span<const TransformSpec> transforms, const ScanOptions& opts = {});

/// Quadratic reference: is_pareto_efficient on every state.
Frontier enumerate_frontier_naive(const FeasibleSet& fs, const Polity& polity,
                                  std::span<const TransformSpec> transforms);

struct ScanReport {
  std::size_t states_examined = 0;
  std::size_t moves_examined = 0;
  std::size_t improvements_found = 0;
  std::vector<Move> improving_moves;
  /// Enumeration indices (from, to) parallel to improving_moves.
  std::vector<std::pair<std::size_t, std::size_t>> improving_pairs;
  std::size_t efficient_state_count = 0;
  std::vector<bool> efficient;
  std::vector<std::size_t> skipped_state_ids;
};

/// Every ordered pair of distinct, well-defined states. States whose
/// preference-information is undefined are left out and listed.
ScanReport scan_all_moves(const FeasibleSet& fs, const Polity& polity,
                          std::span<const TransformSpec> transforms, const ScanOptions& opts = {});

std::string to_string(Method m);
std::string to_string(ViolationReason r);

}  // namespace paretoscope
