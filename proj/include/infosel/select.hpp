#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "infosel/entropy.hpp"
#include "infosel/model.hpp"

namespace infosel {

/// 1 - 1/e.
inline constexpr double kGreedyFactor = 0.63212055882855767;

/// Gains within this distance are ties; ties go to the lowest variable id.
inline constexpr double kTieTolerance = 1e-9;

enum class EvaluationMode { Exact, Sampled };

const char* to_string(EvaluationMode mode);

/// Certificate: value >= factor * OPT - additive_slack with probability at
/// least `confidence`.
struct Guarantee {
  double factor = 0.0;
  double additive_slack = 0.0;
  double confidence = 1.0;
};

struct SelectionResult {
  /// Selected ids in pick order.
  std::vector<VarId> chosen;
  /// Marginal gain recorded at each pick, in bits.
  std::vector<double> gains;
  /// Objective value of `chosen`, in bits.
  double value = 0.0;
  /// Conditional-entropy evaluations performed by this run.
  std::uint64_t evaluations = 0;
  std::int64_t cost = 0;
  std::optional<Guarantee> guarantee;
};

/// Computes the objective and its marginal gains, exactly or by sampling,
/// and counts conditional-entropy evaluations.
///
/// Marginal gains follow the information-gain greedy rule
///
///   gain(A, X) = H(X | A) - H(X | U)   for X an observable,
///   gain(A, X) = H(X | A)              otherwise,
///
/// and H(X | A) alone for the joint-entropy objective. Conditional entropies
/// are memoized per (X, conditioning set); only cache misses count as
/// evaluations. In sampled mode every (X, conditioning set) pair draws from
/// its own RNG stream derived from the configured seed, so results do not
/// depend on evaluation order or thread count.
///
/// Thread-safe; copies share the cache and counter.
class ObjectiveEvaluator {
 public:
  static ObjectiveEvaluator exact(SelectionProblem problem, unsigned threads = 1);
  /// `per_estimate` governs each individual conditional-entropy estimate.
  static ObjectiveEvaluator sampled(SelectionProblem problem, EstimatorConfig per_estimate,
                                    unsigned threads = 1);

  EvaluationMode mode() const { return mode_; }
  const SelectionProblem& problem() const { return problem_; }
  const EstimatorConfig& estimator() const { return estimator_; }
  unsigned threads() const { return threads_; }

  /// H(x | given), exact or estimated depending on the mode.
  double conditional_entropy(VarId x, const VarSet& given);

  double gain(const VarSet& current, VarId candidate, Objective objective);
  double gain(const VarSet& current, VarId candidate) {
    return gain(current, candidate, problem_.objective());
  }

  /// Gains of several candidates against the same set; runs on up to
  /// `threads()` threads. Output order matches `candidates`.
  std::vector<double> gains(const VarSet& current, std::span<const VarId> candidates,
                            Objective objective);

  /// F(set). Exact mode evaluates the objective directly (for information
  /// gain on models with conditionally independent sensors, through
  /// F(A) = H(A) - sum over sensors Y in A of H(Y | U)). Sampled mode sums
  /// the chain of estimated gains in the given order.
  double value(std::span<const VarId> ordered, Objective objective);
  double value(std::span<const VarId> ordered) { return value(ordered, problem_.objective()); }

  /// Per-step gains along `ordered`: value differences in exact mode,
  /// estimated gains in sampled mode. Sums to value(ordered).
  std::vector<double> chain_gains(std::span<const VarId> ordered, Objective objective);

  std::uint64_t evaluations() const;

 private:
  struct State;

  ObjectiveEvaluator(SelectionProblem problem, EvaluationMode mode, EstimatorConfig estimator,
                     unsigned threads);

  double joint_entropy(const VarSet& scope);

  SelectionProblem problem_;
  EvaluationMode mode_;
  EstimatorConfig estimator_;
  unsigned threads_;
  bool independent_sensors_;
  std::shared_ptr<State> state_;
};

/// F(A u X) - F(A) under the evaluator's objective. Throws
/// std::invalid_argument when X is in A or not a candidate.
double marginal_gain(ObjectiveEvaluator& evaluator, const VarSet& current, VarId candidate);

/// Unit-cost greedy: `max_picks` rounds of picking the largest marginal
/// gain. Selects min(max_picks, |W|) candidates; costs are ignored.
/// Throws std::invalid_argument when max_picks <= 0.
SelectionResult greedy_unit_cost(ObjectiveEvaluator& evaluator, std::int64_t max_picks);

/// Greedy on joint entropy, gain H(X | A) for every candidate regardless of
/// the problem's objective. `value` is H(chosen).
SelectionResult greedy_entropy(ObjectiveEvaluator& evaluator, std::int64_t max_picks);

struct BudgetedConfig {
  /// Partial enumeration depth.
  int depth = 3;
};

/// Budgeted greedy with partial enumeration: the best of (a) the best
/// affordable set with fewer than `depth` elements and (b) the best
/// benefit/cost greedy completion of every affordable `depth`-element seed.
/// A best-ratio candidate that does not fit is discarded and the completion
/// continues. Throws Infeasible when no candidate fits the budget.
SelectionResult greedy_budgeted(ObjectiveEvaluator& evaluator, BudgetedConfig config = {});

/// Benefit/cost greedy from the empty set alone, with no enumeration or
/// singleton fallback. Uncertified; can be arbitrarily far from optimal.
SelectionResult greedy_ratio(ObjectiveEvaluator& evaluator);

/// Better of the best affordable singleton and the benefit/cost greedy run
/// from the empty set. Throws Infeasible when no candidate fits the budget.
SelectionResult greedy_cost_benefit(ObjectiveEvaluator& evaluator);

/// Largest candidate count exhaustive_opt accepts.
inline constexpr std::size_t kMaxExhaustiveCandidates = 20;

/// Exact optimum over every affordable subset; ties go to the
/// lexicographically smallest id list. Exact mode only; throws TooLarge past
/// kMaxExhaustiveCandidates.
SelectionResult exhaustive_opt(ObjectiveEvaluator& evaluator);

/// Runtime guarantee for another selection: other >= factor * OPT with
/// factor = (F(other) / F(ours)) * (1 - 1/e), clamped to [0, 1].
/// Throws std::invalid_argument when F(ours) = 0 < F(other).
double online_bound(double ours_value, double other_value);
double online_bound(const SelectionResult& ours, const SelectionResult& other);

enum class Algorithm { Greedy, Budgeted, CostBenefit, Exhaustive };

const char* to_string(Algorithm algorithm);
Algorithm parse_algorithm(const std::string& text);

struct RunOptions {
  Algorithm algorithm = Algorithm::Greedy;
  EvaluationMode mode = EvaluationMode::Exact;
  /// Run-level epsilon / delta; sample_count, when set, overrides the
  /// derived per-estimate count.
  EstimatorConfig estimator;
  BudgetedConfig budgeted;
  /// When false, information gain on models without conditionally
  /// independent sensors runs uncertified instead of being refused.
  bool require_guarantee = true;
  unsigned threads = 1;
};

/// Number of conditional-entropy estimates a run plans for, used to split
/// delta by the union bound.
std::uint64_t planned_estimates(Algorithm algorithm, std::size_t num_candidates,
                                std::int64_t steps, int depth);

/// Per-estimate estimator settings for a sampled run: each gain may be off
/// by epsilon / (2 * steps) so the greedy degradation totals epsilon; a gain
/// built from two entropy estimates splits that further in half. delta is
/// divided by planned_estimates().
EstimatorConfig per_estimate_config(const SelectionProblem& problem, const RunOptions& options);

/// Validates the problem against the options, dispatches to the algorithm
/// and attaches the certificate.
///
/// Throws Infeasible when the budget admits no candidate,
/// GuaranteeRefused for certified information gain without conditionally
/// independent sensors, std::invalid_argument for greedy on non-unit costs
/// or exhaustive search in sampled mode.
SelectionResult run_selection(const SelectionProblem& problem, const RunOptions& options);

}  // namespace infosel
