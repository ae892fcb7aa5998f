#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "infosel/model.hpp"
#include "infosel/model_json.hpp"
#include "infosel/rng.hpp"

namespace infosel {

/// Synthetic hierarchical sensor model: targets (aggregate nodes) form a
/// sparse DAG, each sensor reads a noisy function of a few targets and has
/// no children.
struct HierarchySpec {
  std::size_t num_targets = 3;
  std::size_t num_sensors = 6;
  /// Parents per sensor, drawn from the targets.
  std::size_t sensor_parent_count = 1;
  /// Domain size of every variable.
  std::uint32_t cardinality = 5;
  /// Weight of the uniform component in each sensor row, in (0, 1]. The
  /// rest of the mass sits on the rounded mean of the sensor's parents.
  double noise = 0.3;
  /// Per-sensor noise is noise * (1 - noise_spread * u) with u ~ U[0, 1);
  /// 0 gives every sensor the same noise.
  double noise_spread = 0.0;
  /// Probability of each edge i -> j (i < j) between targets.
  double target_edge_probability = 0.0;
  std::int64_t budget = 3;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

/// Unit costs, information-gain objective, candidates = sensors.
SelectionProblem make_hierarchical(const HierarchySpec& spec);

/// MAX-COVER instance over elements 1..universe_size.
struct MaxCoverInstance {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::size_t>> subsets;
  std::int64_t budget = 1;

  /// Throws std::invalid_argument on out-of-range or repeated elements, an
  /// empty family, or a subset with more than kMaxCoverSetSize elements.
  void validate() const;
};

inline constexpr std::size_t kMaxCoverSetSize = 20;

/// Reads {"n": int, "sets": [[int,...],...], "budget": int}.
MaxCoverInstance parse_max_cover(std::string_view text);

/// Independent fair coins X1..Xn as targets; each subset becomes one
/// observable whose value is the binary code of its members (a
/// deterministic function of them, cardinality 2^|U_i|). The information
/// gain of any set of observables is the size of the union they cover.
SelectionProblem make_max_cover(const MaxCoverInstance& instance);

MaxCoverInstance random_max_cover(std::size_t universe_size, std::size_t num_subsets,
                                  std::size_t max_subset_size, std::int64_t budget, Rng& rng);

/// X, Y fair coins and Z = X xor Y; observables {X, Y}, target {Z}.
DiscreteNetwork make_xor();

/// Three independent candidates engineered so that benefit/cost greedy
/// without partial enumeration is trapped: A (1 bit, cost 1), B (1.8 bits,
/// cost 2) and C (0 bits, cost 1) under budget 2; joint-entropy objective.
SelectionProblem make_budget_trap();

/// Categorical distribution (1 - 3q, q, q, q) whose entropy is `bits`,
/// for bits in (0, 2].
std::vector<double> four_way_with_entropy(double bits);

/// Copy of the problem with costs drawn uniformly from [low, high].
SelectionProblem with_random_costs(const SelectionProblem& problem, std::int64_t low,
                                   std::int64_t high, std::int64_t budget, Rng& rng);

/// Model file carrying the problem's network, costs and budget.
ModelFile to_model_file(const SelectionProblem& problem);

struct PredictionError {
  std::vector<double> per_target;
  double mean = 0.0;
};

/// Misclassification rate of posterior-mode prediction of each target from
/// the selected variables, over forward-sampled trials. A selected target
/// predicts itself. Ties in the posterior go to the lowest value.
PredictionError prediction_error(const DiscreteNetwork& network, const VarSet& selection,
                                 std::size_t num_trials, std::uint64_t seed);

}  // namespace infosel
