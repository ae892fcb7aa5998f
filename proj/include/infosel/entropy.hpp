#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "infosel/model.hpp"

namespace infosel {

/// Probabilities below this are treated as exact zeros in entropy sums.
inline constexpr double kProbabilityFloor = 1e-12;

/// Shannon entropy in bits of a (not necessarily normalized to the last ulp)
/// distribution; 0 log 0 = 0.
double entropy_bits(std::span<const double> probabilities);

/// Joint entropy H(scope) in bits.
///
/// Uses a dense joint table when the scope fits kMaxTableCells and variable
/// elimination stays within its caps, otherwise the sparse forward
/// enumeration. Throws TooLarge when neither fits.
double exact_entropy(const DiscreteNetwork& network, const VarSet& scope);

/// H(left | right) = H(left u right) - H(right). Throws
/// std::invalid_argument when the sets overlap.
double exact_conditional_entropy(const DiscreteNetwork& network, const VarSet& left,
                                 const VarSet& right);

/// F(A) = H(U) - H(U \ A | A), computed exactly as H(U) + H(A) - H(U u A).
double information_gain(const DiscreteNetwork& network, const VarSet& targets,
                        const VarSet& observed);

/// Settings for the sampled conditional-entropy estimator.
struct EstimatorConfig {
  /// Absolute error target in bits.
  double epsilon = 0.05;
  /// Failure probability.
  double delta = 0.05;
  /// Explicit number of samples; overrides the Hoeffding count.
  std::optional<std::uint64_t> sample_count;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument unless epsilon > 0, 0 < delta < 1 and an
  /// explicit sample count is at least 1.
  void validate() const;
};

struct EntropyEstimate {
  double value = 0.0;
  std::uint64_t sample_count = 0;
  double epsilon = 0.0;
  double delta = 0.0;
};

/// Samples needed for an estimate within epsilon bits with probability
/// 1 - delta:
///
///   N = ceil( 1/2 * (log2(domain_size) / epsilon)^2 * ln(2 / delta) )
///
/// The ln(2/delta) term is the exact inversion of the two-sided Hoeffding
/// bound 2 exp(-2 N (epsilon / log2|dom|)^2) <= delta.
std::uint64_t hoeffding_sample_count(double epsilon, double delta, std::uint32_t domain_size);

/// Union-bound form for a whole greedy run of `steps` picks over
/// `num_candidates` candidates:
///
///   N = ceil( 1/2 * (steps * log2(domain_size) / epsilon)^2 * ln(2 * steps * num_candidates / delta) )
std::uint64_t hoeffding_sample_count_per_run(double epsilon, double delta,
                                             std::uint32_t domain_size, std::uint64_t steps,
                                             std::uint64_t num_candidates);

/// Monte Carlo estimate of H(query | conditioning): the mean, over forward
/// samples b of the conditioning set, of the exact entropy of P(query | b).
///
/// Posteriors are computed once per distinct b; this changes the cost, not
/// the estimate.
EntropyEstimate estimate_conditional_entropy(const DiscreteNetwork& network, VarId query,
                                             const VarSet& conditioning,
                                             const EstimatorConfig& config);

}  // namespace infosel
