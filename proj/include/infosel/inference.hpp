#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "infosel/model.hpp"
#include "infosel/rng.hpp"

namespace infosel {

/// Largest dense joint table (cells) that exact routines will build.
inline constexpr std::size_t kMaxTableCells = std::size_t{1} << 22;

/// Largest intermediate factor during variable elimination.
inline constexpr std::size_t kMaxFactorCells = std::size_t{1} << 24;

/// Dense joint distribution over an ordered scope; the last scope variable
/// varies fastest.
class JointTable {
 public:
  /// Throws TooLarge when the scope has more than kMaxTableCells cells.
  JointTable(std::vector<VarId> scope, std::vector<std::uint32_t> cardinalities,
             std::vector<double> probabilities);

  const std::vector<VarId>& scope() const { return scope_; }
  const std::vector<std::uint32_t>& cardinalities() const { return cards_; }
  const std::vector<double>& probabilities() const { return probs_; }
  std::size_t size() const { return probs_.size(); }

  /// Probability of a full assignment of the scope, given in scope order.
  double at(std::span<const Value> values) const;

 private:
  std::vector<VarId> scope_;
  std::vector<std::uint32_t> cards_;
  std::vector<double> probs_;
};

/// P(query | evidence) by variable elimination with a min-degree order,
/// after dropping variables that are not ancestors of the query or the
/// evidence.
///
/// Throws std::invalid_argument if the query is bound in the evidence or the
/// evidence is out of range, InconsistentEvidence if P(evidence) = 0.
std::vector<double> posterior(const DiscreteNetwork& network, VarId query,
                              const Assignment& evidence);

/// Exact marginal joint of `scope` (caller order, no duplicates).
/// Throws TooLarge past kMaxTableCells.
JointTable joint_table(const DiscreteNetwork& network, std::span<const VarId> scope);

/// Probabilities of the nonzero-mass assignments of `scope`, in no
/// particular order. Enumerates the ancestral closure forward and
/// marginalizes a variable as soon as its last child is placed, so its cost
/// follows the support size rather than the dense table size. Throws TooLarge
/// when the support exceeds kMaxTableCells.
std::vector<double> sparse_joint(const DiscreteNetwork& network, const VarSet& scope);

/// Full joint sample by ancestral sampling in topological order.
Assignment sample(const DiscreteNetwork& network, Rng& rng);

/// Projection of an assignment onto `scope`. Throws std::out_of_range if
/// some scope variable is unbound.
Assignment restrict_sample(const Assignment& assignment, std::span<const VarId> scope);

/// Ancestral sampler restricted to the ancestral closure of a scope. Writes
/// into a dense value vector indexed by variable id; entries outside the
/// closure are left untouched.
class AncestralSampler {
 public:
  AncestralSampler(const DiscreteNetwork& network, const VarSet& scope);

  void draw(Rng& rng, std::vector<Value>& values) const;

 private:
  const DiscreteNetwork* network_;
  std::vector<VarId> order_;
};

/// Draws an index from a discrete distribution given a uniform draw.
std::size_t draw_index(std::span<const double> probabilities, double u);

}  // namespace infosel
