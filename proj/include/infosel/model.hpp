#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infosel/types.hpp"

namespace infosel {

/// A discrete random variable; its id is its position in the network.
struct Variable {
  std::string name;
  std::uint32_t cardinality = 2;
};

/// Conditional probability table P(child | parents).
///
/// `table` is row-major: one row per joint parent assignment, one column per
/// child value. Rows are ordered with the last parent varying fastest.
struct Cpt {
  VarId child = 0;
  std::vector<VarId> parents;
  std::vector<double> table;
};

/// Tolerance on CPT row normalization.
inline constexpr double kRowSumTolerance = 1e-9;

/// Directed Bayesian network over finite-domain variables, with the
/// observable (sensor) and target partition hints.
///
/// Construction never throws on semantic problems; it records them in the
/// validation report. Inference entry points require `is_valid()`.
/// Immutable after construction.
class DiscreteNetwork {
 public:
  DiscreteNetwork() = default;
  DiscreteNetwork(std::vector<Variable> variables, std::vector<Cpt> cpts,
                  std::vector<VarId> observables, std::vector<VarId> targets);

  std::size_t size() const { return variables_.size(); }
  const std::vector<Variable>& variables() const { return variables_; }
  const Variable& variable(VarId id) const { return variables_.at(id); }
  std::uint32_t cardinality(VarId id) const { return variables_.at(id).cardinality; }

  /// CPTs in the order they were supplied.
  const std::vector<Cpt>& cpts() const { return cpts_; }
  /// The CPT whose child is `id`. Requires a valid network.
  const Cpt& cpt(VarId id) const;

  const VarSet& observables() const { return observables_; }
  const VarSet& targets() const { return targets_; }

  const std::vector<VarId>& parents(VarId id) const { return cpt(id).parents; }
  const std::vector<VarId>& children(VarId id) const { return children_.at(id); }

  /// Parents-first order; empty when the parent graph is cyclic.
  const std::vector<VarId>& topological_order() const { return topo_; }

  /// Inclusive ancestral closure of `scope`, sorted.
  VarSet ancestors(const VarSet& scope) const;

  /// Row index of a parent assignment given a per-variable value lookup.
  template <typename Lookup>
  std::size_t row_index(const Cpt& cpt, Lookup&& value_of) const {
    std::size_t row = 0;
    for (VarId p : cpt.parents) row = row * cardinality(p) + value_of(p);
    return row;
  }

  const std::vector<std::string>& validation_report() const { return report_; }
  bool is_valid() const { return report_.empty(); }

 private:
  std::vector<Variable> variables_;
  std::vector<Cpt> cpts_;
  VarSet observables_;
  VarSet targets_;
  std::vector<std::int64_t> cpt_index_;
  std::vector<std::vector<VarId>> children_;
  std::vector<VarId> topo_;
  std::vector<std::string> report_;
};

/// Violated invariants; empty means valid.
std::vector<std::string> validate(const DiscreteNetwork& network);

/// Throws ModelError listing every violation.
void require_valid(const DiscreteNetwork& network);

/// Structural sufficient condition for the sensors to be conditionally
/// independent given the targets: every observable has all its parents among
/// the targets and has no children.
bool check_conditional_independence(const DiscreteNetwork& network);

/// Partial assignment of values to variables.
class Assignment {
 public:
  Assignment() = default;

  void set(VarId id, Value value) { bindings_[id] = value; }
  bool has(VarId id) const { return bindings_.count(id) != 0; }
  /// Throws std::out_of_range when unbound.
  Value at(VarId id) const;
  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }
  const std::map<VarId, Value>& bindings() const { return bindings_; }

  /// Checks every bound value against the network's cardinalities.
  bool consistent_with(const DiscreteNetwork& network) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::map<VarId, Value> bindings_;
};

/// Linear cost model with an integer budget.
struct CostModel {
  /// One entry per variable id; every cost >= 1.
  std::vector<std::int64_t> costs;
  std::int64_t budget = 0;

  static CostModel unit(std::size_t num_variables, std::int64_t budget);

  std::int64_t cost(VarId id) const;
  bool is_unit(const VarSet& over) const;
};

/// c(A) = sum of member costs. Throws std::out_of_range for an unknown id.
std::int64_t set_cost(const CostModel& costs, std::span<const VarId> set);

enum class Objective { JointEntropy, InformationGain };

const char* to_string(Objective objective);
Objective parse_objective(const std::string& text);

/// Candidate set, cost model and objective over a shared network.
class SelectionProblem {
 public:
  /// Throws std::invalid_argument when the candidates are empty or not a
  /// subset of observables and targets, or the cost model does not cover
  /// every variable.
  SelectionProblem(std::shared_ptr<const DiscreteNetwork> network, VarSet candidates,
                   CostModel costs, Objective objective);

  const DiscreteNetwork& network() const { return *network_; }
  const std::shared_ptr<const DiscreteNetwork>& network_ptr() const { return network_; }
  const VarSet& candidates() const { return candidates_; }
  const CostModel& costs() const { return costs_; }
  std::int64_t budget() const { return costs_.budget; }
  Objective objective() const { return objective_; }

  /// Same problem with another budget.
  SelectionProblem with_budget(std::int64_t budget) const;
  SelectionProblem with_objective(Objective objective) const;

 private:
  std::shared_ptr<const DiscreteNetwork> network_;
  VarSet candidates_;
  CostModel costs_;
  Objective objective_;
};

/// Default candidate set: observables for information gain, observables and
/// targets for joint entropy.
VarSet default_candidates(const DiscreteNetwork& network, Objective objective);

}  // namespace infosel
