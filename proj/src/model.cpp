#include "infosel/model.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace infosel {

namespace {

std::vector<VarId> sorted_unique(std::vector<VarId> ids) { return make_set(std::move(ids)); }

}  // namespace

DiscreteNetwork::DiscreteNetwork(std::vector<Variable> variables, std::vector<Cpt> cpts,
                                 std::vector<VarId> observables, std::vector<VarId> targets)
    : variables_(std::move(variables)),
      cpts_(std::move(cpts)),
      observables_(sorted_unique(observables)),
      targets_(sorted_unique(targets)) {
  const std::size_t n = variables_.size();
  cpt_index_.assign(n, -1);
  children_.assign(n, {});

  auto report = [this](const std::string& msg) { report_.push_back(msg); };

  for (std::size_t v = 0; v < n; ++v) {
    if (variables_[v].cardinality < 1)
      report("variable " + std::to_string(v) + " has cardinality 0");
  }
  if (observables_.size() != observables.size()) report("observables contain duplicates");
  if (targets_.size() != targets.size()) report("targets contain duplicates");
  for (VarId s : observables_)
    if (s >= n) report("observable id " + std::to_string(s) + " out of range");
  for (VarId u : targets_)
    if (u >= n) report("target id " + std::to_string(u) + " out of range");
  for (VarId s : set_intersection(observables_, targets_))
    report("variable " + std::to_string(s) + " is both observable and target");

  bool structurally_sound = true;
  for (std::size_t i = 0; i < cpts_.size(); ++i) {
    const Cpt& c = cpts_[i];
    const std::string where = "cpt " + std::to_string(i);
    if (c.child >= n) {
      report(where + ": child id " + std::to_string(c.child) + " out of range");
      structurally_sound = false;
      continue;
    }
    if (cpt_index_[c.child] != -1) {
      report(where + ": duplicate cpt for variable " + std::to_string(c.child));
      structurally_sound = false;
      continue;
    }
    cpt_index_[c.child] = static_cast<std::int64_t>(i);

    std::size_t rows = 1;
    bool parents_ok = true;
    std::vector<VarId> seen;
    for (VarId p : c.parents) {
      if (p >= n) {
        report(where + ": parent id " + std::to_string(p) + " out of range");
        parents_ok = false;
        continue;
      }
      if (p == c.child) report(where + ": variable " + std::to_string(p) + " is its own parent");
      if (std::find(seen.begin(), seen.end(), p) != seen.end())
        report(where + ": duplicate parent " + std::to_string(p));
      seen.push_back(p);
      rows *= variables_[p].cardinality;
    }
    if (!parents_ok) {
      structurally_sound = false;
      continue;
    }
    for (VarId p : c.parents) children_[p].push_back(c.child);

    const std::size_t cols = variables_[c.child].cardinality;
    if (c.table.size() != rows * cols) {
      report(where + ": table has " + std::to_string(c.table.size()) + " entries, expected " +
             std::to_string(rows) + " rows x " + std::to_string(cols) + " columns");
      structurally_sound = false;
      continue;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      double sum = 0.0;
      bool in_range = true;
      for (std::size_t k = 0; k < cols; ++k) {
        const double p = c.table[r * cols + k];
        if (!(p >= 0.0 && p <= 1.0)) in_range = false;
        sum += p;
      }
      if (!in_range)
        report(where + ": row " + std::to_string(r) + " has an entry outside [0,1]");
      if (!(std::abs(sum - 1.0) <= kRowSumTolerance)) {
        std::ostringstream msg;
        msg.precision(12);
        msg << where << ": row " << r << " sums to " << sum;
        report(msg.str());
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (cpt_index_[v] == -1) {
      report("variable " + std::to_string(v) + " has no cpt");
      structurally_sound = false;
    }
  }
  for (auto& ch : children_) ch = sorted_unique(std::move(ch));

  if (!structurally_sound) return;

  // Kahn's algorithm; smallest ready id first.
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t v = 0; v < n; ++v) indegree[v] = sorted_unique(cpt(v).parents).size();
  std::priority_queue<VarId, std::vector<VarId>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(static_cast<VarId>(v));
  std::vector<VarId> order;
  while (!ready.empty()) {
    VarId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (VarId c : children_[v])
      if (--indegree[c] == 0) ready.push(c);
  }
  if (order.size() != n) {
    std::vector<VarId> cyclic;
    for (std::size_t v = 0; v < n; ++v)
      if (indegree[v] > 0) cyclic.push_back(static_cast<VarId>(v));
    report("parent structure has a cycle through variables " + format_set(cyclic));
    return;
  }
  topo_ = std::move(order);
}

const Cpt& DiscreteNetwork::cpt(VarId id) const {
  if (id >= cpt_index_.size() || cpt_index_[id] < 0)
    throw std::out_of_range("no cpt for variable " + std::to_string(id));
  return cpts_[static_cast<std::size_t>(cpt_index_[id])];
}

VarSet DiscreteNetwork::ancestors(const VarSet& scope) const {
  std::vector<char> mark(size(), 0);
  std::vector<VarId> stack(scope.begin(), scope.end());
  while (!stack.empty()) {
    VarId v = stack.back();
    stack.pop_back();
    if (v >= size()) throw std::out_of_range("variable id " + std::to_string(v) + " out of range");
    if (mark[v]) continue;
    mark[v] = 1;
    for (VarId p : parents(v))
      if (!mark[p]) stack.push_back(p);
  }
  VarSet out;
  for (std::size_t v = 0; v < size(); ++v)
    if (mark[v]) out.push_back(static_cast<VarId>(v));
  return out;
}

std::vector<std::string> validate(const DiscreteNetwork& network) {
  return network.validation_report();
}

void require_valid(const DiscreteNetwork& network) {
  if (network.is_valid()) return;
  std::string msg = "invalid network:";
  for (const auto& line : network.validation_report()) msg += "\n  " + line;
  throw ModelError(msg);
}

bool check_conditional_independence(const DiscreteNetwork& network) {
  require_valid(network);
  for (VarId s : network.observables()) {
    if (!network.children(s).empty()) return false;
    for (VarId p : network.parents(s))
      if (!contains(network.targets(), p)) return false;
  }
  return true;
}

Value Assignment::at(VarId id) const {
  auto it = bindings_.find(id);
  if (it == bindings_.end()) throw std::out_of_range("variable " + std::to_string(id) + " is unbound");
  return it->second;
}

bool Assignment::consistent_with(const DiscreteNetwork& network) const {
  for (const auto& [id, value] : bindings_) {
    if (id >= network.size() || value >= network.cardinality(id)) return false;
  }
  return true;
}

CostModel CostModel::unit(std::size_t num_variables, std::int64_t budget) {
  return CostModel{std::vector<std::int64_t>(num_variables, 1), budget};
}

std::int64_t CostModel::cost(VarId id) const {
  if (id >= costs.size()) throw std::out_of_range("no cost for variable " + std::to_string(id));
  return costs[id];
}

bool CostModel::is_unit(const VarSet& over) const {
  return std::all_of(over.begin(), over.end(), [this](VarId id) { return cost(id) == 1; });
}

std::int64_t set_cost(const CostModel& costs, std::span<const VarId> set) {
  std::int64_t total = 0;
  for (VarId id : set) total += costs.cost(id);
  return total;
}

const char* to_string(Objective objective) {
  return objective == Objective::JointEntropy ? "entropy" : "infogain";
}

Objective parse_objective(const std::string& text) {
  if (text == "entropy") return Objective::JointEntropy;
  if (text == "infogain") return Objective::InformationGain;
  throw std::invalid_argument("unknown objective '" + text + "'");
}

SelectionProblem::SelectionProblem(std::shared_ptr<const DiscreteNetwork> network,
                                   VarSet candidates, CostModel costs, Objective objective)
    : network_(std::move(network)),
      candidates_(make_set(std::move(candidates))),
      costs_(std::move(costs)),
      objective_(objective) {
  if (!network_) throw std::invalid_argument("selection problem needs a network");
  require_valid(*network_);
  if (candidates_.empty()) throw std::invalid_argument("candidate set is empty");
  const VarSet allowed = set_union(network_->observables(), network_->targets());
  if (!is_subset(candidates_, allowed))
    throw std::invalid_argument("candidates " + format_set(set_difference(candidates_, allowed)) +
                                " are neither observables nor targets");
  if (costs_.costs.size() != network_->size())
    throw std::invalid_argument("cost model covers " + std::to_string(costs_.costs.size()) +
                                " variables, network has " + std::to_string(network_->size()));
  for (std::size_t i = 0; i < costs_.costs.size(); ++i)
    if (costs_.costs[i] < 1)
      throw std::invalid_argument("cost of variable " + std::to_string(i) + " is below 1");
  if (costs_.budget < 0) throw std::invalid_argument("budget is negative");
}

SelectionProblem SelectionProblem::with_budget(std::int64_t budget) const {
  CostModel costs = costs_;
  costs.budget = budget;
  return SelectionProblem(network_, candidates_, std::move(costs), objective_);
}

SelectionProblem SelectionProblem::with_objective(Objective objective) const {
  return SelectionProblem(network_, candidates_, costs_, objective);
}

VarSet default_candidates(const DiscreteNetwork& network, Objective objective) {
  if (objective == Objective::InformationGain) return network.observables();
  return set_union(network.observables(), network.targets());
}

}  // namespace infosel
