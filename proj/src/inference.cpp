#include "infosel/inference.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "factor.hpp"

namespace infosel {

namespace {

void check_scope(const DiscreteNetwork& network, std::span<const VarId> scope) {
  std::vector<VarId> seen(scope.begin(), scope.end());
  for (VarId v : seen)
    if (v >= network.size())
      throw std::out_of_range("variable id " + std::to_string(v) + " out of range");
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("scope " + format_set(scope) + " has duplicates");
}

}  // namespace

JointTable::JointTable(std::vector<VarId> scope, std::vector<std::uint32_t> cardinalities,
                       std::vector<double> probabilities)
    : scope_(std::move(scope)), cards_(std::move(cardinalities)), probs_(std::move(probabilities)) {
  if (scope_.size() != cards_.size())
    throw std::invalid_argument("joint table scope and cardinalities differ in length");
  std::size_t cells = 1;
  for (auto c : cards_) {
    if (c != 0 && cells > kMaxTableCells / c)
      throw TooLarge("joint table over " + format_set(scope_) + " exceeds " +
                     std::to_string(kMaxTableCells) + " cells");
    cells *= c;
  }
  if (probs_.size() != cells)
    throw std::invalid_argument("joint table has " + std::to_string(probs_.size()) +
                                " entries, expected " + std::to_string(cells));
}

double JointTable::at(std::span<const Value> values) const {
  if (values.size() != scope_.size()) throw std::invalid_argument("assignment length mismatch");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= cards_[i]) throw std::out_of_range("value out of range");
    idx = idx * cards_[i] + values[i];
  }
  return probs_[idx];
}

std::vector<double> posterior(const DiscreteNetwork& network, VarId query,
                              const Assignment& evidence) {
  require_valid(network);
  if (query >= network.size())
    throw std::out_of_range("query id " + std::to_string(query) + " out of range");
  if (evidence.has(query))
    throw std::invalid_argument("query " + std::to_string(query) + " is bound in the evidence");
  if (!evidence.consistent_with(network))
    throw std::invalid_argument("evidence value out of range");

  VarSet want{query};
  for (const auto& [id, value] : evidence.bindings()) want.push_back(id);
  const VarSet relevant = network.ancestors(make_set(std::move(want)));

  std::vector<detail::Factor> factors;
  factors.reserve(relevant.size());
  for (VarId v : relevant) factors.push_back(detail::reduce(detail::cpt_factor(network, v), evidence));

  const VarId keep[] = {query};
  detail::Factor result = detail::eliminate_to(std::move(factors), keep, network);
  const double mass = std::accumulate(result.values.begin(), result.values.end(), 0.0);
  if (!(mass > 0.0))
    throw InconsistentEvidence("evidence has zero probability under the model");
  for (double& p : result.values) p /= mass;
  return std::move(result.values);
}

JointTable joint_table(const DiscreteNetwork& network, std::span<const VarId> scope) {
  require_valid(network);
  check_scope(network, scope);
  std::vector<std::uint32_t> cards;
  std::size_t cells = 1;
  for (VarId v : scope) {
    const auto c = network.cardinality(v);
    if (cells > kMaxTableCells / c)
      throw TooLarge("joint table over " + format_set(scope) + " exceeds " +
                     std::to_string(kMaxTableCells) + " cells");
    cells *= c;
    cards.push_back(c);
  }
  const VarSet relevant = network.ancestors(make_set({scope.begin(), scope.end()}));
  std::vector<detail::Factor> factors;
  factors.reserve(relevant.size());
  for (VarId v : relevant) factors.push_back(detail::cpt_factor(network, v));
  detail::Factor result = detail::eliminate_to(std::move(factors), scope, network);
  return JointTable({scope.begin(), scope.end()}, std::move(cards), std::move(result.values));
}

std::vector<double> sparse_joint(const DiscreteNetwork& network, const VarSet& scope) {
  require_valid(network);
  check_scope(network, scope);
  const VarSet closure = network.ancestors(scope);

  std::vector<std::uint32_t> pending(network.size(), 0);
  for (VarId v : closure)
    for (VarId p : network.parents(v)) ++pending[p];

  // Active variables are packed into a mixed-radix key; digit i has weight
  // weight[i] and the most recently placed variable is most significant.
  std::vector<VarId> active;
  std::vector<std::uint32_t> card;
  std::vector<std::uint64_t> weight;
  std::uint64_t span = 1;
  std::unordered_map<std::uint64_t, double> states{{0, 1.0}};

  auto digit_of = [&](std::uint64_t key, std::size_t i) { return (key / weight[i]) % card[i]; };

  auto drop = [&](VarId v) {
    const auto i = static_cast<std::size_t>(std::find(active.begin(), active.end(), v) - active.begin());
    std::unordered_map<std::uint64_t, double> next;
    next.reserve(states.size());
    const std::uint64_t low = weight[i];
    const std::uint64_t high = weight[i] * card[i];
    for (const auto& [key, p] : states) next[key % low + (key / high) * low] += p;
    states = std::move(next);
    span /= card[i];
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(i));
    card.erase(card.begin() + static_cast<std::ptrdiff_t>(i));
    weight.erase(weight.begin() + static_cast<std::ptrdiff_t>(i));
    for (std::size_t k = i; k < weight.size(); ++k) weight[k] /= (high / low);
  };

  for (VarId v : network.topological_order()) {
    if (!contains(closure, v)) continue;
    const Cpt& cpt = network.cpt(v);
    const std::uint32_t c = network.cardinality(v);
    if (span > UINT64_MAX / c)
      throw TooLarge("sparse joint over " + format_set(scope) + " overflows its state key");

    std::vector<std::size_t> parent_pos;
    for (VarId p : cpt.parents)
      parent_pos.push_back(
          static_cast<std::size_t>(std::find(active.begin(), active.end(), p) - active.begin()));

    std::unordered_map<std::uint64_t, double> next;
    next.reserve(states.size() * 2);
    for (const auto& [key, p] : states) {
      std::size_t row = 0;
      for (std::size_t k = 0; k < parent_pos.size(); ++k)
        row = row * card[parent_pos[k]] + digit_of(key, parent_pos[k]);
      const double* probs = cpt.table.data() + row * c;
      for (std::uint32_t x = 0; x < c; ++x)
        if (probs[x] > 0.0) next[key + x * span] += p * probs[x];
    }
    states = std::move(next);
    active.push_back(v);
    card.push_back(c);
    weight.push_back(span);
    span *= c;

    for (VarId p : cpt.parents)
      if (--pending[p] == 0 && !contains(scope, p)) drop(p);
    if (states.size() > kMaxTableCells)
      throw TooLarge("support of " + format_set(scope) + " exceeds " +
                     std::to_string(kMaxTableCells) + " assignments");
  }

  std::vector<double> out;
  out.reserve(states.size());
  for (const auto& [key, p] : states) out.push_back(p);
  return out;
}

std::size_t draw_index(std::span<const double> probabilities, double u) {
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] <= 0.0) continue;
    acc += probabilities[i];
    last_positive = i;
    if (u < acc) return i;
  }
  return last_positive;
}

AncestralSampler::AncestralSampler(const DiscreteNetwork& network, const VarSet& scope)
    : network_(&network) {
  require_valid(network);
  const VarSet closure = network.ancestors(scope);
  for (VarId v : network.topological_order())
    if (contains(closure, v)) order_.push_back(v);
}

void AncestralSampler::draw(Rng& rng, std::vector<Value>& values) const {
  if (values.size() < network_->size()) values.resize(network_->size(), 0);
  for (VarId v : order_) {
    const Cpt& cpt = network_->cpt(v);
    const std::uint32_t c = network_->cardinality(v);
    const std::size_t row = network_->row_index(cpt, [&](VarId p) { return values[p]; });
    values[v] = static_cast<Value>(
        draw_index(std::span<const double>(cpt.table.data() + row * c, c), rng.uniform()));
  }
}

Assignment sample(const DiscreteNetwork& network, Rng& rng) {
  VarSet all(network.size());
  std::iota(all.begin(), all.end(), VarId{0});
  AncestralSampler sampler(network, all);
  std::vector<Value> values(network.size(), 0);
  sampler.draw(rng, values);
  Assignment out;
  for (VarId v = 0; v < network.size(); ++v) out.set(v, values[v]);
  return out;
}

Assignment restrict_sample(const Assignment& assignment, std::span<const VarId> scope) {
  Assignment out;
  for (VarId v : scope) out.set(v, assignment.at(v));
  return out;
}

}  // namespace infosel
