#include "infosel/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "json.hpp"

#include "infosel/entropy.hpp"
#include "infosel/inference.hpp"

namespace infosel {

namespace {

std::vector<double> random_simplex(std::uint32_t k, Rng& rng) {
  std::vector<double> w(k);
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(1.0 - rng.uniform());
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

/// Values of the parents of row `row`, last parent fastest.
std::vector<std::uint32_t> decode_row(std::size_t row, const std::vector<std::uint32_t>& cards) {
  std::vector<std::uint32_t> values(cards.size());
  for (std::size_t i = cards.size(); i-- > 0;) {
    values[i] = static_cast<std::uint32_t>(row % cards[i]);
    row /= cards[i];
  }
  return values;
}

}  // namespace

void HierarchySpec::validate() const {
  if (num_targets < 1) throw std::invalid_argument("need at least one target");
  if (sensor_parent_count > num_targets)
    throw std::invalid_argument("sensor_parent_count exceeds num_targets");
  if (cardinality < 2) throw std::invalid_argument("cardinality must be >= 2");
  if (!(noise > 0.0 && noise <= 1.0)) throw std::invalid_argument("noise must lie in (0, 1]");
  if (!(noise_spread >= 0.0 && noise_spread <= 1.0))
    throw std::invalid_argument("noise_spread must lie in [0, 1]");
  if (!(target_edge_probability >= 0.0 && target_edge_probability <= 1.0))
    throw std::invalid_argument("target_edge_probability must lie in [0, 1]");
  if (budget < 0) throw std::invalid_argument("budget must be non-negative");
}

SelectionProblem make_hierarchical(const HierarchySpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const std::uint32_t k = spec.cardinality;
  std::vector<Variable> vars;
  std::vector<Cpt> cpts;
  std::vector<VarId> targets, sensors;

  for (std::size_t j = 0; j < spec.num_targets; ++j) {
    const auto id = static_cast<VarId>(j);
    vars.push_back({"U" + std::to_string(j), k});
    targets.push_back(id);
    Cpt cpt;
    cpt.child = id;
    for (std::size_t i = 0; i < j; ++i)
      if (rng.uniform() < spec.target_edge_probability) cpt.parents.push_back(static_cast<VarId>(i));
    std::size_t rows = 1;
    for (std::size_t p = 0; p < cpt.parents.size(); ++p) rows *= k;
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<double> row = random_simplex(k, rng);
      if (!cpt.parents.empty()) {
        // Lean towards the first parent's value so linked targets correlate.
        const auto lead = decode_row(r, std::vector<std::uint32_t>(cpt.parents.size(), k)).front();
        for (auto& p : row) p *= 0.4;
        row[lead] += 0.6;
      }
      cpt.table.insert(cpt.table.end(), row.begin(), row.end());
    }
    cpts.push_back(std::move(cpt));
  }

  for (std::size_t s = 0; s < spec.num_sensors; ++s) {
    const auto id = static_cast<VarId>(spec.num_targets + s);
    vars.push_back({"S" + std::to_string(s), k});
    sensors.push_back(id);
    Cpt cpt;
    cpt.child = id;
    for (auto p : sample_without_replacement(spec.num_targets, spec.sensor_parent_count, rng))
      cpt.parents.push_back(static_cast<VarId>(p));
    const double weight = spec.noise * (1.0 - spec.noise_spread * rng.uniform());
    const std::vector<std::uint32_t> cards(cpt.parents.size(), k);
    std::size_t rows = 1;
    for (std::size_t p = 0; p < cpt.parents.size(); ++p) rows *= k;
    for (std::size_t r = 0; r < rows; ++r) {
      const auto values = decode_row(r, cards);
      const std::size_t sum = std::accumulate(values.begin(), values.end(), std::size_t{0});
      const std::size_t np = std::max<std::size_t>(values.size(), 1);
      const auto reading = static_cast<std::uint32_t>((2 * sum + np) / (2 * np));
      for (std::uint32_t x = 0; x < k; ++x)
        cpt.table.push_back(weight / k + (x == reading ? 1.0 - weight : 0.0));
    }
    cpts.push_back(std::move(cpt));
  }

  auto net = std::make_shared<const DiscreteNetwork>(std::move(vars), std::move(cpts), sensors,
                                                     targets);
  return SelectionProblem(net, make_set(sensors), CostModel::unit(net->size(), spec.budget),
                          Objective::InformationGain);
}

void MaxCoverInstance::validate() const {
  if (subsets.empty()) throw std::invalid_argument("max-cover instance needs at least one subset");
  if (budget < 0) throw std::invalid_argument("budget must be non-negative");
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto& s = subsets[i];
    if (s.size() > kMaxCoverSetSize)
      throw std::invalid_argument("subset " + std::to_string(i + 1) + " has more than " +
                                  std::to_string(kMaxCoverSetSize) + " elements");
    std::vector<std::size_t> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("subset " + std::to_string(i + 1) + " repeats an element");
    for (auto e : s)
      if (e < 1 || e > universe_size)
        throw std::invalid_argument("element " + std::to_string(e) + " outside 1.." +
                                    std::to_string(universe_size));
  }
}

MaxCoverInstance parse_max_cover(std::string_view text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("n") || !root.contains("sets"))
    throw ModelError("max-cover instance needs 'n' and 'sets'");
  MaxCoverInstance inst;
  try {
    inst.universe_size = root["n"].get<std::size_t>();
    inst.subsets = root["sets"].get<std::vector<std::vector<std::size_t>>>();
    if (root.contains("budget")) inst.budget = root["budget"].get<std::int64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("bad max-cover field: ") + e.what());
  }
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw ModelError(e.what());
  }
  return inst;
}

SelectionProblem make_max_cover(const MaxCoverInstance& instance) {
  instance.validate();
  const std::size_t n = instance.universe_size;
  std::vector<Variable> vars;
  std::vector<Cpt> cpts;
  std::vector<VarId> targets, sensors;
  for (std::size_t j = 0; j < n; ++j) {
    vars.push_back({"X" + std::to_string(j + 1), 2});
    targets.push_back(static_cast<VarId>(j));
    cpts.push_back({static_cast<VarId>(j), {}, {0.5, 0.5}});
  }
  for (std::size_t i = 0; i < instance.subsets.size(); ++i) {
    std::vector<std::size_t> members = instance.subsets[i];
    std::sort(members.begin(), members.end());
    const auto id = static_cast<VarId>(n + i);
    const std::size_t states = std::size_t{1} << members.size();
    vars.push_back({"Y" + std::to_string(i + 1), static_cast<std::uint32_t>(states)});
    sensors.push_back(id);
    Cpt cpt;
    cpt.child = id;
    for (auto e : members) cpt.parents.push_back(static_cast<VarId>(e - 1));
    // Row r is the binary code of the members; the reading is that code.
    cpt.table.assign(states * states, 0.0);
    for (std::size_t r = 0; r < states; ++r) cpt.table[r * states + r] = 1.0;
    cpts.push_back(std::move(cpt));
  }
  auto net = std::make_shared<const DiscreteNetwork>(std::move(vars), std::move(cpts), sensors,
                                                     targets);
  return SelectionProblem(net, make_set(sensors), CostModel::unit(net->size(), instance.budget),
                          Objective::InformationGain);
}

MaxCoverInstance random_max_cover(std::size_t universe_size, std::size_t num_subsets,
                                  std::size_t max_subset_size, std::int64_t budget, Rng& rng) {
  MaxCoverInstance inst;
  inst.universe_size = universe_size;
  inst.budget = budget;
  const std::size_t cap = std::min(max_subset_size, universe_size);
  for (std::size_t i = 0; i < num_subsets; ++i) {
    const std::size_t size = 1 + static_cast<std::size_t>(rng.below(cap));
    std::vector<std::size_t> members;
    for (auto e : sample_without_replacement(universe_size, size, rng)) members.push_back(e + 1);
    inst.subsets.push_back(std::move(members));
  }
  inst.validate();
  return inst;
}

DiscreteNetwork make_xor() {
  std::vector<Variable> vars{{"X", 2}, {"Y", 2}, {"Z", 2}};
  std::vector<Cpt> cpts{
      {0, {}, {0.5, 0.5}},
      {1, {}, {0.5, 0.5}},
      // rows (x, y) = 00, 01, 10, 11
      {2, {0, 1}, {1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0}},
  };
  return DiscreteNetwork(std::move(vars), std::move(cpts), {0, 1}, {2});
}

std::vector<double> four_way_with_entropy(double bits) {
  if (!(bits > 0.0 && bits <= 2.0)) throw std::invalid_argument("entropy must lie in (0, 2]");
  auto h = [](double q) {
    const std::vector<double> p{1.0 - 3.0 * q, q, q, q};
    return entropy_bits(p);
  };
  // h is increasing on (0, 1/4].
  double lo = 0.0, hi = 0.25;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) < bits ? lo : hi) = mid;
  }
  const double q = 0.5 * (lo + hi);
  return {1.0 - 3.0 * q, q, q, q};
}

SelectionProblem make_budget_trap() {
  std::vector<Variable> vars{{"A", 2}, {"B", 4}, {"C", 2}};
  std::vector<Cpt> cpts{
      {0, {}, {0.5, 0.5}},
      {1, {}, four_way_with_entropy(1.8)},
      {2, {}, {1.0, 0.0}},
  };
  auto net = std::make_shared<const DiscreteNetwork>(std::move(vars), std::move(cpts),
                                                     std::vector<VarId>{},
                                                     std::vector<VarId>{0, 1, 2});
  return SelectionProblem(net, {0, 1, 2}, CostModel{{1, 2, 1}, 2}, Objective::JointEntropy);
}

SelectionProblem with_random_costs(const SelectionProblem& problem, std::int64_t low,
                                   std::int64_t high, std::int64_t budget, Rng& rng) {
  if (low < 1 || high < low) throw std::invalid_argument("cost range must satisfy 1 <= low <= high");
  CostModel costs = problem.costs();
  costs.budget = budget;
  for (auto& c : costs.costs)
    c = low + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(high - low + 1)));
  return SelectionProblem(problem.network_ptr(), problem.candidates(), std::move(costs),
                          problem.objective());
}

ModelFile to_model_file(const SelectionProblem& problem) {
  return ModelFile{problem.network(), problem.costs().costs, problem.budget()};
}

PredictionError prediction_error(const DiscreteNetwork& network, const VarSet& selection,
                                 std::size_t num_trials, std::uint64_t seed) {
  require_valid(network);
  for (VarId a : selection)
    if (a >= network.size())
      throw std::out_of_range("selection id " + std::to_string(a) + " out of range");
  const VarSet& targets = network.targets();
  PredictionError out;
  out.per_target.assign(targets.size(), 0.0);
  if (num_trials == 0 || targets.empty()) return out;

  VarSet all(network.size());
  std::iota(all.begin(), all.end(), VarId{0});
  AncestralSampler sampler(network, all);
  Rng rng(seed);
  std::vector<Value> values(network.size(), 0);
  std::map<std::vector<Value>, std::vector<Value>> memo;
  std::vector<std::size_t> errors(targets.size(), 0);

  for (std::size_t t = 0; t < num_trials; ++t) {
    sampler.draw(rng, values);
    std::vector<Value> key;
    for (VarId a : selection) key.push_back(values[a]);
    auto it = memo.find(key);
    if (it == memo.end()) {
      Assignment evidence;
      for (std::size_t i = 0; i < selection.size(); ++i) evidence.set(selection[i], key[i]);
      std::vector<Value> modes;
      for (VarId u : targets) {
        if (contains(selection, u)) {
          modes.push_back(evidence.at(u));
          continue;
        }
        const auto p = posterior(network, u, evidence);
        std::size_t best = 0;
        for (std::size_t x = 1; x < p.size(); ++x)
          if (p[x] > p[best] + kProbabilityFloor) best = x;
        modes.push_back(static_cast<Value>(best));
      }
      it = memo.emplace(std::move(key), std::move(modes)).first;
    }
    for (std::size_t j = 0; j < targets.size(); ++j)
      if (it->second[j] != values[targets[j]]) ++errors[j];
  }
  double total = 0.0;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    out.per_target[j] = static_cast<double>(errors[j]) / static_cast<double>(num_trials);
    total += out.per_target[j];
  }
  out.mean = total / static_cast<double>(targets.size());
  return out;
}

}  // namespace infosel
