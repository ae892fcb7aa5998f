#include "infosel/select.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <numeric>
#include <thread>

#include "infosel/rng.hpp"

namespace infosel {

struct ObjectiveEvaluator::State {
  std::mutex mutex;
  std::map<std::pair<VarId, VarSet>, double> conditional;
  std::map<VarSet, double> joint;
  std::atomic<std::uint64_t> evaluations{0};
};

namespace {

std::uint64_t set_hash(const VarSet& set) {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (VarId v : set) h = mix64(h ^ (v + 1));
  return h;
}

/// Index of the largest score; earlier entries win ties within kTieTolerance.
std::size_t argmax_lowest(std::span<const double> scores) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i)
    if (scores[i] > scores[best] + kTieTolerance) best = i;
  return best;
}

VarSet as_set(std::span<const VarId> ordered) {
  VarSet set = make_set({ordered.begin(), ordered.end()});
  if (set.size() != ordered.size())
    throw std::invalid_argument("selection " + format_set(ordered) + " has duplicates");
  return set;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool any_affordable(const SelectionProblem& problem) {
  return std::any_of(problem.candidates().begin(), problem.candidates().end(),
                     [&](VarId x) { return problem.costs().cost(x) <= problem.budget(); });
}

void require_affordable(const SelectionProblem& problem) {
  if (problem.budget() <= 0 || !any_affordable(problem))
    throw Infeasible("budget " + std::to_string(problem.budget()) + " admits no candidate");
}

SelectionResult greedy_core(ObjectiveEvaluator& evaluator, std::int64_t max_picks,
                            Objective objective) {
  if (max_picks <= 0) throw std::invalid_argument("greedy needs a positive number of picks");
  const SelectionProblem& problem = evaluator.problem();
  const std::uint64_t start = evaluator.evaluations();

  SelectionResult result;
  VarSet current;
  VarSet remaining = problem.candidates();
  const auto rounds = std::min<std::size_t>(static_cast<std::size_t>(max_picks), remaining.size());
  for (std::size_t step = 0; step < rounds; ++step) {
    const std::vector<double> gains = evaluator.gains(current, remaining, objective);
    const std::size_t best = argmax_lowest(gains);
    const VarId pick = remaining[best];
    result.chosen.push_back(pick);
    result.gains.push_back(gains[best]);
    current = with(current, pick);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  result.value = evaluator.mode() == EvaluationMode::Exact
                     ? evaluator.value(result.chosen, objective)
                     : std::accumulate(result.gains.begin(), result.gains.end(), 0.0);
  result.cost = set_cost(problem.costs(), result.chosen);
  result.evaluations = evaluator.evaluations() - start;
  return result;
}

struct Partial {
  std::vector<VarId> chosen;
  std::vector<double> gains;
  double value = 0.0;
};

/// Benefit/cost greedy from `seed` over `remaining`; a best-ratio candidate
/// that does not fit is discarded.
Partial complete_by_ratio(ObjectiveEvaluator& evaluator, Partial seed, VarSet remaining) {
  const SelectionProblem& problem = evaluator.problem();
  const Objective objective = problem.objective();
  VarSet current = make_set(seed.chosen);
  std::int64_t cost = set_cost(problem.costs(), seed.chosen);
  while (!remaining.empty()) {
    const std::vector<double> gains = evaluator.gains(current, remaining, objective);
    std::vector<double> ratios(gains.size());
    for (std::size_t i = 0; i < gains.size(); ++i)
      ratios[i] = gains[i] / static_cast<double>(problem.costs().cost(remaining[i]));
    const std::size_t best = argmax_lowest(ratios);
    const VarId pick = remaining[best];
    const std::int64_t pick_cost = problem.costs().cost(pick);
    if (cost + pick_cost <= problem.budget()) {
      seed.chosen.push_back(pick);
      seed.gains.push_back(gains[best]);
      current = with(current, pick);
      cost += pick_cost;
    }
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  seed.value = evaluator.mode() == EvaluationMode::Exact
                   ? evaluator.value(seed.chosen, objective)
                   : std::accumulate(seed.gains.begin(), seed.gains.end(), 0.0);
  return seed;
}

Partial evaluate_fixed(ObjectiveEvaluator& evaluator, std::vector<VarId> ordered) {
  Partial p;
  p.gains = evaluator.chain_gains(ordered, evaluator.problem().objective());
  p.value = evaluator.mode() == EvaluationMode::Exact
                ? evaluator.value(ordered)
                : std::accumulate(p.gains.begin(), p.gains.end(), 0.0);
  p.chosen = std::move(ordered);
  return p;
}

SelectionResult finish(ObjectiveEvaluator& evaluator, Partial best, std::uint64_t start) {
  SelectionResult result;
  result.cost = set_cost(evaluator.problem().costs(), best.chosen);
  result.chosen = std::move(best.chosen);
  result.gains = std::move(best.gains);
  result.value = best.value;
  result.evaluations = evaluator.evaluations() - start;
  return result;
}

}  // namespace

const char* to_string(EvaluationMode mode) {
  return mode == EvaluationMode::Exact ? "exact" : "sampled";
}

ObjectiveEvaluator::ObjectiveEvaluator(SelectionProblem problem, EvaluationMode mode,
                                       EstimatorConfig estimator, unsigned threads)
    : problem_(std::move(problem)),
      mode_(mode),
      estimator_(estimator),
      threads_(std::max(1u, threads)),
      independent_sensors_(check_conditional_independence(problem_.network())),
      state_(std::make_shared<State>()) {}

ObjectiveEvaluator ObjectiveEvaluator::exact(SelectionProblem problem, unsigned threads) {
  return ObjectiveEvaluator(std::move(problem), EvaluationMode::Exact, EstimatorConfig{}, threads);
}

ObjectiveEvaluator ObjectiveEvaluator::sampled(SelectionProblem problem,
                                               EstimatorConfig per_estimate, unsigned threads) {
  per_estimate.validate();
  return ObjectiveEvaluator(std::move(problem), EvaluationMode::Sampled, per_estimate, threads);
}

double ObjectiveEvaluator::joint_entropy(const VarSet& scope) {
  {
    std::lock_guard lock(state_->mutex);
    auto it = state_->joint.find(scope);
    if (it != state_->joint.end()) return it->second;
  }
  const double h = exact_entropy(problem_.network(), scope);
  std::lock_guard lock(state_->mutex);
  state_->joint.emplace(scope, h);
  return h;
}

double ObjectiveEvaluator::conditional_entropy(VarId x, const VarSet& given) {
  auto key = std::make_pair(x, given);
  {
    std::lock_guard lock(state_->mutex);
    auto it = state_->conditional.find(key);
    if (it != state_->conditional.end()) return it->second;
  }
  double h = 0.0;
  if (mode_ == EvaluationMode::Exact) {
    h = std::max(0.0, joint_entropy(with(given, x)) - joint_entropy(given));
  } else {
    EstimatorConfig config = estimator_;
    config.seed = mix64(estimator_.seed ^ mix64(x + 0x51ed2701ULL) ^ set_hash(given));
    h = estimate_conditional_entropy(problem_.network(), x, given, config).value;
  }
  std::lock_guard lock(state_->mutex);
  if (state_->conditional.emplace(std::move(key), h).second) ++state_->evaluations;
  return h;
}

double ObjectiveEvaluator::gain(const VarSet& current, VarId candidate, Objective objective) {
  const double h = conditional_entropy(candidate, current);
  if (objective == Objective::JointEntropy) return h;
  const DiscreteNetwork& net = problem_.network();
  if (contains(net.observables(), candidate))
    return h - conditional_entropy(candidate, net.targets());
  return h;
}

std::vector<double> ObjectiveEvaluator::gains(const VarSet& current,
                                              std::span<const VarId> candidates,
                                              Objective objective) {
  std::vector<double> out(candidates.size(), 0.0);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(threads_, candidates.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i) out[i] = gain(current, candidates[i], objective);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < candidates.size(); i += workers)
          out[i] = gain(current, candidates[i], objective);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

double ObjectiveEvaluator::value(std::span<const VarId> ordered, Objective objective) {
  const VarSet set = as_set(ordered);
  if (set.empty()) return 0.0;
  if (mode_ == EvaluationMode::Sampled) {
    const auto g = chain_gains(ordered, objective);
    return std::accumulate(g.begin(), g.end(), 0.0);
  }
  if (objective == Objective::JointEntropy) return joint_entropy(set);

  const DiscreteNetwork& net = problem_.network();
  if (independent_sensors_) {
    double f = joint_entropy(set);
    for (VarId y : set_intersection(set, net.observables())) f -= conditional_entropy(y, net.targets());
    return f;
  }
  return joint_entropy(net.targets()) + joint_entropy(set) -
         joint_entropy(set_union(net.targets(), set));
}

std::vector<double> ObjectiveEvaluator::chain_gains(std::span<const VarId> ordered,
                                                    Objective objective) {
  as_set(ordered);
  std::vector<double> out;
  out.reserve(ordered.size());
  std::vector<VarId> prefix;
  VarSet prefix_set;
  double previous = 0.0;
  for (VarId x : ordered) {
    if (mode_ == EvaluationMode::Exact) {
      prefix.push_back(x);
      const double v = value(prefix, objective);
      out.push_back(v - previous);
      previous = v;
    } else {
      out.push_back(gain(prefix_set, x, objective));
      prefix_set = with(prefix_set, x);
    }
  }
  return out;
}

std::uint64_t ObjectiveEvaluator::evaluations() const { return state_->evaluations.load(); }

double marginal_gain(ObjectiveEvaluator& evaluator, const VarSet& current, VarId candidate) {
  if (contains(current, candidate))
    throw std::invalid_argument("candidate " + std::to_string(candidate) + " already selected");
  if (!contains(evaluator.problem().candidates(), candidate))
    throw std::invalid_argument("variable " + std::to_string(candidate) + " is not a candidate");
  return evaluator.gain(current, candidate);
}

SelectionResult greedy_unit_cost(ObjectiveEvaluator& evaluator, std::int64_t max_picks) {
  return greedy_core(evaluator, max_picks, evaluator.problem().objective());
}

SelectionResult greedy_entropy(ObjectiveEvaluator& evaluator, std::int64_t max_picks) {
  return greedy_core(evaluator, max_picks, Objective::JointEntropy);
}

SelectionResult greedy_budgeted(ObjectiveEvaluator& evaluator, BudgetedConfig config) {
  if (config.depth < 1) throw std::invalid_argument("enumeration depth must be >= 1");
  const SelectionProblem& problem = evaluator.problem();
  require_affordable(problem);
  const std::uint64_t start = evaluator.evaluations();
  const VarSet& w = problem.candidates();
  const auto depth = static_cast<std::size_t>(config.depth);

  // Best affordable set with fewer than `depth` elements.
  Partial best_small;
  for (std::size_t k = 1; k < depth && k <= w.size(); ++k) {
    for_each_combination(w.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<VarId> set;
      for (auto i : idx) set.push_back(w[i]);
      if (set_cost(problem.costs(), set) > problem.budget()) return;
      Partial p = evaluate_fixed(evaluator, std::move(set));
      if (p.value > best_small.value + kTieTolerance) best_small = std::move(p);
    });
  }

  // Greedy completions of every affordable depth-element seed.
  Partial best_completion;
  for_each_combination(w.size(), depth, [&](const std::vector<std::size_t>& idx) {
    std::vector<VarId> seed;
    for (auto i : idx) seed.push_back(w[i]);
    if (set_cost(problem.costs(), seed) > problem.budget()) return;
    const VarSet remaining = set_difference(w, make_set(seed));
    Partial start_point = evaluate_fixed(evaluator, std::move(seed));
    Partial p = complete_by_ratio(evaluator, std::move(start_point), remaining);
    if (p.value > best_completion.value + kTieTolerance) best_completion = std::move(p);
  });

  Partial& best =
      best_completion.value > best_small.value + kTieTolerance ? best_completion : best_small;
  return finish(evaluator, std::move(best), start);
}

SelectionResult greedy_ratio(ObjectiveEvaluator& evaluator) {
  const SelectionProblem& problem = evaluator.problem();
  require_affordable(problem);
  const std::uint64_t start = evaluator.evaluations();
  return finish(evaluator, complete_by_ratio(evaluator, Partial{}, problem.candidates()), start);
}

SelectionResult greedy_cost_benefit(ObjectiveEvaluator& evaluator) {
  const SelectionProblem& problem = evaluator.problem();
  require_affordable(problem);
  const std::uint64_t start = evaluator.evaluations();
  const VarSet& w = problem.candidates();

  const std::vector<double> singles = evaluator.gains({}, w, problem.objective());
  std::vector<double> affordable(singles.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    affordable[i] = problem.costs().cost(w[i]) <= problem.budget()
                        ? singles[i]
                        : -std::numeric_limits<double>::infinity();
  const std::size_t top = argmax_lowest(affordable);
  Partial single = evaluate_fixed(evaluator, {w[top]});

  Partial greedy = complete_by_ratio(evaluator, Partial{}, w);
  Partial& best = single.value > greedy.value + kTieTolerance ? single : greedy;
  return finish(evaluator, std::move(best), start);
}

SelectionResult exhaustive_opt(ObjectiveEvaluator& evaluator) {
  if (evaluator.mode() != EvaluationMode::Exact)
    throw std::invalid_argument("exhaustive search requires exact evaluation");
  const SelectionProblem& problem = evaluator.problem();
  const VarSet& w = problem.candidates();
  if (w.size() > kMaxExhaustiveCandidates)
    throw TooLarge("exhaustive search over " + std::to_string(w.size()) + " candidates exceeds " +
                   std::to_string(kMaxExhaustiveCandidates));
  const std::uint64_t start = evaluator.evaluations();

  std::vector<VarId> best_set;
  double best_value = 0.0;
  const std::uint64_t subsets = std::uint64_t{1} << w.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::vector<VarId> set;
    std::int64_t cost = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (mask >> i & 1) {
        set.push_back(w[i]);
        cost += problem.costs().cost(w[i]);
      }
    }
    if (cost > problem.budget()) continue;
    const double v = evaluator.value(set);
    if (v > best_value + kTieTolerance ||
        (std::abs(v - best_value) <= kTieTolerance && !best_set.empty() && set < best_set)) {
      best_value = v;
      best_set = std::move(set);
    }
  }
  Partial best = evaluate_fixed(evaluator, std::move(best_set));
  return finish(evaluator, std::move(best), start);
}

double online_bound(double ours_value, double other_value) {
  if (!(other_value > 0.0)) return 0.0;
  if (!(ours_value > 0.0))
    throw std::invalid_argument("online bound undefined: reference value is zero");
  return std::clamp(other_value / ours_value * kGreedyFactor, 0.0, 1.0);
}

double online_bound(const SelectionResult& ours, const SelectionResult& other) {
  return online_bound(ours.value, other.value);
}

const char* to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Greedy: return "greedy";
    case Algorithm::Budgeted: return "budgeted";
    case Algorithm::CostBenefit: return "costbenefit";
    case Algorithm::Exhaustive: return "exhaustive";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& text) {
  for (Algorithm a : {Algorithm::Greedy, Algorithm::Budgeted, Algorithm::CostBenefit,
                      Algorithm::Exhaustive})
    if (text == to_string(a)) return a;
  throw std::invalid_argument("unknown algorithm '" + text + "'");
}

std::uint64_t planned_estimates(Algorithm algorithm, std::size_t num_candidates,
                                std::int64_t steps, int depth) {
  const auto n = static_cast<std::uint64_t>(std::max<std::size_t>(num_candidates, 1));
  switch (algorithm) {
    case Algorithm::Greedy:
      return 2 * static_cast<std::uint64_t>(std::max<std::int64_t>(steps, 1)) * n;
    case Algorithm::CostBenefit:
      return 2 * n * (n + 1);
    case Algorithm::Budgeted: {
      std::uint64_t p = 4;
      for (int i = 0; i < depth + 2; ++i) p *= n;
      return p;
    }
    case Algorithm::Exhaustive:
      return 1;
  }
  return 1;
}

EstimatorConfig per_estimate_config(const SelectionProblem& problem, const RunOptions& options) {
  options.estimator.validate();
  const std::int64_t steps = std::max<std::int64_t>(
      1, std::min<std::int64_t>(problem.budget(),
                                static_cast<std::int64_t>(problem.candidates().size())));
  const bool two_terms =
      problem.objective() == Objective::InformationGain &&
      !set_intersection(problem.candidates(), problem.network().observables()).empty();
  EstimatorConfig out = options.estimator;
  out.epsilon = options.estimator.epsilon / (2.0 * static_cast<double>(steps) * (two_terms ? 2.0 : 1.0));
  out.delta = options.estimator.delta /
              static_cast<double>(planned_estimates(options.algorithm, problem.candidates().size(),
                                                    steps, options.budgeted.depth));
  return out;
}

SelectionResult run_selection(const SelectionProblem& problem, const RunOptions& options) {
  require_affordable(problem);
  const bool independent = check_conditional_independence(problem.network());
  const bool submodular = problem.objective() == Objective::JointEntropy || independent;

  if (options.algorithm == Algorithm::Greedy && !problem.costs().is_unit(problem.candidates()))
    throw std::invalid_argument("greedy needs unit costs; use budgeted or costbenefit");
  if (options.algorithm == Algorithm::Exhaustive && options.mode != EvaluationMode::Exact)
    throw std::invalid_argument("exhaustive search requires exact evaluation");
  if (!submodular && options.require_guarantee && options.algorithm != Algorithm::Exhaustive)
    throw GuaranteeRefused(
        "information gain needs observables whose parents are all targets and that have no "
        "children; pass the no-guarantee override to run uncertified");

  ObjectiveEvaluator evaluator =
      options.mode == EvaluationMode::Exact
          ? ObjectiveEvaluator::exact(problem, options.threads)
          : ObjectiveEvaluator::sampled(problem, per_estimate_config(problem, options),
                                        options.threads);

  SelectionResult result;
  std::optional<double> factor;
  switch (options.algorithm) {
    case Algorithm::Greedy:
      result = problem.objective() == Objective::JointEntropy
                   ? greedy_entropy(evaluator, problem.budget())
                   : greedy_unit_cost(evaluator, problem.budget());
      factor = kGreedyFactor;
      break;
    case Algorithm::Budgeted:
      result = greedy_budgeted(evaluator, options.budgeted);
      if (options.budgeted.depth >= 3) factor = kGreedyFactor;
      break;
    case Algorithm::CostBenefit:
      result = greedy_cost_benefit(evaluator);
      factor = kGreedyFactor / 2.0;
      break;
    case Algorithm::Exhaustive:
      result = exhaustive_opt(evaluator);
      factor = 1.0;
      break;
  }

  if (!submodular && options.algorithm != Algorithm::Exhaustive) factor.reset();
  if (factor && options.mode == EvaluationMode::Sampled && options.estimator.sample_count) {
    // An explicit sample count certifies only if it meets every estimate's
    // Hoeffding requirement.
    const EstimatorConfig per = per_estimate_config(problem, options);
    std::uint32_t k = 2;
    for (VarId x : problem.candidates()) k = std::max(k, problem.network().cardinality(x));
    if (*options.estimator.sample_count < hoeffding_sample_count(per.epsilon, per.delta, k))
      factor.reset();
  }
  if (factor) {
    if (options.mode == EvaluationMode::Exact)
      result.guarantee = Guarantee{*factor, 0.0, 1.0};
    else
      result.guarantee =
          Guarantee{*factor, options.estimator.epsilon, 1.0 - options.estimator.delta};
  }
  return result;
}

}  // namespace infosel
