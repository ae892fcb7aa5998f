#include "infosel/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "infosel/inference.hpp"
#include "infosel/rng.hpp"

namespace infosel {

namespace {

// Absorbs floating-point noise in the sample-count formula so that values
// landing exactly on an integer do not round up by one.
constexpr double kCeilSlack = 1e-9;

std::uint64_t ceil_count(double raw) {
  return static_cast<std::uint64_t>(std::ceil(raw - kCeilSlack * std::max(1.0, raw)));
}

struct ValuesHash {
  std::size_t operator()(const std::vector<Value>& values) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (Value v : values) h = mix64(h ^ v);
    return static_cast<std::size_t>(h);
  }
};

// Upper bound on the number of nonzero joint states over the ancestral
// closure of `scope`: product of the widest CPT row support. Saturates.
double support_bound(const DiscreteNetwork& network, const VarSet& scope) {
  double bound = 1.0;
  for (VarId v : network.ancestors(scope)) {
    const Cpt& cpt = network.cpt(v);
    const std::uint32_t c = network.cardinality(v);
    std::uint32_t widest = 0;
    for (std::size_t row = 0; row * c < cpt.table.size(); ++row) {
      const auto nz = static_cast<std::uint32_t>(std::count_if(
          cpt.table.begin() + static_cast<std::ptrdiff_t>(row * c),
          cpt.table.begin() + static_cast<std::ptrdiff_t>((row + 1) * c), [](double p) { return p > 0.0; }));
      widest = std::max(widest, nz);
    }
    bound *= widest;
    if (bound > 1e18) break;
  }
  return bound;
}

// Hash-map work per sparse state versus table work per dense cell.
constexpr double kSparseCostRatio = 16.0;

}  // namespace

double entropy_bits(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities)
    if (p > kProbabilityFloor) h -= p * std::log2(p);
  return h > 0.0 ? h : 0.0;
}

double exact_entropy(const DiscreteNetwork& network, const VarSet& scope) {
  require_valid(network);
  if (scope.empty()) return 0.0;
  std::size_t cells = 1;
  bool dense_fits = true;
  for (VarId v : scope) {
    const auto c = network.cardinality(v);
    if (cells > kMaxTableCells / c) {
      dense_fits = false;
      break;
    }
    cells *= c;
  }
  if (dense_fits && support_bound(network, scope) * kSparseCostRatio < static_cast<double>(cells))
    dense_fits = false;
  if (dense_fits) {
    try {
      return entropy_bits(joint_table(network, scope).probabilities());
    } catch (const TooLarge&) {
      // fall through to the sparse path
    }
  }
  return entropy_bits(sparse_joint(network, scope));
}

double exact_conditional_entropy(const DiscreteNetwork& network, const VarSet& left,
                                 const VarSet& right) {
  if (!set_intersection(left, right).empty())
    throw std::invalid_argument("conditional entropy of overlapping sets " + format_set(left) +
                                " and " + format_set(right));
  if (left.empty()) return 0.0;
  const double h = exact_entropy(network, set_union(left, right)) - exact_entropy(network, right);
  return h > 0.0 ? h : 0.0;
}

double information_gain(const DiscreteNetwork& network, const VarSet& targets,
                        const VarSet& observed) {
  if (observed.empty()) return 0.0;
  return exact_entropy(network, targets) + exact_entropy(network, observed) -
         exact_entropy(network, set_union(targets, observed));
}

void EstimatorConfig::validate() const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  if (sample_count && *sample_count < 1) throw std::invalid_argument("sample count must be >= 1");
}

std::uint64_t hoeffding_sample_count(double epsilon, double delta, std::uint32_t domain_size) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  if (domain_size < 2) throw std::invalid_argument("domain size must be at least 2");
  const double range = std::log2(static_cast<double>(domain_size)) / epsilon;
  return ceil_count(0.5 * range * range * std::log(2.0 / delta));
}

std::uint64_t hoeffding_sample_count_per_run(double epsilon, double delta,
                                             std::uint32_t domain_size, std::uint64_t steps,
                                             std::uint64_t num_candidates) {
  if (steps < 1 || num_candidates < 1)
    throw std::invalid_argument("steps and candidate count must be positive");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  if (domain_size < 2) throw std::invalid_argument("domain size must be at least 2");
  const double range =
      static_cast<double>(steps) * std::log2(static_cast<double>(domain_size)) / epsilon;
  const double confidence =
      std::log(2.0 * static_cast<double>(steps) * static_cast<double>(num_candidates) / delta);
  return ceil_count(0.5 * range * range * confidence);
}

EntropyEstimate estimate_conditional_entropy(const DiscreteNetwork& network, VarId query,
                                             const VarSet& conditioning,
                                             const EstimatorConfig& config) {
  config.validate();
  require_valid(network);
  if (query >= network.size())
    throw std::out_of_range("query id " + std::to_string(query) + " out of range");
  if (contains(conditioning, query))
    throw std::invalid_argument("query " + std::to_string(query) + " is in the conditioning set");

  const std::uint32_t card = network.cardinality(query);
  std::uint64_t n = 1;
  if (config.sample_count)
    n = *config.sample_count;
  else if (card >= 2)
    n = hoeffding_sample_count(config.epsilon, config.delta, card);

  Rng rng(config.seed);
  AncestralSampler sampler(network, conditioning);
  std::vector<Value> values(network.size(), 0);
  std::vector<Value> key(conditioning.size(), 0);
  std::unordered_map<std::vector<Value>, double, ValuesHash> memo;

  double total = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    sampler.draw(rng, values);
    for (std::size_t k = 0; k < conditioning.size(); ++k) key[k] = values[conditioning[k]];
    auto it = memo.find(key);
    if (it == memo.end()) {
      Assignment evidence;
      for (std::size_t k = 0; k < conditioning.size(); ++k) evidence.set(conditioning[k], key[k]);
      it = memo.emplace(key, entropy_bits(posterior(network, query, evidence))).first;
    }
    total += it->second;
  }
  return EntropyEstimate{total / static_cast<double>(n), n, config.epsilon, config.delta};
}

}  // namespace infosel
