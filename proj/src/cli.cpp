#include "infosel/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "infosel/benchgen.hpp"
#include "infosel/model_json.hpp"
#include "infosel/select.hpp"

namespace infosel {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string format_number(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument(std::string("empty entry in ") + what);
    item = item.substr(b, e - b + 1);
    T value{};
    const auto r = std::from_chars(item.data(), item.data() + item.size(), value);
    if (r.ec != std::errc() || r.ptr != item.data() + item.size())
      throw std::invalid_argument(std::string("bad entry '") + item + "' in " + what);
    out.push_back(value);
  }
  return out;
}

VarSet parse_id_set(const std::string& text, const char* what) {
  const auto ids = parse_list<VarId>(text, what);
  VarSet set = make_set(ids);
  if (set.size() != ids.size()) throw std::invalid_argument(std::string("repeated id in ") + what);
  return set;
}

EvaluationMode parse_mode(const std::string& text) {
  if (text == "exact") return EvaluationMode::Exact;
  if (text == "sampled") return EvaluationMode::Sampled;
  throw std::invalid_argument("unknown mode '" + text + "'");
}

std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t value) {
  if (flag->count() > 0) return value;
  if (const char* env = std::getenv("INFOGAIN_SEED")) {
    const std::string text(env);
    std::uint64_t seed = 0;
    const auto r = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (text.empty() || r.ec != std::errc() || r.ptr != text.data() + text.size())
      throw std::invalid_argument("INFOGAIN_SEED is not an unsigned integer: '" + text + "'");
    return seed;
  }
  return 0;
}

std::string echo(const std::vector<std::string>& args) {
  std::string s = "infosel";
  for (const auto& a : args) s += " " + a;
  return s;
}

// Flags shared by select, curve and bound.
struct RunFlags {
  std::string model;
  std::string objective = "infogain";
  std::string algorithm = "greedy";
  std::int64_t budget = 0;
  int depth = 3;
  std::string mode = "exact";
  double epsilon = 0.05;
  double delta = 0.05;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool no_guarantee = false;
  unsigned threads = 1;
  std::string candidates;

  CLI::Option* budget_opt = nullptr;
  CLI::Option* samples_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* candidates_opt = nullptr;

  void add_to(CLI::App* app, bool with_algorithm) {
    app->add_option("--model", model, "Model JSON file")->required();
    app->add_option("--objective", objective, "entropy or infogain")
        ->check(CLI::IsMember({"entropy", "infogain"}));
    if (with_algorithm)
      app->add_option("--algorithm", algorithm, "greedy, budgeted, costbenefit or exhaustive")
          ->check(CLI::IsMember({"greedy", "budgeted", "costbenefit", "exhaustive"}));
    budget_opt = app->add_option("--budget", budget, "Budget (overrides the model file)");
    app->add_option("--d", depth, "Partial enumeration depth for budgeted")
        ->check(CLI::Range(1, 8));
    app->add_option("--mode", mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
    app->add_option("--epsilon", epsilon, "Additive error of a sampled run, in bits");
    app->add_option("--delta", delta, "Failure probability of a sampled run");
    samples_opt = app->add_option("--samples", samples, "Samples per entropy estimate");
    seed_opt = app->add_option("--seed", seed, "RNG seed (default: INFOGAIN_SEED or 0)");
    app->add_flag("--no-guarantee", no_guarantee,
                  "Run information gain on models without conditionally independent "
                  "observables, uncertified");
    app->add_option("--threads", threads, "Worker threads per greedy step")
        ->check(CLI::Range(1u, 256u));
    candidates_opt =
        app->add_option("--candidates", candidates, "Comma-separated candidate ids");
  }
};

struct Loaded {
  ModelFile file;
  std::string digest;
  SelectionProblem problem;
  RunOptions options;
  std::uint64_t seed = 0;
  double load_ms = 0.0;
};

Loaded load(const RunFlags& flags) {
  const auto start = Clock::now();
  ModelFile file = load_model(flags.model);
  const std::string digest = model_digest(file);
  const Objective objective = parse_objective(flags.objective);

  std::int64_t budget = 0;
  if (flags.budget_opt->count() > 0)
    budget = flags.budget;
  else if (file.budget)
    budget = *file.budget;
  else
    throw std::invalid_argument("no budget: pass --budget or set it in the model file");

  auto network = std::make_shared<const DiscreteNetwork>(file.network);
  VarSet candidates = flags.candidates_opt->count() > 0
                          ? parse_id_set(flags.candidates, "--candidates")
                          : default_candidates(*network, objective);
  SelectionProblem problem(network, std::move(candidates), CostModel{file.costs, budget},
                           objective);

  RunOptions options;
  options.algorithm = parse_algorithm(flags.algorithm);
  options.mode = parse_mode(flags.mode);
  options.estimator.epsilon = flags.epsilon;
  options.estimator.delta = flags.delta;
  if (flags.samples_opt->count() > 0) options.estimator.sample_count = flags.samples;
  const std::uint64_t seed = resolve_seed(flags.seed_opt, flags.seed);
  options.estimator.seed = seed;
  options.estimator.validate();
  options.budgeted.depth = flags.depth;
  options.require_guarantee = !flags.no_guarantee;
  options.threads = flags.threads;

  return Loaded{std::move(file), digest, std::move(problem), options, seed, elapsed_ms(start)};
}

ordered_json certificate_json(const std::optional<Guarantee>& g) {
  if (!g) return nullptr;
  ordered_json j;
  j["factor"] = g->factor;
  j["additive_slack"] = g->additive_slack;
  j["confidence"] = g->confidence;
  return j;
}

ordered_json result_json(const SelectionResult& r, const DiscreteNetwork& net) {
  ordered_json j;
  j["chosen"] = r.chosen;
  std::vector<std::string> names;
  for (VarId v : r.chosen) names.push_back(net.variable(v).name);
  j["names"] = names;
  j["gains"] = r.gains;
  j["value"] = r.value;
  j["cost"] = r.cost;
  j["evaluations"] = r.evaluations;
  j["certificate"] = certificate_json(r.guarantee);
  return j;
}

ordered_json record_header(const std::string& command, const Loaded& in) {
  ordered_json j;
  j["command"] = command;
  j["digest"] = in.digest;
  j["algorithm"] = to_string(in.options.algorithm);
  j["objective"] = to_string(in.problem.objective());
  j["mode"] = to_string(in.options.mode);
  j["seed"] = in.seed;
  j["budget"] = in.problem.budget();
  j["candidates"] = in.problem.candidates();
  if (in.options.mode == EvaluationMode::Sampled) {
    ordered_json est;
    est["epsilon"] = in.options.estimator.epsilon;
    est["delta"] = in.options.estimator.delta;
    if (in.options.estimator.sample_count)
      est["samples"] = *in.options.estimator.sample_count;
    else
      est["samples"] = nullptr;
    j["estimator"] = est;
  }
  return j;
}

int cmd_select(const RunFlags& flags, const std::string& output, const std::string& command,
               std::ostream& out) {
  Loaded in = load(flags);
  const auto start = Clock::now();
  const SelectionResult r = run_selection(in.problem, in.options);
  const double run_ms = elapsed_ms(start);

  if (output == "csv") {
    out << "k,chosen_id,name,marginal_gain_bits,cumulative_value_bits\n";
    double cumulative = 0.0;
    for (std::size_t k = 0; k < r.chosen.size(); ++k) {
      cumulative += r.gains[k];
      out << k + 1 << ',' << r.chosen[k] << ','
          << csv_field(in.problem.network().variable(r.chosen[k]).name) << ','
          << format_number(r.gains[k]) << ',' << format_number(cumulative) << '\n';
    }
    return kExitOk;
  }
  ordered_json j = record_header(command, in);
  j["result"] = result_json(r, in.problem.network());
  j["timing_ms"] = {{"load", in.load_ms}, {"select", run_ms}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_curve(const RunFlags& flags, bool eval_prediction, std::size_t trials,
              std::ostream& out) {
  Loaded in = load(flags);
  // The curve is always the unit-cost greedy trajectory up to the budget.
  const SelectionProblem& p = in.problem;
  SelectionProblem unit(p.network_ptr(), p.candidates(),
                        CostModel::unit(p.network().size(), p.budget()), p.objective());
  RunOptions options = in.options;
  options.algorithm = Algorithm::Greedy;
  const SelectionResult r = run_selection(unit, options);

  out << "k,chosen_id,marginal_gain_bits,cumulative_value_bits";
  if (eval_prediction) out << ",prediction_error";
  out << '\n';
  double cumulative = 0.0;
  VarSet prefix;
  for (std::size_t k = 0; k < r.chosen.size(); ++k) {
    cumulative += r.gains[k];
    out << k + 1 << ',' << r.chosen[k] << ',' << format_number(r.gains[k]) << ','
        << format_number(cumulative);
    if (eval_prediction) {
      prefix = with(prefix, r.chosen[k]);
      const auto e = prediction_error(p.network(), prefix, trials, mix64(in.seed ^ 0x9e3779b9ULL));
      out << ',' << format_number(e.mean);
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_bound(const RunFlags& flags, const std::string& candidate_set, const std::string& command,
              std::ostream& out) {
  Loaded in = load(flags);
  if (in.options.algorithm != Algorithm::Greedy && in.options.algorithm != Algorithm::Budgeted)
    throw std::invalid_argument("bound compares against greedy or budgeted only");
  const VarSet other = candidate_set.empty() ? VarSet{} : parse_id_set(candidate_set, "--candidate-set");
  const SelectionProblem& p = in.problem;
  if (!is_subset(other, p.candidates()))
    throw Infeasible("candidate set " + format_set(other) + " is not within the candidates " +
                     format_set(p.candidates()));
  const std::int64_t other_cost = set_cost(p.costs(), other);
  if (other_cost > p.budget())
    throw Infeasible("candidate set costs " + std::to_string(other_cost) + ", over the budget " +
                     std::to_string(p.budget()));

  const auto start = Clock::now();
  const SelectionResult ours = run_selection(p, in.options);
  ObjectiveEvaluator evaluator =
      in.options.mode == EvaluationMode::Exact
          ? ObjectiveEvaluator::exact(p, in.options.threads)
          : ObjectiveEvaluator::sampled(p, per_estimate_config(p, in.options), in.options.threads);
  const double other_value = evaluator.value(other);
  const double factor = online_bound(ours.value, other_value);
  const double run_ms = elapsed_ms(start);

  ordered_json j = record_header(command, in);
  j["result"] = result_json(ours, p.network());
  j["candidate_set"] = other;
  j["candidate_value"] = other_value;
  j["candidate_cost"] = other_cost;
  j["factor"] = factor;
  j["timing_ms"] = {{"load", in.load_ms}, {"bound", run_ms}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

// Generator flags shared by bench and generate.
struct GenFlags {
  std::string generator = "hierarchical";
  HierarchySpec hier;
  std::size_t universe = 10;
  std::size_t subsets = 6;
  std::size_t max_subset_size = 4;
  std::string instance;

  void add_to(CLI::App* app, bool with_files) {
    std::vector<std::string> kinds{"hierarchical", "maxcover"};
    if (with_files) {
      kinds.push_back("xor");
      kinds.push_back("trap");
    }
    app->add_option("--generator", generator, "Instance family")->check(CLI::IsMember(kinds));
    app->add_option("--targets", hier.num_targets, "Hierarchical: target count");
    app->add_option("--sensors", hier.num_sensors, "Hierarchical: sensor count");
    app->add_option("--parents", hier.sensor_parent_count, "Hierarchical: parents per sensor");
    app->add_option("--cardinality", hier.cardinality, "Hierarchical: domain size");
    app->add_option("--noise", hier.noise, "Hierarchical: sensor noise weight in (0, 1]");
    app->add_option("--noise-spread", hier.noise_spread, "Hierarchical: per-sensor noise spread");
    app->add_option("--edge-prob", hier.target_edge_probability,
                    "Hierarchical: target edge probability");
    app->add_option("--universe", universe, "Max-cover: universe size");
    app->add_option("--subsets", subsets, "Max-cover: subset count");
    app->add_option("--max-subset-size", max_subset_size, "Max-cover: largest subset");
    if (with_files)
      app->add_option("--instance", instance, "Max-cover: instance JSON {n, sets, budget}");
  }

  SelectionProblem make(std::uint64_t seed, std::int64_t budget) const {
    if (generator == "maxcover") {
      Rng rng(seed);
      return make_max_cover(random_max_cover(universe, subsets, max_subset_size, budget, rng));
    }
    HierarchySpec spec = hier;
    spec.seed = seed;
    spec.budget = budget;
    return make_hierarchical(spec);
  }
};

struct BenchFlags {
  std::size_t instances = 5;
  std::uint64_t seed = 0;
  std::string budgets = "3";
  std::string algorithms = "greedy,exhaustive";
  std::string objective = "infogain";
  std::string mode = "exact";
  double epsilon = 0.05;
  double delta = 0.05;
  std::string costs;
  int depth = 3;
  std::string sweep = "quality";
  std::string samples = "250,500,1000,2000";
  std::size_t repeats = 3;
  unsigned threads = 1;
  bool no_guarantee = false;
  CLI::Option* seed_opt = nullptr;
};

struct BenchRow {
  std::string status = "ok";
  std::optional<double> value;
  std::uint64_t evaluations = 0;
  double wall_ms = 0.0;
  std::size_t steps = 0;
};

BenchRow bench_run(const SelectionProblem& problem, const RunOptions& options,
                   std::ostream& err) {
  BenchRow row;
  const auto start = Clock::now();
  try {
    const SelectionResult r = run_selection(problem, options);
    row.value = r.value;
    row.evaluations = r.evaluations;
    row.steps = r.chosen.size();
  } catch (const Infeasible&) {
    row.status = "infeasible";
  } catch (const GuaranteeRefused&) {
    row.status = "refused";
  } catch (const TooLarge& e) {
    row.status = "too_large";
    err << "bench: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    row.status = "invalid";
    err << "bench: " << e.what() << '\n';
  }
  row.wall_ms = elapsed_ms(start);
  return row;
}

int cmd_bench(const GenFlags& gen, const BenchFlags& flags, std::ostream& out,
              std::ostream& err) {
  const std::uint64_t seed = resolve_seed(flags.seed_opt, flags.seed);
  const auto budgets = parse_list<std::int64_t>(flags.budgets, "--budgets");
  std::vector<Algorithm> algorithms;
  {
    std::stringstream ss(flags.algorithms);
    std::string item;
    while (std::getline(ss, item, ',')) algorithms.push_back(parse_algorithm(item));
  }
  std::optional<std::pair<std::int64_t, std::int64_t>> cost_range;
  if (!flags.costs.empty()) {
    const auto c = parse_list<std::int64_t>(flags.costs, "--costs");
    if (c.size() != 2) throw std::invalid_argument("--costs takes LOW,HIGH");
    cost_range = std::make_pair(c[0], c[1]);
  }
  const Objective objective = parse_objective(flags.objective);
  const bool samples_sweep = flags.sweep == "samples";
  const auto sample_counts =
      samples_sweep ? parse_list<std::uint64_t>(flags.samples, "--samples") : std::vector<std::uint64_t>{};

  RunOptions base;
  base.mode = samples_sweep ? EvaluationMode::Sampled : parse_mode(flags.mode);
  base.estimator.epsilon = flags.epsilon;
  base.estimator.delta = flags.delta;
  base.estimator.seed = seed;
  base.estimator.validate();
  base.budgeted.depth = flags.depth;
  base.require_guarantee = !flags.no_guarantee;
  base.threads = flags.threads;

  out << "instance,generator,instance_seed,candidates,budget,algorithm,mode,samples,status,value,"
         "opt,ratio,evaluations,wall_ms,per_step_ms\n";
  const Rng root(seed);
  for (std::size_t i = 0; i < flags.instances; ++i) {
    const std::uint64_t instance_seed = root.split(i).seed();
    for (std::int64_t budget : budgets) {
      SelectionProblem problem = gen.make(instance_seed, budget).with_objective(objective);
      if (objective == Objective::JointEntropy)
        problem = SelectionProblem(problem.network_ptr(),
                                   default_candidates(problem.network(), objective),
                                   problem.costs(), objective);
      if (cost_range) {
        Rng cost_rng = Rng(instance_seed).split(0xc057);
        problem = with_random_costs(problem, cost_range->first, cost_range->second, budget,
                                    cost_rng);
      }

      std::optional<double> opt;
      if (!samples_sweep && problem.candidates().size() <= kMaxExhaustiveCandidates) {
        RunOptions exact = base;
        exact.mode = EvaluationMode::Exact;
        exact.algorithm = Algorithm::Exhaustive;
        const BenchRow r = bench_run(problem, exact, err);
        if (r.value) opt = r.value;
      }

      auto emit = [&](Algorithm a, const RunOptions& options, const BenchRow& row,
                      const std::string& samples) {
        out << i << ',' << gen.generator << ',' << instance_seed << ','
            << problem.candidates().size() << ',' << budget << ',' << to_string(a) << ','
            << to_string(options.mode) << ',' << samples << ',' << row.status << ',';
        if (row.value) out << format_number(*row.value);
        out << ',';
        if (opt) out << format_number(*opt);
        out << ',';
        if (row.value && opt) out << format_number(*opt > 0.0 ? *row.value / *opt : 1.0);
        out << ',' << row.evaluations << ',' << format_number(row.wall_ms) << ',';
        if (row.steps > 0) out << format_number(row.wall_ms / static_cast<double>(row.steps));
        out << '\n';
      };

      for (Algorithm a : algorithms) {
        RunOptions options = base;
        options.algorithm = a;
        if (!samples_sweep) {
          emit(a, options, bench_run(problem, options, err),
               options.mode == EvaluationMode::Sampled ? "auto" : "");
          continue;
        }
        for (std::uint64_t n : sample_counts) {
          options.estimator.sample_count = n;
          BenchRow best;
          for (std::size_t rep = 0; rep < std::max<std::size_t>(flags.repeats, 1); ++rep) {
            const BenchRow row = bench_run(problem, options, err);
            if (rep == 0 || row.wall_ms < best.wall_ms) best = row;
          }
          emit(a, options, best, std::to_string(n));
        }
      }
    }
  }
  return kExitOk;
}

int cmd_generate(const GenFlags& gen, std::int64_t budget, std::uint64_t seed,
                 std::ostream& out) {
  ModelFile file;
  if (gen.generator == "xor") {
    DiscreteNetwork net = make_xor();
    file = ModelFile{net, std::vector<std::int64_t>(net.size(), 1), budget};
  } else if (gen.generator == "trap") {
    file = to_model_file(make_budget_trap());
  } else if (gen.generator == "maxcover" && !gen.instance.empty()) {
    std::ifstream in(gen.instance);
    if (!in) throw ModelError("cannot read " + gen.instance);
    std::stringstream buffer;
    buffer << in.rdbuf();
    file = to_model_file(make_max_cover(parse_max_cover(buffer.str())));
  } else {
    file = to_model_file(gen.make(seed, budget));
  }
  out << serialize_model(file);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Near-optimal informative subset selection in discrete Bayesian networks",
               "infosel"};
  app.require_subcommand(1);

  RunFlags select_flags;
  std::string output = "json";
  auto* select = app.add_subcommand("select", "Select a subset and print the run record");
  select_flags.add_to(select, true);
  select->add_option("--output", output, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  RunFlags curve_flags;
  bool eval_prediction = false;
  std::size_t trials = 1000;
  auto* curve = app.add_subcommand("curve", "Print the greedy gain curve as CSV");
  curve_flags.add_to(curve, false);
  curve->add_flag("--eval-prediction", eval_prediction,
                  "Add the mean misclassification rate of the targets");
  curve->add_option("--trials", trials, "Prediction trials per prefix");

  RunFlags bound_flags;
  std::string candidate_set;
  auto* bound = app.add_subcommand("bound", "Runtime guarantee for another selection");
  bound_flags.add_to(bound, true);
  bound->add_option("--candidate-set", candidate_set, "Comma-separated ids of the other selection")
      ->required();

  GenFlags bench_gen;
  BenchFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "Benchmark sweep over generated instances, as CSV");
  bench_gen.add_to(bench, false);
  bench->add_option("--instances", bench_flags.instances, "Instances per cell");
  bench_flags.seed_opt = bench->add_option("--seed", bench_flags.seed, "Sweep seed");
  bench->add_option("--budgets", bench_flags.budgets, "Comma-separated budgets");
  bench->add_option("--algorithms", bench_flags.algorithms, "Comma-separated algorithms");
  bench->add_option("--objective", bench_flags.objective, "entropy or infogain")
      ->check(CLI::IsMember({"entropy", "infogain"}));
  bench->add_option("--mode", bench_flags.mode, "exact or sampled")
      ->check(CLI::IsMember({"exact", "sampled"}));
  bench->add_option("--epsilon", bench_flags.epsilon, "Sampled-run epsilon");
  bench->add_option("--delta", bench_flags.delta, "Sampled-run delta");
  bench->add_option("--costs", bench_flags.costs, "Random costs LOW,HIGH (default unit)");
  bench->add_option("--d", bench_flags.depth, "Partial enumeration depth")->check(CLI::Range(1, 8));
  bench->add_option("--sweep", bench_flags.sweep, "quality or samples")
      ->check(CLI::IsMember({"quality", "samples"}));
  bench->add_option("--samples", bench_flags.samples, "Samples sweep: comma-separated counts");
  bench->add_option("--repeats", bench_flags.repeats, "Samples sweep: repetitions per count");
  bench->add_option("--threads", bench_flags.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  bench->add_flag("--no-guarantee", bench_flags.no_guarantee, "Allow uncertified runs");

  GenFlags gen_flags;
  std::int64_t gen_budget = 3;
  std::uint64_t gen_seed = 0;
  auto* generate = app.add_subcommand("generate", "Write a generated model as JSON");
  gen_flags.add_to(generate, true);
  generate->add_option("--budget", gen_budget, "Budget stored in the model");
  auto* gen_seed_opt = generate->add_option("--seed", gen_seed, "Generator seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = echo(args);
  try {
    if (*select) return cmd_select(select_flags, output, command, out);
    if (*curve) return cmd_curve(curve_flags, eval_prediction, trials, out);
    if (*bound) return cmd_bound(bound_flags, candidate_set, command, out);
    if (*bench) return cmd_bench(bench_gen, bench_flags, out, err);
    if (*generate) return cmd_generate(gen_flags, gen_budget, resolve_seed(gen_seed_opt, gen_seed), out);
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const GuaranteeRefused& e) {
    err << "refused: " << e.what() << '\n';
    return kExitGuaranteeRefused;
  } catch (const ModelError& e) {
    err << "model error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace infosel
