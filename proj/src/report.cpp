#include "bcpp/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <ostream>
#include <tuple>

#include "bcpp/algorithms.hpp"
#include "bcpp/errors.hpp"
#include "bcpp/generate.hpp"
#include "bcpp/matching.hpp"
#include "json.hpp"

namespace bcpp {
namespace {

using Clock = std::chrono::steady_clock;

SequencePacking dispatch(const Instance& instance, const SolveRequest& req,
                         const AtspEngine* engine) {
  if (req.algorithm == "a1") return algorithm_a1(instance, *engine);
  if (req.algorithm == "a2") {
    return algorithm_a2(instance, *engine, {.allow_nonbig = req.allow_nonbig});
  }
  if (req.algorithm == "matching") {
    if (instance.size() == 1) return SequencePacking{{0}, {}};
    return packing_of_matching(max_cardinality_matching(build_g2(instance)),
                               instance);
  }
  if (req.algorithm == "baseline") return baseline_no_union(instance);
  throw InvalidInput("unknown algorithm '" + req.algorithm + "'");
}

bool uses_engine(const std::string& algorithm) {
  return algorithm == "a1" || algorithm == "a2";
}

std::string fixed6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

std::string format_ratio(const Ratio& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

OracleResult run_oracle(const Instance& instance, const std::string& mode) {
  if (mode == "bcpp1") return oracle_bcpp1(instance);
  if (mode == "bcpp1-bf") return oracle_bcpp1_bruteforce(instance);
  if (mode == "sequence") return oracle_sequence(instance);
  if (mode == "general") return oracle_general(instance);
  throw InvalidInput("unknown oracle mode '" + mode + "'");
}

SolveOutcome run_solve(const Instance& instance, const SolveRequest& request) {
  std::optional<AtspEngine> engine;
  if (uses_engine(request.algorithm)) engine = make_engine(request.engine);

  const auto start = Clock::now();
  SolveOutcome out;
  out.packing = dispatch(instance, request, engine ? &*engine : nullptr);
  const auto stop = Clock::now();

  const ValidationResult check = validate(instance, out.packing);
  if (!check.ok()) {
    throw ValidationFailure(request.algorithm + " produced an invalid packing: " +
                            check.describe());
  }

  SolveReport& r = out.report;
  r.instance = instance.name();
  r.algorithm = request.algorithm;
  r.engine = engine ? engine->name : "none";
  if (engine) r.alpha = engine->guarantee;
  r.n = instance.size();
  r.length = packing_length(out.packing);
  r.unions = count_unions(out.packing);
  r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  if (request.oracle) {
    const OracleResult best = run_oracle(instance, *request.oracle);
    r.oracle = *request.oracle;
    r.oracle_length = best.optimum_length;
    r.ratio = static_cast<double>(r.length) / best.optimum_length;
  }
  return out;
}

std::string report_to_json(const SolveReport& r) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance;
  j["algorithm"] = r.algorithm;
  j["engine"] = r.engine;
  j["alpha"] = r.alpha ? nlohmann::ordered_json(format_ratio(*r.alpha))
                       : nlohmann::ordered_json(nullptr);
  j["n"] = r.n;
  j["length"] = r.length;
  j["k0"] = r.unions.k0;
  j["k1"] = r.unions.k1;
  j["k2"] = r.unions.k2;
  if (r.oracle) {
    j["oracle"] = *r.oracle;
    j["oracle_length"] = *r.oracle_length;
    j["ratio"] = *r.ratio;
  }
  j["wall_ms"] = r.wall_ms;
  if (r.seed) j["seed"] = *r.seed;
  return j.dump(2);
}

BenchConfig parse_bench_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bench config: ") + e.what());
  }
  BenchConfig c;
  try {
    c.sizes = j.at("sizes").get<std::vector<int>>();
    c.classes = j.value("class", c.classes);
    c.trials = j.value("trials", c.trials);
    c.seed = j.value("seed", c.seed);
    c.denominator = j.value("denominator", c.denominator);
    c.oracle = j.value("oracle", c.oracle);
    c.allow_nonbig = j.value("allow_nonbig", c.allow_nonbig);
    c.timing = j.value("timing", c.timing);
    for (const auto& run : j.at("runs")) {
      c.runs.push_back({run.at("algo").get<std::string>(),
                        run.value("engine", std::string("exact"))});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bench config: ") + e.what());
  }
  if (c.sizes.empty() || c.runs.empty() || c.trials < 1) {
    throw InvalidInput("bench config needs sizes, runs and trials >= 1");
  }
  for (const int n : c.sizes) {
    if (n < 1) throw InvalidInput("bench sizes must be positive");
  }
  // Fail fast on bad names before spending time on trials.
  parse_class_list(c.classes);
  for (const BenchRun& run : c.runs) {
    if (uses_engine(run.algorithm)) make_engine(run.engine);
  }
  return c;
}

BenchResult run_bench(const BenchConfig& config) {
  const std::set<ChartClass> classes = parse_class_list(config.classes);
  struct Task {
    int n;
    int trial;
  };
  std::vector<Task> tasks;
  for (const int n : config.sizes) {
    for (int t = 0; t < config.trials; ++t) tasks.push_back({n, t});
  }
  std::vector<std::vector<SolveReport>> per_task(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(tasks.size()); ++k) {
    try {
      const Task task = tasks[k];
      const std::uint64_t seed = mix_seed(
          config.seed ^ mix_seed(static_cast<std::uint64_t>(task.n) * 1000003u +
                                 static_cast<std::uint64_t>(task.trial)));
      char name[48];
      std::snprintf(name, sizeof name, "n%03d-t%04d", task.n, task.trial);
      const Instance instance =
          generate(task.n, classes, seed, config.denominator, name);
      std::optional<OracleResult> best;
      if (config.oracle != "none") best = run_oracle(instance, config.oracle);
      for (const BenchRun& run : config.runs) {
        SolveRequest req;
        req.algorithm = run.algorithm;
        req.engine = run.engine;
        req.allow_nonbig = config.allow_nonbig;
        SolveReport r = run_solve(instance, req).report;
        r.seed = seed;
        if (best) {
          r.oracle = config.oracle;
          r.oracle_length = best->optimum_length;
          r.ratio = static_cast<double>(r.length) / best->optimum_length;
        }
        per_task[k].push_back(std::move(r));
      }
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  BenchResult result;
  for (auto& rows : per_task) {
    for (auto& r : rows) result.rows.push_back(std::move(r));
  }
  std::sort(result.rows.begin(), result.rows.end(),
            [](const SolveReport& x, const SolveReport& y) {
              return std::tie(x.instance, x.algorithm, x.engine) <
                     std::tie(y.instance, y.algorithm, y.engine);
            });

  std::map<std::pair<std::string, std::string>, BenchAggregate> agg;
  for (const SolveReport& r : result.rows) {
    BenchAggregate& a = agg[{r.algorithm, r.engine}];
    a.algorithm = r.algorithm;
    a.engine = r.engine;
    ++a.trials;
    if (r.ratio) {
      a.mean_ratio += *r.ratio;
      a.max_ratio = std::max(a.max_ratio, *r.ratio);
    }
  }
  for (auto& [key, a] : agg) {
    a.mean_ratio /= a.trials;
    result.aggregates.push_back(a);
  }
  return result;
}

void write_bench_csv(std::ostream& out, const BenchResult& result,
                     bool timing) {
  out << "kind,instance,n,seed,algorithm,engine,alpha,length,k0,k1,k2,"
         "oracle,oracle_length,ratio,trials,mean_ratio,max_ratio";
  if (timing) out << ",wall_ms";
  out << '\n';
  const bool has_oracle = !result.rows.empty() && result.rows.front().oracle;
  for (const SolveReport& r : result.rows) {
    out << "trial," << r.instance << ',' << r.n << ','
        << (r.seed ? std::to_string(*r.seed) : "") << ',' << r.algorithm
        << ',' << r.engine << ',' << (r.alpha ? format_ratio(*r.alpha) : "")
        << ',' << r.length << ',' << r.unions.k0 << ',' << r.unions.k1 << ','
        << r.unions.k2 << ',' << r.oracle.value_or("") << ','
        << (r.oracle_length ? std::to_string(*r.oracle_length) : "") << ','
        << (r.ratio ? fixed6(*r.ratio) : "") << ",,,";
    if (timing) out << ',' << fixed6(r.wall_ms);
    out << '\n';
  }
  for (const BenchAggregate& a : result.aggregates) {
    out << "aggregate,,,," << a.algorithm << ',' << a.engine << ",,,,,,,,,"
        << a.trials << ',' << (has_oracle ? fixed6(a.mean_ratio) : "") << ','
        << (has_oracle ? fixed6(a.max_ratio) : "");
    if (timing) out << ',';
    out << '\n';
  }
}

}  // namespace bcpp
