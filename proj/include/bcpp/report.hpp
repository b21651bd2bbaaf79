#pragma once

// Solver dispatch by name, solve reports and the ratio benchmark.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bcpp/maxatsp.hpp"
#include "bcpp/model.hpp"
#include "bcpp/oracles.hpp"

namespace bcpp {

struct SolveRequest {
  std::string algorithm = "a1";  // a1 | a2 | matching | baseline
  std::string engine = "exact";  // exact | cycle-cover | cycle-cover+ls
  bool allow_nonbig = false;
  std::optional<std::string> oracle;  // bcpp1 | bcpp1-bf | sequence | general
};

struct SolveReport {
  std::string instance;
  std::string algorithm;
  std::string engine;  // "none" for algorithms that do not use one
  std::optional<Ratio> alpha;
  int n = 0;
  int length = 0;
  UnionCounts unions;
  std::optional<std::string> oracle;
  std::optional<int> oracle_length;
  std::optional<double> ratio;
  double wall_ms = 0.0;
  std::optional<std::uint64_t> seed;
};

struct SolveOutcome {
  SolveReport report;
  SequencePacking packing;
};

// Runs the algorithm, re-validates its output (ValidationFailure if it does
// not validate) and, when requested, the oracle.
SolveOutcome run_solve(const Instance& instance, const SolveRequest& request);

// Throws InvalidInput on an unknown mode.
OracleResult run_oracle(const Instance& instance, const std::string& mode);

std::string report_to_json(const SolveReport& report);
std::string format_ratio(const Ratio& r);

struct BenchRun {
  std::string algorithm;
  std::string engine;
};

struct BenchConfig {
  std::vector<int> sizes;
  std::string classes = "arbitrary";
  int trials = 1;
  std::uint64_t seed = 1;
  int denominator = kDefaultDenominator;
  std::vector<BenchRun> runs;
  std::string oracle = "none";
  bool allow_nonbig = false;
  bool timing = false;  // adds a wall_ms column; output is then not reproducible
};

// JSON object with keys sizes, class, trials, seed, denominator, runs
// ([{algo, engine}]), oracle, allow_nonbig, timing.
BenchConfig parse_bench_config(const std::string& json_text);

struct BenchAggregate {
  std::string algorithm;
  std::string engine;
  int trials = 0;
  double mean_ratio = 0.0;
  double max_ratio = 0.0;
};

struct BenchResult {
  std::vector<SolveReport> rows;  // sorted by (instance, algorithm, engine)
  std::vector<BenchAggregate> aggregates;
};

// Trials run in parallel; output does not depend on the schedule.
BenchResult run_bench(const BenchConfig& config);
void write_bench_csv(std::ostream& out, const BenchResult& result,
                     bool timing);

}  // namespace bcpp
