// bcpp: generate, solve, and benchmark two-bar chart packing instances.
//
// Exit codes: 0 success, 2 invalid input, 3 size limit, 4 internal
// validation failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bcpp/errors.hpp"
#include "bcpp/generate.hpp"
#include "bcpp/instance_io.hpp"
#include "bcpp/render.hpp"
#include "bcpp/report.hpp"

namespace {

constexpr int kExitInvalidInput = 2;
constexpr int kExitSizeLimit = 3;
constexpr int kExitValidation = 4;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    bcpp::save_text_file(path, text);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bcpp::InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-bar chart packing: approximation algorithms and exact oracles"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  int gen_n = 0;
  std::string gen_class = "arbitrary";
  std::uint64_t gen_seed = 1;
  int gen_denominator = bcpp::kDefaultDenominator;
  std::string gen_out;
  std::string gen_name;
  gen->add_option("--n", gen_n, "Number of charts")->required();
  gen->add_option("--class", gen_class,
                  "Comma-separated classes: arbitrary, big, non-strictly-big, "
                  "monotone-nonincreasing, monotone-nondecreasing");
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--denominator", gen_denominator, "Height units per strip height");
  gen->add_option("--name", gen_name, "Instance name");
  gen->add_option("--out", gen_out, "Output instance file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Pack an instance");
  bcpp::SolveRequest request;
  std::string solve_input;
  std::string solve_out;
  std::string render_mode;
  std::string render_out;
  std::string solve_oracle;
  solve->add_option("--algo", request.algorithm, "a1 | a2 | matching | baseline")
      ->check(CLI::IsMember({"a1", "a2", "matching", "baseline"}));
  solve->add_option("--engine", request.engine, "exact | cycle-cover | cycle-cover+ls")
      ->check(CLI::IsMember({"exact", "cycle-cover", "cycle-cover+ls"}));
  solve->add_option("--input", solve_input, "Instance file")->required();
  solve->add_option("--out", solve_out, "Write the packing file here");
  solve->add_option("--render", render_mode, "ascii | svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  solve->add_option("--render-out", render_out, "Rendering destination (default stdout)");
  solve->add_option("--oracle", solve_oracle, "Also compute an optimum for the ratio")
      ->check(CLI::IsMember({"bcpp1", "bcpp1-bf", "sequence", "general"}));
  solve->add_flag("--allow-nonbig", request.allow_nonbig,
                  "Run a2 on charts without a half-height bar");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Compute an exact optimum");
  std::string oracle_mode;
  std::string oracle_input;
  std::string oracle_out;
  oracle->add_option("--mode", oracle_mode, "bcpp1 | bcpp1-bf | sequence | general")
      ->required()
      ->check(CLI::IsMember({"bcpp1", "bcpp1-bf", "sequence", "general"}));
  oracle->add_option("--input", oracle_input, "Instance file")->required();
  oracle->add_option("--out", oracle_out, "Write the optimal packing file here");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a ratio benchmark sweep");
  std::string bench_config;
  std::string bench_out;
  bool bench_timing = false;
  bench->add_option("--config", bench_config, "JSON sweep configuration")->required();
  bench->add_option("--out", bench_out, "CSV report (default stdout)");
  bench->add_flag("--timing", bench_timing, "Add a wall_ms column");

  // validate
  auto* check = app.add_subcommand("validate", "Re-validate a packing file");
  std::string check_input;
  check->add_option("--packing", check_input, "Packing file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (*gen) {
      const bcpp::Instance inst =
          bcpp::generate(gen_n, bcpp::parse_class_list(gen_class), gen_seed,
                         gen_denominator, gen_name);
      emit(gen_out, bcpp::format_instance(inst));
    } else if (*solve) {
      const bcpp::Instance inst = bcpp::load_instance_file(solve_input);
      if (!solve_oracle.empty()) request.oracle = solve_oracle;
      const bcpp::SolveOutcome outcome = bcpp::run_solve(inst, request);
      std::cout << bcpp::report_to_json(outcome.report) << '\n';
      if (!solve_out.empty()) {
        bcpp::save_text_file(
            solve_out, bcpp::format_packing({request.algorithm,
                                             outcome.report.engine, inst,
                                             outcome.packing}));
      }
      if (render_mode == "ascii") {
        emit(render_out, bcpp::render_ascii(inst, outcome.packing));
      } else if (render_mode == "svg") {
        emit(render_out, bcpp::render_svg(inst, outcome.packing));
      }
    } else if (*oracle) {
      const bcpp::Instance inst = bcpp::load_instance_file(oracle_input);
      const bcpp::OracleResult best = bcpp::run_oracle(inst, oracle_mode);
      std::cout << "mode " << oracle_mode << "\nlength " << best.optimum_length
                << "\nk1 " << best.k1 << "\nk2 " << best.k2 << "\nexplored "
                << best.explored << "\norder";
      for (const int c : best.packing.order) std::cout << ' ' << c;
      std::cout << "\noverlaps";
      for (const int t : best.packing.overlaps) std::cout << ' ' << t;
      std::cout << '\n';
      if (!oracle_out.empty()) {
        bcpp::save_text_file(oracle_out,
                             bcpp::format_packing({"oracle-" + oracle_mode,
                                                   "none", inst, best.packing}));
      }
    } else if (*bench) {
      bcpp::BenchConfig config = bcpp::parse_bench_config(read_file(bench_config));
      config.timing = config.timing || bench_timing;
      const bcpp::BenchResult result = bcpp::run_bench(config);
      std::ostringstream csv;
      bcpp::write_bench_csv(csv, result, config.timing);
      emit(bench_out, csv.str());
    } else if (*check) {
      const bcpp::PackingFile file = bcpp::load_packing_file(check_input);
      std::cout << "ok length " << bcpp::packing_length(file.packing) << '\n';
    }
  } catch (const bcpp::SizeLimitExceeded& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return kExitSizeLimit;
  } catch (const bcpp::ValidationFailure& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const bcpp::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return 0;
}
