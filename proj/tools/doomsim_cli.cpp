#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "doomsim/errors.hpp"
#include "doomsim/oracle.hpp"
#include "doomsim/pipeline.hpp"

namespace {

using doomsim::RunConfig;
using doomsim::RunMode;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_slice_dump(const doomsim::SliceStates& slices, const std::string& which) {
  if (which == "A") {
    std::cout << "slice A\n" << doomsim::dump_state(slices.psi_A);
  } else if (which == "B") {
    std::cout << "slice B\n" << doomsim::dump_state(slices.psi_B);
  } else if (which == "C") {
    std::cout << "slice C\n";
    for (const auto& branch : slices.sigma_C.branches) {
      std::cout << "branch " << (branch.label == doomsim::BranchLabel::alive ? "alive" : "dead")
                << " weight " << format_double(branch.sa_state.norm_squared()) << '\n'
                << doomsim::dump_state(branch.sa_state);
    }
  }
}

int run(const RunConfig& config, const std::string& dump_slice, const std::string& format) {
  if (config.mode == RunMode::postselect) {
    if (!dump_slice.empty()) print_slice_dump(doomsim::slice_states(config), dump_slice);
    const doomsim::SolutionReport report = doomsim::run_doomsday(config);
    if (format == "structured") {
      nlohmann::json doc{{"solution", report.solution.to_string()},
                         {"p_alive", report.p_alive},
                         {"verified", report.verified},
                         {"gate_total", report.gate_total},
                         {"slice_norms", report.slice_norms}};
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << "solution: " << report.solution.to_string() << '\n'
                << "p_alive: " << format_double(report.p_alive) << '\n'
                << "verified: " << report.verified << '\n'
                << "gate_total: " << report.gate_total << '\n'
                << "slice_norms: " << format_double(report.slice_norms[0]) << ' '
                << format_double(report.slice_norms[1]) << ' '
                << format_double(report.slice_norms[2]) << '\n';
    }
  } else {
    const doomsim::MonteCarloReport report = doomsim::monte_carlo(config);
    if (format == "structured") {
      nlohmann::json doc{{"trials", report.trials},
                         {"mean_runs_to_survival", report.mean_runs_to_survival},
                         {"dead_branch_total", report.dead_branch_total},
                         {"expected_runs", report.expected_runs},
                         {"survived_trials", report.survived_trials}};
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << "trials: " << report.trials << '\n'
                << "mean_runs_to_survival: " << format_double(report.mean_runs_to_survival) << '\n'
                << "dead_branch_total: " << report.dead_branch_total << '\n'
                << "expected_runs: " << format_double(report.expected_runs) << '\n'
                << "survived_trials: " << report.survived_trials << '\n';
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"doomsim: post-selected NP search simulator"};

  std::string input_path;
  std::string observer_path;
  std::string mode = "postselect";
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  std::uint64_t max_runs = 0;
  std::string dump_slice;
  std::string format = "human";

  app.add_option("--input", input_path, "DIMACS CNF instance")->required();
  app.add_option("--observer", observer_path, "observer spec file (JSON)");
  app.add_option("--mode", mode, "postselect|montecarlo")
      ->check(CLI::IsMember({"postselect", "montecarlo"}));
  app.add_option("--seed", seed, "RNG seed (default 0)");
  app.add_option("--trials", trials, "Monte Carlo trials (default 1000)");
  app.add_option("--max-runs", max_runs, "runs-per-trial cap (default 10*2^n)");
  app.add_option("--dump-slice", dump_slice, "dump amplitudes at slice A|B|C")
      ->check(CLI::IsMember({"A", "B", "C"}));
  app.add_option("--format", format, "human|structured (default human)")
      ->check(CLI::IsMember({"human", "structured"}));

  try {
    app.parse(argc, argv);
    if (!dump_slice.empty() && mode != "postselect")
      throw doomsim::ParseError("--dump-slice is only valid in postselect mode");

    std::ifstream in(input_path);
    if (!in) throw doomsim::ParseError("cannot open input file: " + input_path);

    RunConfig config;
    config.formula = doomsim::parse_dimacs(in);
    if (!observer_path.empty()) config.observer = doomsim::load_observer_spec_file(observer_path);
    config.mode = mode == "postselect" ? RunMode::postselect : RunMode::montecarlo;
    config.seed = seed;
    config.trials = trials;
    config.max_runs_per_trial = max_runs;

    return run(config, dump_slice, format);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const doomsim::AllObserversDead& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
