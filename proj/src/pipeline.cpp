#include "doomsim/pipeline.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "doomsim/errors.hpp"
#include "doomsim/oracle.hpp"

namespace doomsim {

namespace {

constexpr int kMaxPipelineVars = 24;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double uniform_unit(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

} // namespace

SliceStates slice_states(const RunConfig& config) {
  const int n = config.formula.num_vars;
  if (n < 1 || n > kMaxPipelineVars)
    throw std::invalid_argument("num_vars outside simulator guard [1, 24]");
  config.observer.validate();

  const ReversibleCircuit circuit = compile(config.formula);
  const int scratch_and_y = circuit.n_scratch + 1;

  SliceStates slices;
  slices.psi_A = tensor(uniform_superposition(n), PureState::zero_state(1));

  // push each |s, 0, 0> through the oracle's permutation
  slices.psi_B = PureState::zero_state(n + 1);
  slices.psi_B.amplitudes.assign(slices.psi_B.dim(), cplx{});
  const double amp = std::pow(2.0, -n / 2.0);
  const std::uint64_t scratch_mask = ((std::uint64_t{1} << circuit.n_scratch) - 1) << 1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const std::uint64_t out = apply_basis_index(circuit, s << scratch_and_y);
    if (out & scratch_mask) throw std::logic_error("oracle left scratch qubits dirty");
    if ((out >> scratch_and_y) != s) throw std::logic_error("oracle moved the solution register");
    slices.psi_B.amplitudes[(s << 1) | (out & 1u)] = amp;
  }

  slices.sigma_C = anti_controlled_doomsday(slices.psi_B, config.observer);
  double branch_mass = 0.0;
  for (const auto& branch : slices.sigma_C.branches) branch_mass += branch.sa_state.norm_squared();
  slices.norms = {slices.psi_A.norm_squared(), slices.psi_B.norm_squared(), branch_mass};
  return slices;
}

Assignment measure_solution(const PureState& alive_state, std::mt19937_64& rng) {
  const double total = alive_state.norm_squared();
  if (total < 1e-15) throw std::invalid_argument("cannot measure a zero-norm state");
  const double u = uniform_unit(rng) * total;
  double cumulative = 0.0;
  std::uint64_t picked = alive_state.dim() - 1;
  for (std::uint64_t i = 0; i < alive_state.dim(); ++i) {
    cumulative += std::norm(alive_state.amplitudes[i]);
    if (u < cumulative) {
      picked = i;
      break;
    }
  }
  if (!(picked & 1u)) throw std::logic_error("measured a branch with a dead ancilla");
  return Assignment::from_index(picked >> 1, alive_state.num_qubits - 1);
}

SolutionReport run_doomsday(const RunConfig& config) {
  if (config.mode != RunMode::postselect)
    throw std::invalid_argument("run_doomsday requires postselect mode");
  const SliceStates slices = slice_states(config);
  auto [alive_state, p_alive] = postselect_alive(slices.sigma_C);

  std::mt19937_64 rng(splitmix64(config.seed));
  SolutionReport report;
  report.solution = measure_solution(alive_state, rng);
  report.verified = evaluate(config.formula, report.solution);
  if (report.verified != 1) throw std::logic_error("measured solution failed verification");
  report.p_alive = p_alive;
  report.gate_total = gate_report(compile(config.formula)).total;
  report.slice_norms = slices.norms;
  return report;
}

MonteCarloReport monte_carlo(const RunConfig& config) {
  if (config.mode != RunMode::montecarlo)
    throw std::invalid_argument("monte_carlo requires montecarlo mode");
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");

  const SliceStates slices = slice_states(config);
  double p_alive = 0.0;
  for (const auto& branch : slices.sigma_C.branches)
    if (branch.label == BranchLabel::alive) p_alive = branch.sa_state.norm_squared();

  const int n = config.formula.num_vars;
  const std::uint64_t cap =
      config.max_runs_per_trial ? config.max_runs_per_trial : 10 * (std::uint64_t{1} << n);

  MonteCarloReport report;
  report.trials = config.trials;
  report.expected_runs =
      p_alive > 0.0 ? 1.0 / p_alive : std::numeric_limits<double>::infinity();

  double runs_sum = 0.0;
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    // independent stream per trial so aggregation order never matters
    std::mt19937_64 rng(splitmix64(config.seed ^ splitmix64(trial + 1)));
    bool survived = false;
    std::uint64_t runs = 0;
    while (runs < cap) {
      ++runs;
      if (uniform_unit(rng) < p_alive) {
        survived = true;
        break;
      }
    }
    if (survived) {
      ++report.survived_trials;
      runs_sum += static_cast<double>(runs);
      report.dead_branch_total += runs - 1;
    } else {
      report.dead_branch_total += runs; // censored: every run was a dead branch
    }
  }
  report.mean_runs_to_survival =
      report.survived_trials ? runs_sum / static_cast<double>(report.survived_trials) : 0.0;
  return report;
}

} // namespace doomsim
