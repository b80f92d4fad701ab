#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "doomsim/channel.hpp"
#include "doomsim/cnf.hpp"
#include "doomsim/quantum.hpp"

namespace doomsim {

enum class RunMode { postselect, montecarlo };

struct RunConfig {
  CnfFormula formula;
  ObserverRegister observer = ObserverRegister::defaults();
  std::uint64_t seed = 0;
  RunMode mode = RunMode::postselect;
  std::uint64_t trials = 1000;          // montecarlo only
  std::uint64_t max_runs_per_trial = 0; // 0 = default 10 * 2^n
};

/// The three marked cuts of the circuit. psi_A and psi_B live on S (x) A
/// (n+1 qubits, ancilla last); scratch is verified zero and dropped before
/// slice B is reported.
struct SliceStates {
  PureState psi_A;
  PureState psi_B;
  BranchedState sigma_C;
  std::array<double, 3> norms; // squared norms at A, B and total branch mass at C
};

struct SolutionReport {
  Assignment solution;
  double p_alive = 0.0;
  int verified = 0;
  int gate_total = 0;
  std::array<double, 3> slice_norms{};
};

struct MonteCarloReport {
  std::uint64_t trials = 0;
  double mean_runs_to_survival = 0.0; // over survived trials only
  std::uint64_t dead_branch_total = 0;
  double expected_runs = 0.0; // 2^n / m, analytic
  std::uint64_t survived_trials = 0;
};

/// Assemble slices A, B, C. The oracle is applied by mapping the 2^n basis
/// inputs through its permutation, so no 2^(n+m+1) statevector is ever
/// materialized.
SliceStates slice_states(const RunConfig& config);

/// Full post-selected run: build slices, condition on surviving observers,
/// measure S. The emitted solution is re-checked classically; the report
/// refuses to exist otherwise. Throws AllObserversDead on unsatisfiable input.
SolutionReport run_doomsday(const RunConfig& config);

/// Sample a basis label from |amplitude|^2 of a normalized alive state and
/// return its solution bits. Deterministic for a given engine state.
Assignment measure_solution(const PureState& alive_state, std::mt19937_64& rng);

/// No-post-selection mode: each trial repeats Bernoulli(p) runs until the
/// alive outcome or the cap, with p taken from the quantum alive-branch
/// mass. Counts the dead branches that post-selection would have hidden.
MonteCarloReport monte_carlo(const RunConfig& config);

} // namespace doomsim
