#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "doomsim/oracle.hpp"

namespace doomsim {

using cplx = std::complex<double>;

/// Dense statevector. Endianness is fixed once for the whole project:
/// qubit 0 is the MOST significant bit of the basis label, so basis index
/// bit for qubit q of a k-qubit state sits at position k-1-q. Subnormalized
/// states (squared norm < 1) are first-class; renormalization happens only
/// at post-selection.
struct PureState {
  int num_qubits = 0;
  std::vector<cplx> amplitudes;

  static PureState zero_state(int n);     // |0...0>
  static PureState basis_state(int n, std::uint64_t label);

  std::uint64_t dim() const { return amplitudes.size(); }
  double norm_squared() const;
  int bit_shift(int qubit) const { return num_qubits - 1 - qubit; }
};

/// Dense density matrix, row-major. Subnormalized traces are allowed in
/// intermediate values; operations that require unit trace check it.
struct DensityMatrix {
  int dim = 0;
  std::vector<cplx> entries;

  static DensityMatrix zeros(int d);
  static DensityMatrix identity(int d);
  static DensityMatrix maximally_mixed(int d);
  static DensityMatrix pure(const std::vector<cplx>& vec);
  static DensityMatrix diagonal(const std::vector<double>& weights);

  cplx& at(int r, int c) { return entries[static_cast<std::size_t>(r) * dim + c]; }
  const cplx& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * dim + c]; }
  cplx trace() const;
  bool is_hermitian(double tol = 1e-12) const;
};

enum class BranchLabel { alive, dead };

/// One outcome sector of the global state: a subnormalized pure state on
/// S (x) A carrying the branch weight, with a unit-trace observer factor.
struct Branch {
  BranchLabel label;
  PureState sa_state;
  DensityMatrix observer;
};

/// Structured global state after the doomsday step: branch weights sum to 1.
/// Kept factorized so memory stays O(2^n + d^2) instead of O((2^n d)^2).
struct BranchedState {
  std::vector<Branch> branches;
};

/// H^(x)n |0...0>: every amplitude 2^(-n/2). Guard: 1 <= n <= 26.
PureState uniform_superposition(int n);

/// Permute amplitudes per the circuit's basis action. Norm preserved exactly.
PureState apply_circuit_to_state(const ReversibleCircuit& circuit, const PureState& state);

/// Zero every amplitude where `qubit` != value; returns the subnormalized
/// state and the squared mass of the kept sector. No renormalization.
std::pair<PureState, double> project(const PureState& state, int qubit, int value);

PureState tensor(const PureState& a, const PureState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Materialize sum_b |sa_b><sa_b| (x) observer_b as one dense matrix.
/// Guarded to total dimension <= 4096; a small-instance test oracle, not the
/// production representation.
DensityMatrix dense_sigma(const BranchedState& branched);

/// Trace out the trailing observer factor of a (sa_dim * obs_dim) matrix.
DensityMatrix partial_trace_observer(const DensityMatrix& joint, int sa_dim, int obs_dim);

/// Fidelity between unit-trace states where at least one argument is pure:
/// F = <psi|other|psi> = Re tr(a b). The general mixed-mixed case is out of
/// scope and rejected.
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

/// Amplitude rows 'index bitstring re im', 17 significant digits.
std::string dump_state(const PureState& state);

} // namespace doomsim
