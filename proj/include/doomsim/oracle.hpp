#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "doomsim/cnf.hpp"

namespace doomsim {

/// Multi-controlled X. Each control is (qubit index, polarity): polarity 1
/// fires on |1>, polarity 0 on |0>. An empty control list is an
/// unconditional X.
struct ReversibleGate {
  std::vector<std::pair<int, int>> controls;
  int target = 0;
};

/// Reversible verification circuit. Qubit layout:
///   [0, n_solution)                       solution register S
///   [n_solution, n_solution + n_scratch)  per-clause scratch
///   result_index (last qubit)             result qubit y
/// On basis input |s, 0...0, y> the circuit outputs |s, 0...0, y ^ f(s)>.
struct ReversibleCircuit {
  int n_solution = 0;
  int n_scratch = 0;
  int result_index = 0;
  std::vector<ReversibleGate> gates;

  int total_qubits() const { return n_solution + n_scratch + 1; }
};

/// Compile a formula into the verification circuit. One scratch qubit per
/// clause: an MCX controlled on the falsifying value of every literal
/// computes the clause's negation into scratch, an X turns that into the
/// clause value, a final MCX over all scratch qubits writes the conjunction
/// into y, then the clause steps run in reverse to restore scratch.
/// Tautological clauses short-circuit to a bare X on their scratch qubit;
/// repeated literals are deduplicated. A clause-free formula compiles to a
/// single X on y. Gate count <= 2(m + m) + 1.
ReversibleCircuit compile(const CnfFormula& formula);

/// Classical permutation semantics: apply each gate in order to a basis
/// bit string (bit i = qubit i). Used for testing and for the efficient
/// statevector path.
std::vector<bool> apply_basis(const ReversibleCircuit& circuit, const std::vector<bool>& basis);

/// Same action on a packed basis label (qubit 0 = most significant bit of
/// a total_qubits()-bit label).
std::uint64_t apply_basis_index(const ReversibleCircuit& circuit, std::uint64_t basis);

struct GateReport {
  std::map<int, int> by_control_arity;
  int total = 0;
};

GateReport gate_report(const ReversibleCircuit& circuit);

/// One gate per line, 'MCX [q:pol ...] -> target', after a header line
/// 'qubits n_solution n_scratch result_index'.
std::string dump_circuit(const ReversibleCircuit& circuit);

} // namespace doomsim
