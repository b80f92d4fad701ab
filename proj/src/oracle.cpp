#include "doomsim/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace doomsim {

namespace {

// Controls for "every literal of this clause is falsified". Returns false
// for a tautological clause (x and not-x both present), which can never be
// all-falsified.
bool falsifying_controls(const std::vector<int>& clause,
                         std::vector<std::pair<int, int>>& controls) {
  controls.clear();
  for (int lit : clause) {
    const int qubit = std::abs(lit) - 1;
    const int polarity = lit > 0 ? 0 : 1; // literal is false when var has this value
    auto existing = std::find_if(controls.begin(), controls.end(),
                                 [qubit](const auto& c) { return c.first == qubit; });
    if (existing != controls.end()) {
      if (existing->second != polarity) return false; // tautology
      continue;                                       // duplicate literal
    }
    controls.emplace_back(qubit, polarity);
  }
  return true;
}

} // namespace

ReversibleCircuit compile(const CnfFormula& formula) {
  ReversibleCircuit circuit;
  circuit.n_solution = formula.num_vars;
  circuit.n_scratch = static_cast<int>(formula.clauses.size());
  circuit.result_index = circuit.n_solution + circuit.n_scratch;

  if (formula.clauses.empty()) {
    // f is identically 1
    circuit.gates.push_back({{}, circuit.result_index});
    return circuit;
  }

  std::vector<ReversibleGate> compute;
  std::vector<std::pair<int, int>> controls;
  for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
    const int scratch = circuit.n_solution + static_cast<int>(j);
    if (falsifying_controls(formula.clauses[j], controls))
      compute.push_back({controls, scratch});
    compute.push_back({{}, scratch}); // scratch now holds the clause value
  }

  circuit.gates = compute;

  ReversibleGate conjunction;
  conjunction.target = circuit.result_index;
  for (int j = 0; j < circuit.n_scratch; ++j)
    conjunction.controls.emplace_back(circuit.n_solution + j, 1);
  circuit.gates.push_back(std::move(conjunction));

  // uncompute: MCX gates are self-inverse, so the reversed prefix restores scratch
  circuit.gates.insert(circuit.gates.end(), compute.rbegin(), compute.rend());
  return circuit;
}

std::vector<bool> apply_basis(const ReversibleCircuit& circuit, const std::vector<bool>& basis) {
  if (static_cast<int>(basis.size()) != circuit.total_qubits())
    throw std::invalid_argument("basis length does not match circuit qubit count");
  std::vector<bool> bits = basis;
  for (const auto& gate : circuit.gates) {
    bool fire = true;
    for (const auto& [qubit, polarity] : gate.controls) {
      if (bits[static_cast<std::size_t>(qubit)] != (polarity == 1)) {
        fire = false;
        break;
      }
    }
    if (fire) bits[static_cast<std::size_t>(gate.target)] = !bits[static_cast<std::size_t>(gate.target)];
  }
  return bits;
}

std::uint64_t apply_basis_index(const ReversibleCircuit& circuit, std::uint64_t basis) {
  const int k = circuit.total_qubits();
  std::uint64_t bits = basis;
  for (const auto& gate : circuit.gates) {
    bool fire = true;
    for (const auto& [qubit, polarity] : gate.controls) {
      if (((bits >> (k - 1 - qubit)) & 1u) != static_cast<std::uint64_t>(polarity)) {
        fire = false;
        break;
      }
    }
    if (fire) bits ^= std::uint64_t{1} << (k - 1 - gate.target);
  }
  return bits;
}

GateReport gate_report(const ReversibleCircuit& circuit) {
  GateReport report;
  for (const auto& gate : circuit.gates) ++report.by_control_arity[static_cast<int>(gate.controls.size())];
  report.total = static_cast<int>(circuit.gates.size());
  return report;
}

std::string dump_circuit(const ReversibleCircuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.n_solution << ' ' << circuit.n_scratch << ' '
      << circuit.result_index << '\n';
  for (const auto& gate : circuit.gates) {
    out << "MCX [";
    for (std::size_t i = 0; i < gate.controls.size(); ++i) {
      if (i) out << ' ';
      out << gate.controls[i].first << ':' << gate.controls[i].second;
    }
    out << "] -> " << gate.target << '\n';
  }
  return out.str();
}

} // namespace doomsim
