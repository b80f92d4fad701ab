#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "doomsim/quantum.hpp"

namespace doomsim {

/// Observer sector: dimension, Hamiltonian spectrum (plus optional
/// eigenbasis; identity means H is diagonal), inverse temperature, and the
/// pre-doomsday observer state. Supplying H by spectral data sidesteps any
/// need for an eigensolver.
struct ObserverRegister {
  int dim = 2;
  std::vector<double> energies = {0.0, 1.0};
  std::optional<DensityMatrix> eigenbasis; // d x d unitary, columns = eigenvectors
  double beta = 1.0;
  DensityMatrix initial = DensityMatrix::pure({1.0, 0.0}); // |ground><ground|

  static ObserverRegister defaults() { return {}; }
  void validate() const; // throws ParseError on inconsistent fields
};

/// Kraus operators of a CPTP map: sum_a K_a^dag K_a = I.
struct KrausSet {
  std::vector<DensityMatrix> ops;
};

/// Thermal state e^(-beta H) / Tr[e^(-beta H)], computed with max-shifted
/// exponents so large beta cannot overflow. Conjugated by the eigenbasis
/// when one is supplied.
DensityMatrix gibbs_state(const ObserverRegister& obs);

/// Kraus set of the constant (replacer) channel sending every unit-trace
/// state to omega: K_(i,j) = sqrt(w_i) |w_i><j|. This overload requires a
/// diagonal omega (weights on the diagonal).
KrausSet replacer_kraus(const DensityMatrix& omega);

/// Replacer channel onto sum_i w_i |v_i><v_i| with |v_i> the columns of
/// `basis`. Covers the non-diagonal case without an eigensolver.
KrausSet replacer_kraus(const std::vector<double>& weights, const DensityMatrix& basis);

/// sum_a K_a rho K_a^dag.
DensityMatrix apply_kraus(const KrausSet& kraus, const DensityMatrix& rho);

/// The doomsday step: apply the replacer channel to the observers,
/// anti-controlled on the ancilla (the last qubit of psi_B). Kraus form of
/// the joint map is {P_1 (x) I} u {P_0 (x) K_a}, so the output factorizes
/// into exactly two branches:
///   alive: (P_1 psi_B, initial observer state)  — channel did not fire
///   dead:  (P_0 psi_B, gibbs state)             — everyone is thermal now
/// Ancilla coherences are destroyed; S coherences inside each sector survive.
BranchedState anti_controlled_doomsday(const PureState& psi_B, const ObserverRegister& obs);

/// Condition on surviving observers: renormalized alive branch plus its
/// pre-selection probability m/2^n. Throws AllObserversDead when that
/// probability is numerically zero.
std::pair<PureState, double> postselect_alive(const BranchedState& sigma_C);

/// Single-qubit cat-state demo a|0>|dead> + b|1>|alive| run through the same
/// channel machinery; returns (p_dead, p_alive) = (|a|^2, |b|^2).
std::pair<double, double> demo_cat(cplx a, cplx b, const ObserverRegister& obs);

/// Observer spec file (JSON): fields `dim`, `energies`, `beta`, optional
/// `eigenbasis` (row-major [re, im] pairs), optional `initial`
/// ("ground" | "gibbs" | explicit row-major matrix).
ObserverRegister load_observer_spec(std::istream& in);
ObserverRegister load_observer_spec_file(const std::string& path);

} // namespace doomsim
