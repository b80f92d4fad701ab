#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doomsim/channel.hpp"
#include "doomsim/cnf.hpp"
#include "doomsim/quantum.hpp"

namespace doomsim::testing {

/// Random k-SAT-ish formula: m clauses of up to k literals over n variables,
/// duplicates and tautologies allowed (the compiler must cope).
inline CnfFormula random_cnf(std::mt19937_64& rng, int n, int m, int k = 3) {
  CnfFormula formula;
  formula.num_vars = n;
  std::uniform_int_distribution<int> var(1, n);
  std::uniform_int_distribution<int> len(1, k);
  std::bernoulli_distribution neg(0.5);
  for (int j = 0; j < m; ++j) {
    std::vector<int> clause;
    const int width = len(rng);
    for (int i = 0; i < width; ++i) {
      const int v = var(rng);
      clause.push_back(neg(rng) ? -v : v);
    }
    formula.clauses.push_back(std::move(clause));
  }
  return formula;
}

/// Gibbs weights computed directly from the definition (no max-shift, so
/// only usable at moderate beta; that is the point of an independent route).
inline std::vector<double> gibbs_weights_reference(const std::vector<double>& energies,
                                                   double beta) {
  std::vector<double> w(energies.size());
  double z = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(-beta * energies[i]);
    z += w[i];
  }
  for (double& x : w) x /= z;
  return w;
}

/// Dense evolution of |psi><psi| (x) rho under the joint Kraus set
/// {P_1 (x) I} u {P_0 (x) K_a}, with K_(i,j) = sqrt(w_i)|i><j| built here
/// from scratch (diagonal observer Hamiltonian). The ancilla is the last
/// (least significant) qubit of psi.
inline DensityMatrix dense_doomsday_reference(const PureState& psi, const DensityMatrix& rho,
                                              const std::vector<double>& energies, double beta) {
  const int sa_dim = static_cast<int>(psi.dim());
  const int d = rho.dim;
  const int dim = sa_dim * d;

  // joint input state
  DensityMatrix joint = DensityMatrix::zeros(dim);
  for (int r = 0; r < sa_dim; ++r)
    for (int c = 0; c < sa_dim; ++c) {
      const cplx outer = psi.amplitudes[static_cast<std::size_t>(r)] *
                         std::conj(psi.amplitudes[static_cast<std::size_t>(c)]);
      for (int br = 0; br < d; ++br)
        for (int bc = 0; bc < d; ++bc)
          joint.at(r * d + br, c * d + bc) = outer * rho.at(br, bc);
    }

  // joint Kraus matrices, built dense
  std::vector<DensityMatrix> kraus;
  {
    DensityMatrix alive = DensityMatrix::zeros(dim);
    for (int s = 0; s < sa_dim; ++s)
      if (s & 1)
        for (int b = 0; b < d; ++b) alive.at(s * d + b, s * d + b) = 1.0;
    kraus.push_back(std::move(alive));
  }
  const std::vector<double> w = gibbs_weights_reference(energies, beta);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      DensityMatrix k = DensityMatrix::zeros(dim);
      for (int s = 0; s < sa_dim; ++s)
        if (!(s & 1)) k.at(s * d + i, s * d + j) = std::sqrt(w[static_cast<std::size_t>(i)]);
      kraus.push_back(std::move(k));
    }

  DensityMatrix out = DensityMatrix::zeros(dim);
  for (const auto& k : kraus)
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        cplx sum{};
        for (int a = 0; a < dim; ++a) {
          if (k.at(r, a) == cplx{}) continue;
          for (int b = 0; b < dim; ++b) sum += k.at(r, a) * joint.at(a, b) * std::conj(k.at(c, b));
        }
        out.at(r, c) += sum;
      }
  return out;
}

inline double max_entry_diff(const DensityMatrix& a, const DensityMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    worst = std::max(worst, std::abs(a.entries[i] - b.entries[i]));
  return worst;
}

} // namespace doomsim::testing
