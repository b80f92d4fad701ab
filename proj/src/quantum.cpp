#include "doomsim/quantum.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "doomsim/kernels.hpp"

namespace doomsim {

namespace {
constexpr int kMaxQubits = 26;
constexpr int kMaxDenseDim = 4096;
} // namespace

PureState PureState::zero_state(int n) { return basis_state(n, 0); }

PureState PureState::basis_state(int n, std::uint64_t label) {
  if (n < 0 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
  PureState s;
  s.num_qubits = n;
  s.amplitudes.assign(std::uint64_t{1} << n, cplx{});
  s.amplitudes[label] = 1.0;
  return s;
}

double PureState::norm_squared() const { return kernels::norm_squared(amplitudes); }

DensityMatrix DensityMatrix::zeros(int d) {
  DensityMatrix m;
  m.dim = d;
  m.entries.assign(static_cast<std::size_t>(d) * d, cplx{});
  return m;
}

DensityMatrix DensityMatrix::identity(int d) {
  DensityMatrix m = zeros(d);
  for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
  return m;
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
  DensityMatrix m = zeros(d);
  for (int i = 0; i < d; ++i) m.at(i, i) = 1.0 / d;
  return m;
}

DensityMatrix DensityMatrix::pure(const std::vector<cplx>& vec) {
  DensityMatrix m = zeros(static_cast<int>(vec.size()));
  for (int r = 0; r < m.dim; ++r)
    for (int c = 0; c < m.dim; ++c)
      m.at(r, c) = vec[static_cast<std::size_t>(r)] * std::conj(vec[static_cast<std::size_t>(c)]);
  return m;
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double>& weights) {
  DensityMatrix m = zeros(static_cast<int>(weights.size()));
  for (int i = 0; i < m.dim; ++i) m.at(i, i) = weights[static_cast<std::size_t>(i)];
  return m;
}

cplx DensityMatrix::trace() const {
  cplx t{};
  for (int i = 0; i < dim; ++i) t += at(i, i);
  return t;
}

bool DensityMatrix::is_hermitian(double tol) const {
  for (int r = 0; r < dim; ++r)
    for (int c = r; c < dim; ++c)
      if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
  return true;
}

PureState uniform_superposition(int n) {
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range [1, 26]");
  PureState s;
  s.num_qubits = n;
  s.amplitudes.assign(std::uint64_t{1} << n, std::pow(2.0, -n / 2.0));
  return s;
}

PureState apply_circuit_to_state(const ReversibleCircuit& circuit, const PureState& state) {
  if (circuit.total_qubits() != state.num_qubits)
    throw std::invalid_argument("state does not cover all circuit qubits");
  PureState out;
  out.num_qubits = state.num_qubits;
  out.amplitudes.assign(state.dim(), cplx{});
  for (std::uint64_t i = 0; i < state.dim(); ++i)
    out.amplitudes[apply_basis_index(circuit, i)] = state.amplitudes[i];
  return out;
}

std::pair<PureState, double> project(const PureState& state, int qubit, int value) {
  if (qubit < 0 || qubit >= state.num_qubits) throw std::out_of_range("qubit index out of range");
  PureState out = state;
  const double kept = kernels::project_bit(out.amplitudes, out.bit_shift(qubit), value);
  return {std::move(out), kept};
}

PureState tensor(const PureState& a, const PureState& b) {
  PureState out;
  out.num_qubits = a.num_qubits + b.num_qubits;
  if (out.num_qubits > kMaxQubits) throw std::invalid_argument("tensor product exceeds qubit guard");
  out.amplitudes.resize(a.dim() * b.dim());
  for (std::uint64_t i = 0; i < a.dim(); ++i)
    for (std::uint64_t j = 0; j < b.dim(); ++j)
      out.amplitudes[i * b.dim() + j] = a.amplitudes[i] * b.amplitudes[j];
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  DensityMatrix out = DensityMatrix::zeros(a.dim * b.dim);
  for (int ar = 0; ar < a.dim; ++ar)
    for (int ac = 0; ac < a.dim; ++ac)
      for (int br = 0; br < b.dim; ++br)
        for (int bc = 0; bc < b.dim; ++bc)
          out.at(ar * b.dim + br, ac * b.dim + bc) = a.at(ar, ac) * b.at(br, bc);
  return out;
}

DensityMatrix dense_sigma(const BranchedState& branched) {
  if (branched.branches.empty()) throw std::invalid_argument("empty branched state");
  const std::uint64_t sa_dim = branched.branches.front().sa_state.dim();
  const int obs_dim = branched.branches.front().observer.dim;
  for (const auto& branch : branched.branches)
    if (branch.sa_state.dim() != sa_dim || branch.observer.dim != obs_dim)
      throw std::invalid_argument("branch dimensions disagree");
  if (sa_dim * obs_dim > kMaxDenseDim)
    throw std::invalid_argument("dense materialization exceeds dimension guard");

  DensityMatrix out = DensityMatrix::zeros(static_cast<int>(sa_dim) * obs_dim);
  for (const auto& branch : branched.branches) {
    const auto& psi = branch.sa_state.amplitudes;
    for (std::uint64_t r = 0; r < sa_dim; ++r)
      for (std::uint64_t c = 0; c < sa_dim; ++c) {
        const cplx outer = psi[r] * std::conj(psi[c]);
        if (outer == cplx{}) continue;
        for (int br = 0; br < obs_dim; ++br)
          for (int bc = 0; bc < obs_dim; ++bc)
            out.at(static_cast<int>(r) * obs_dim + br, static_cast<int>(c) * obs_dim + bc) +=
                outer * branch.observer.at(br, bc);
      }
  }
  return out;
}

DensityMatrix partial_trace_observer(const DensityMatrix& joint, int sa_dim, int obs_dim) {
  if (joint.dim != sa_dim * obs_dim) throw std::invalid_argument("dimension mismatch");
  DensityMatrix out = DensityMatrix::zeros(sa_dim);
  for (int r = 0; r < sa_dim; ++r)
    for (int c = 0; c < sa_dim; ++c)
      for (int k = 0; k < obs_dim; ++k)
        out.at(r, c) += joint.at(r * obs_dim + k, c * obs_dim + k);
  return out;
}

namespace {

double purity(const DensityMatrix& m) {
  // tr(m^2) for Hermitian m
  double p = 0.0;
  for (int r = 0; r < m.dim; ++r)
    for (int c = 0; c < m.dim; ++c) p += std::norm(m.at(r, c));
  return p;
}

} // namespace

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");
  if (std::abs(a.trace() - 1.0) > 1e-8 || std::abs(b.trace() - 1.0) > 1e-8)
    throw std::invalid_argument("fidelity requires unit-trace states");
  if (purity(a) < 1.0 - 1e-6 && purity(b) < 1.0 - 1e-6)
    throw std::invalid_argument("fidelity supports pure-vs-mixed arguments only");
  cplx t{};
  for (int r = 0; r < a.dim; ++r)
    for (int c = 0; c < a.dim; ++c) t += a.at(r, c) * b.at(c, r);
  return t.real();
}

std::string dump_state(const PureState& state) {
  std::ostringstream out;
  char buf[64];
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    std::string bits(static_cast<std::size_t>(state.num_qubits), '0');
    for (int q = 0; q < state.num_qubits; ++q)
      if ((i >> state.bit_shift(q)) & 1u) bits[static_cast<std::size_t>(q)] = '1';
    std::snprintf(buf, sizeof buf, "%.17g %.17g", state.amplitudes[i].real(),
                  state.amplitudes[i].imag());
    out << i << ' ' << bits << ' ' << buf << '\n';
  }
  return out.str();
}

} // namespace doomsim
