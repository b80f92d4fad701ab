#include "doomsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "doomsim/errors.hpp"
#include "doomsim/kernels.hpp"
#include <nlohmann/json.hpp>

namespace doomsim {

namespace {

bool is_unitary(const DensityMatrix& u, double tol) {
  for (int r = 0; r < u.dim; ++r)
    for (int c = 0; c < u.dim; ++c) {
      cplx dot{};
      for (int k = 0; k < u.dim; ++k) dot += std::conj(u.at(k, r)) * u.at(k, c);
      if (std::abs(dot - (r == c ? cplx{1.0} : cplx{})) > tol) return false;
    }
  return true;
}

std::vector<double> gibbs_weights(const ObserverRegister& obs) {
  const double e_min = *std::min_element(obs.energies.begin(), obs.energies.end());
  std::vector<double> weights(obs.energies.size());
  double z = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    weights[i] = std::exp(-obs.beta * (obs.energies[i] - e_min));
    z += weights[i];
  }
  for (double& w : weights) w /= z;
  return weights;
}

} // namespace

void ObserverRegister::validate() const {
  if (dim < 1) throw ParseError("observer dim must be >= 1");
  if (static_cast<int>(energies.size()) != dim)
    throw ParseError("energies list must have `dim` entries");
  for (double e : energies)
    if (!std::isfinite(e)) throw ParseError("energies must be finite");
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw ParseError("beta must be finite and >= 0");
  if (eigenbasis) {
    if (eigenbasis->dim != dim) throw ParseError("eigenbasis dimension mismatch");
    if (!is_unitary(*eigenbasis, 1e-10)) throw ParseError("eigenbasis is not unitary");
  }
  if (initial.dim != dim) throw ParseError("initial state dimension mismatch");
  if (std::abs(initial.trace() - 1.0) > 1e-8) throw ParseError("initial state trace must be 1");
  if (!initial.is_hermitian(1e-10)) throw ParseError("initial state must be Hermitian");
}

DensityMatrix gibbs_state(const ObserverRegister& obs) {
  const std::vector<double> weights = gibbs_weights(obs);
  if (!obs.eigenbasis) return DensityMatrix::diagonal(weights);
  // V diag(w) V^dag
  const DensityMatrix& v = *obs.eigenbasis;
  DensityMatrix out = DensityMatrix::zeros(obs.dim);
  for (int r = 0; r < obs.dim; ++r)
    for (int c = 0; c < obs.dim; ++c)
      for (int k = 0; k < obs.dim; ++k)
        out.at(r, c) += v.at(r, k) * weights[static_cast<std::size_t>(k)] * std::conj(v.at(c, k));
  return out;
}

KrausSet replacer_kraus(const DensityMatrix& omega) {
  if (std::abs(omega.trace() - 1.0) > 1e-8)
    throw std::invalid_argument("replacer target must have unit trace");
  std::vector<double> weights(static_cast<std::size_t>(omega.dim));
  for (int i = 0; i < omega.dim; ++i) {
    weights[static_cast<std::size_t>(i)] = omega.at(i, i).real();
    for (int j = 0; j < omega.dim; ++j)
      if (i != j && std::abs(omega.at(i, j)) > 1e-12)
        throw std::invalid_argument(
            "replacer_kraus(omega) needs a diagonal omega; pass the eigenbasis explicitly");
  }
  return replacer_kraus(weights, DensityMatrix::identity(omega.dim));
}

KrausSet replacer_kraus(const std::vector<double>& weights, const DensityMatrix& basis) {
  const int d = basis.dim;
  if (static_cast<int>(weights.size()) != d) throw std::invalid_argument("weight count mismatch");
  KrausSet kraus;
  for (int i = 0; i < d; ++i) {
    const double amp = std::sqrt(weights[static_cast<std::size_t>(i)]);
    if (amp == 0.0) continue; // zero-weight levels contribute nothing
    for (int j = 0; j < d; ++j) {
      DensityMatrix k = DensityMatrix::zeros(d);
      for (int r = 0; r < d; ++r) k.at(r, j) = amp * basis.at(r, i);
      kraus.ops.push_back(std::move(k));
    }
  }
  return kraus;
}

DensityMatrix apply_kraus(const KrausSet& kraus, const DensityMatrix& rho) {
  DensityMatrix out = DensityMatrix::zeros(rho.dim);
  for (const auto& k : kraus.ops) {
    // K rho K^dag
    for (int r = 0; r < rho.dim; ++r)
      for (int c = 0; c < rho.dim; ++c) {
        cplx sum{};
        for (int a = 0; a < rho.dim; ++a)
          for (int b = 0; b < rho.dim; ++b)
            sum += k.at(r, a) * rho.at(a, b) * std::conj(k.at(c, b));
        out.at(r, c) += sum;
      }
  }
  return out;
}

BranchedState anti_controlled_doomsday(const PureState& psi_B, const ObserverRegister& obs) {
  obs.validate();
  if (std::abs(psi_B.norm_squared() - 1.0) > 1e-8)
    throw std::invalid_argument("psi_B must be normalized");
  const int ancilla = psi_B.num_qubits - 1;

  auto [alive_state, p_alive] = project(psi_B, ancilla, 1);
  auto [dead_state, p_dead] = project(psi_B, ancilla, 0);
  (void)p_alive;
  (void)p_dead;

  BranchedState sigma_C;
  sigma_C.branches.push_back({BranchLabel::alive, std::move(alive_state), obs.initial});
  sigma_C.branches.push_back({BranchLabel::dead, std::move(dead_state), gibbs_state(obs)});
  return sigma_C;
}

std::pair<PureState, double> postselect_alive(const BranchedState& sigma_C) {
  for (const auto& branch : sigma_C.branches) {
    if (branch.label != BranchLabel::alive) continue;
    const double p_alive = branch.sa_state.norm_squared();
    if (p_alive < 1e-15) throw AllObserversDead();
    PureState normalized = branch.sa_state;
    kernels::scale(normalized.amplitudes, 1.0 / std::sqrt(p_alive));
    return {std::move(normalized), p_alive};
  }
  throw AllObserversDead();
}

std::pair<double, double> demo_cat(cplx a, cplx b, const ObserverRegister& obs) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-10)
    throw std::invalid_argument("cat amplitudes must satisfy |a|^2 + |b|^2 = 1");
  PureState psi;
  psi.num_qubits = 1;
  psi.amplitudes = {a, b};
  const BranchedState sigma = anti_controlled_doomsday(psi, obs);
  double p_dead = 0.0, p_alive = 0.0;
  for (const auto& branch : sigma.branches) {
    if (branch.label == BranchLabel::dead)
      p_dead = branch.sa_state.norm_squared();
    else
      p_alive = branch.sa_state.norm_squared();
  }
  return {p_dead, p_alive};
}

namespace {

DensityMatrix parse_matrix(const nlohmann::json& rows, int dim, const char* what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim * dim)
    throw ParseError(std::string(what) + " must be a row-major list of dim*dim [re, im] pairs");
  DensityMatrix m = DensityMatrix::zeros(dim);
  for (int i = 0; i < dim * dim; ++i) {
    const auto& pair = rows[static_cast<std::size_t>(i)];
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError(std::string(what) + " entries must be [re, im] pairs");
    m.entries[static_cast<std::size_t>(i)] =
        cplx(pair[0].get<double>(), pair[1].get<double>());
  }
  return m;
}

} // namespace

ObserverRegister load_observer_spec(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("observer spec: ") + e.what());
  }
  ObserverRegister obs;
  if (!doc.contains("dim") || !doc.contains("energies") || !doc.contains("beta"))
    throw ParseError("observer spec requires fields dim, energies, beta");
  obs.dim = doc["dim"].get<int>();
  obs.energies = doc["energies"].get<std::vector<double>>();
  obs.beta = doc["beta"].get<double>();
  if (doc.contains("eigenbasis")) obs.eigenbasis = parse_matrix(doc["eigenbasis"], obs.dim, "eigenbasis");

  if (obs.dim >= 1 && static_cast<int>(obs.energies.size()) == obs.dim) {
    // ground = lowest-energy eigenvector (basis column when a basis is given)
    const int g = static_cast<int>(
        std::min_element(obs.energies.begin(), obs.energies.end()) - obs.energies.begin());
    std::vector<cplx> ground(static_cast<std::size_t>(obs.dim), cplx{});
    if (obs.eigenbasis) {
      for (int r = 0; r < obs.dim; ++r) ground[static_cast<std::size_t>(r)] = obs.eigenbasis->at(r, g);
    } else {
      ground[static_cast<std::size_t>(g)] = 1.0;
    }
    obs.initial = DensityMatrix::pure(ground);
    if (doc.contains("initial")) {
      const auto& init = doc["initial"];
      if (init.is_string()) {
        const std::string kind = init.get<std::string>();
        if (kind == "gibbs")
          obs.initial = gibbs_state(obs);
        else if (kind != "ground")
          throw ParseError("initial must be \"ground\", \"gibbs\", or an explicit matrix");
      } else {
        obs.initial = parse_matrix(init, obs.dim, "initial");
      }
    }
  }
  obs.validate();
  return obs;
}

ObserverRegister load_observer_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open observer spec file: " + path);
  return load_observer_spec(in);
}

} // namespace doomsim
