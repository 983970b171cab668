#include "shadowsim/oracle.hpp"

#include <cmath>
#include <string>

#include "shadowsim/expm.hpp"

namespace shadowsim {

void check_oracle_dim(Eigen::Index dim) {
  if (dim > dense_cutoff()) {
    throw CapacityError("brute-force oracle: Hilbert-space dimension " +
                        std::to_string(dim) + " exceeds dense cutoff " +
                        std::to_string(dense_cutoff()));
  }
}

Vector evolve_full(const Matrix& h, const Vector& psi0, double t) {
  require(h.rows() == psi0.size(), "oracle: Hamiltonian/state size mismatch");
  check_oracle_dim(h.rows());
  return dense_expm(h, t) * psi0;
}

Matrix evolve_full_density(const Matrix& h, const Matrix& rho0, double t) {
  require(h.rows() == rho0.rows() && h.cols() == rho0.cols(),
          "oracle: Hamiltonian/density size mismatch");
  check_oracle_dim(h.rows());
  const Matrix u = dense_expm(h, t);
  return u * rho0 * u.adjoint();
}

Vector expectations(const Matrix& rho, const OperatorSet& set) {
  require(rho.rows() == set.dim() && rho.cols() == set.dim(),
          "oracle: density matrix does not match operator set dimension");
  Vector out(set.size());
  for (int m = 0; m < set.size(); ++m) out[m] = (rho * set.ops[m]).trace();
  return out;
}

Vector expectations_pure(const Vector& psi, const OperatorSet& set) {
  require(psi.size() == set.dim(),
          "oracle: state does not match operator set dimension");
  Vector out(set.size());
  for (int m = 0; m < set.size(); ++m) out[m] = psi.dot(set.ops[m] * psi);
  return out;
}

double purity(const Matrix& rho) { return (rho * rho).trace().real(); }

Vector vec_state(const Matrix& rho) {
  const double scale = std::sqrt(purity(rho));
  require(scale > 1e-12, "vectorize: density matrix has vanishing purity");
  Vector out(rho.rows() * rho.cols());
  for (Eigen::Index j = 0; j < rho.rows(); ++j) {
    for (Eigen::Index k = 0; k < rho.cols(); ++k) {
      out[j * rho.cols() + k] = rho(j, k) / scale;
    }
  }
  return out;
}

Vector vec_state_pure(const Vector& psi) {
  Matrix rho = psi * psi.adjoint();
  rho /= psi.squaredNorm();
  return vec_state(rho);
}

ShadowState shadow_from_state(const Vector& psi, const OperatorSet& set) {
  return shadow_from_expectations(set.labels, expectations_pure(psi, set));
}

ShadowState shadow_from_density(const Matrix& rho, const OperatorSet& set) {
  return shadow_from_expectations(set.labels, expectations(rho, set));
}

}  // namespace shadowsim
