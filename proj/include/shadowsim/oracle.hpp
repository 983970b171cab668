#pragma once

#include "shadowsim/operator_set.hpp"
#include "shadowsim/shadow.hpp"
#include "shadowsim/types.hpp"

namespace shadowsim {

// Brute-force full-Hilbert-space reference path. Deliberately dumb:
// dense matrices, eigendecomposition exponentials, direct expectation
// values. Everything here is capped by dense_cutoff().

void check_oracle_dim(Eigen::Index dim);

// exp(-i t h) |psi>.
Vector evolve_full(const Matrix& h, const Vector& psi, double t);
Matrix evolve_full_density(const Matrix& h, const Matrix& rho, double t);

Vector expectations(const Matrix& rho, const OperatorSet& set);
Vector expectations_pure(const Vector& psi, const OperatorSet& set);

double purity(const Matrix& rho);

// vec(rho)/sqrt(tr rho^2), row-major: slot (j, k) holds rho_{jk}.
// For a pure state this is psi (x) conj(psi).
Vector vec_state(const Matrix& rho);
Vector vec_state_pure(const Vector& psi);

ShadowState shadow_from_state(const Vector& psi, const OperatorSet& set);
ShadowState shadow_from_density(const Matrix& rho, const OperatorSet& set);

}  // namespace shadowsim
