#pragma once

#include "shadowsim/sparse.hpp"
#include "shadowsim/types.hpp"

namespace shadowsim {

// Unitary exp(-i t h) of a Hermitian matrix via eigendecomposition.
// Refuses non-Hermitian input (defect > tol) and dim > dense_cutoff().
Matrix dense_expm(const Matrix& h, double t, double tol = 1e-12);

// w = exp(-i t h) v for Hermitian sparse h, without forming the
// exponential: Lanczos with full reorthogonalization, adaptive subspace
// size and time-step splitting. Target accuracy ~tol * ||v||.
Vector expm_action(const SparseMatrix& h, const Vector& v, double t,
                   double tol = 1e-10);

// Frobenius norm and Kronecker product helpers used throughout.
double frobenius(const Matrix& a);
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace shadowsim
