#pragma once

#include <vector>

#include "shadowsim/operator_set.hpp"
#include "shadowsim/sparse.hpp"
#include "shadowsim/types.hpp"

namespace shadowsim {

// Two-time functions C_mm'(t,t') = <O_m(t) O_m'(t')> close under the same
// generator: the row index evolves with -i hs (x) 1, the column index with
// -i 1 (x) hs. Stored row-major, slot = m * M + m'.

// C(0,0) by brute force.
Matrix correlator_init_dense(const OperatorSet& set, const Matrix& rho);

// C(0,0) for the Majorana pair basis in the vacuum, by Wick contraction.
Matrix fermion_vacuum_two_point(int n);  // <c_p c_q>, 2n x 2n
Matrix fermion_vacuum_correlator_matrix(int n);

// Evolves one register of a row-major multi-register vector by its own
// generator; dims[axis] must match hs.
Vector evolve_axis(const std::vector<int>& dims, int axis,
                   const SparseMatrix& hs, Vector v, double t,
                   double tol = 1e-10);

Matrix evolve_correlator(const SparseMatrix& hs, const Matrix& c0, double t,
                         double tprime, double tol = 1e-10);

// Heisenberg-evolved operators against the full Hamiltonian.
Matrix correlator_oracle(const Matrix& h, const OperatorSet& set,
                         const Matrix& rho, double t, double tprime);

}  // namespace shadowsim
