#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shadowsim/operator_set.hpp"
#include "shadowsim/pauli.hpp"
#include "shadowsim/rng.hpp"
#include "shadowsim/shadow.hpp"
#include "shadowsim/sparse.hpp"
#include "shadowsim/types.hpp"

namespace shadowsim {

// ---- single-site set {1, X_j, Y_j, Z_j} -------------------------------
// Slot 0 is the identity; qubit j axis a sits at 1 + 3(j-1) + a with
// a in {0,1,2} = {X,Y,Z}. Fields w are n x 3 in the same axis order.
std::vector<std::string> one_local_labels(int n);
int one_local_slot(int qubit, int axis);
OperatorSet one_local_set(int n);
SparseMatrix one_local_shadow_hamiltonian(const RealMatrix& w);
ShadowHamiltonian one_local_shadow(const RealMatrix& w);
Matrix one_local_hamiltonian_dense(const RealMatrix& w);
ShadowState all_zero_shadow(int n);

// ---- full Pauli word set ----------------------------------------------
// All 4^n words X^i Z^j at slot (i << n) | j. For this set the shadow of
// rho is the Bell rotation of its vectorization, with A = 2^n tr(rho^2).
std::vector<std::string> full_pauli_labels(int n);
OperatorSet full_pauli_set(int n);

struct PauliTerm {
  PauliString p;
  cplx w;
};
// Accumulates parsed "axis+index" words times coefficients into XZ form
// and checks the sum is Hermitian.
std::vector<PauliTerm> collect_pauli_terms(
    int n, const std::vector<std::pair<std::string, cplx>>& terms);
SparseMatrix full_pauli_shadow_hamiltonian(int n,
                                           const std::vector<PauliTerm>& terms);
ShadowHamiltonian full_pauli_shadow(int n, const std::vector<PauliTerm>& terms);
Matrix pauli_terms_dense(int n, const std::vector<PauliTerm>& terms);

// ---- Bell rotation ------------------------------------------------------
// V_S is fixed by V_S^dag |i,j> = (1 (x) X^i Z^j) |Phi> on two n-qubit
// registers (register 1 = high bits) with |Phi> the maximally entangled
// state. bell_rotation_apply realizes it as, per register pair (a_l, b_l):
// CNOT(b_l -> a_l), CNOT(a_l -> b_l), H(b_l).
Matrix bell_rotation_dense(int n);
Vector bell_rotation_apply(int n, Vector reg12);
ShadowState shadow_via_bell(int n, const Vector& psi);
ShadowState shadow_via_bell_density(int n, const Matrix& rho);

// ---- swap test on psi vs conj(psi) --------------------------------------
double conjugate_overlap(const Vector& psi);  // |<psi|conj(psi)>|
double swap_test_estimate(const Vector& psi, std::uint64_t shots,
                          CounterRng& rng);

// ---- Heisenberg-Weyl (qudit) version ------------------------------------
// X|j> = |j+1 mod N>, Z|j> = exp(-2 pi i j / N)|j>; the rotation factors
// as (1 (x) F) SWAP C^dag with F the inverse Fourier kernel and
// C = sum_j |j><j| (x) X^j.
Matrix hw_shift(int dim);
Matrix hw_clock(int dim);
Matrix hw_word(int dim, int i, int j);
Matrix hw_bell_rotation(int dim);
Matrix hw_bell_rotation_defining(int dim);

}  // namespace shadowsim
