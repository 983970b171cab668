#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shadowsim/operator_set.hpp"
#include "shadowsim/rng.hpp"
#include "shadowsim/shadow.hpp"
#include "shadowsim/sparse.hpp"
#include "shadowsim/types.hpp"

namespace shadowsim {

// Majorana modes are 1-based: c_1 .. c_2n. The operator set is the pair
// basis O_(j,k) = c_j c_k with j < k, enumerated lexicographically.
int majorana_pair_count(int n);
int majorana_pair_index(int n, int j, int k);
std::pair<int, int> majorana_pair_from_index(int n, int idx);
std::string majorana_pair_label(int j, int k);
std::vector<std::string> majorana_pair_labels(int n);

// Quadratic Hamiltonians are held as H = sum_{j<k} gamma_jk c_j c_k with
// gamma Hermitian, purely imaginary, zero diagonal. canonicalize_gamma
// accepts any Hermitian matrix in the 1/2 sum_{jk} convention and splits
// off the real symmetric part, which only shifts the energy:
//   1/2 sum_{jk} Re(gamma)_jk c_j c_k = 1/2 tr(Re gamma).
struct CanonicalGamma {
  Matrix gamma;
  double offset = 0.0;
};
CanonicalGamma canonicalize_gamma(const Matrix& gamma_in);

// H = sum_{jk} alpha_jk a_j^dag a_k
//   + 1/2 sum_{jk} (beta_jk a_j^dag a_k^dag - conj(beta_jk) a_j a_k),
// alpha Hermitian, beta antisymmetric (modes 1..n).
CanonicalGamma gamma_from_hopping(const Matrix& alpha, const Matrix& beta);

// Shadow generator on the pair basis, assembled from the index structure
// of gamma alone. h_(a,b),(j,b) = -2 s gamma_ja with s the reordering sign
// of c_j c_b, and symmetrically in the second slot; no other entries.
SparseMatrix fermion_shadow_hamiltonian_serial(const Matrix& gamma);
SparseMatrix fermion_shadow_hamiltonian_omp(const Matrix& gamma);
ShadowHamiltonian fermion_shadow(const Matrix& gamma);

// Dense route for small n (Jordan-Wigner, qubit 1 = most significant bit).
Matrix jordan_wigner_majorana(int n, int p);
OperatorSet majorana_pair_set(int n);
Matrix fermion_hamiltonian_dense(const Matrix& gamma);

// Optional quartic term g * c_a c_b c_c c_d (a<b<c<d, g real): Hermitian,
// squares to one, and takes H outside the quadratic invariance class.
struct QuarticTerm {
  int a, b, c, d;
  double g;
};
Matrix quartic_term_dense(int n, const QuarticTerm& term);

// Reference shadow states on the pair basis. Amplitudes carry the
// physical phase i (1 - 2 n_l) of <c_{2l-1} c_{2l}>, so energy read-offs
// work on them directly.
ShadowState vacuum_shadow(int n);
ShadowState product_shadow(int n, const std::vector<int>& occupied);
Vector basis_ket(int n, const std::vector<int>& occupied);

// Energy of the sub-Hamiltonian over Majorana modes J, read off the shadow
// amplitudes: E_J = G sqrt(A) Re<psi_J|st> with psi_J proportional to
// conj(gamma) on pairs inside J and G its normalizer.
double subset_energy(const Matrix& gamma, const ShadowState& st,
                     const std::vector<int>& modes);
double subset_energy_sampled(const Matrix& gamma, const ShadowState& st,
                             const std::vector<int>& modes,
                             std::uint64_t shots, CounterRng& rng);

// || hs^T n_vec || where n_vec holds the pair coefficients of the total
// number operator; zero exactly when [H, N] = 0. Works at the index level.
double number_conservation_defect(const Matrix& gamma);

// One-body crosscheck: on amplitudes v_(j,k) = conj(psi_j) psi_k (row-major)
// a hopping Hamiltonian alpha generates -conj(alpha) (x) 1 + 1 (x) alpha.
SparseMatrix single_particle_shadow_hamiltonian(const Matrix& alpha);
Vector single_particle_amplitudes(const Vector& psi);

// so(2n) structure constants of the pair basis, and the expansion
// H = i sum_m alpha_m O_m matching fermion_shadow_hamiltonian.
StructureTable so2n_structure_table(int n);
RealVector so2n_alpha(const Matrix& gamma);

}  // namespace shadowsim
