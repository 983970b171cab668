#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shadowsim/rng.hpp"
#include "shadowsim/shadow.hpp"
#include "shadowsim/sparse.hpp"
#include "shadowsim/types.hpp"

namespace shadowsim {

// Coupled harmonic network
//   H = sum_j p_j^2 / 2m_j + 1/2 sum_j kappa_jj q_j^2
//     + 1/2 sum_{j<k} kappa_jk (q_j - q_k)^2,
// masses positive, couplings nonnegative, kappa symmetric.
struct OscillatorNetwork {
  RealVector masses;
  RealMatrix kappa;
};
void validate_network(const OscillatorNetwork& net);

// Factorization H = 1/2 Y^T B B^T Y over phase space Y = (P_1..P_n, Q_1..Q_n).
// One column per kinetic term, on-site spring, and coupling spring; the
// monitored observables are O = B^T Y.
struct BosonBasis {
  RealMatrix b;  // 2n x M
  std::vector<std::string> labels;
  int n = 0;
};
BosonBasis boson_basis(const OscillatorNetwork& net);

// H_S = i B^T Omega B with Omega the symplectic form; purely imaginary
// Hermitian, so exp(-i H_S t) is real orthogonal. Amplitudes o = B^T y obey
// do/dt = -i H_S o exactly along classical trajectories.
SparseMatrix boson_shadow_hamiltonian(const BosonBasis& basis);
ShadowHamiltonian boson_shadow(const OscillatorNetwork& net);

Vector boson_amplitudes(const BosonBasis& basis, const RealVector& p,
                        const RealVector& q);
ShadowState boson_shadow_state(const BosonBasis& basis, const RealVector& p,
                               const RealVector& q);  // normA = 2 E_classical

double classical_energy(const OscillatorNetwork& net, const RealVector& p,
                        const RealVector& q);
// Normal-mode propagation (exact; zero modes drift linearly).
void classical_evolve(const OscillatorNetwork& net, RealVector& p,
                      RealVector& q, double t);

// Quadratic monitor set O_m O_m' (row-major): amplitudes o_m o_m' evolve
// under H_S (x) 1 + 1 (x) H_S, and H = 1/2 sum_m O_m^2 makes sub-energies
// over a column subset I readable off the diagonal slots.
Vector boson_quadratic_amplitudes(const Vector& o);
SparseMatrix boson_quadratic_hamiltonian(const SparseMatrix& hs);
ShadowState boson_quadratic_state(const BosonBasis& basis, const RealVector& p,
                                  const RealVector& q);
std::vector<std::string> boson_quadratic_labels(const BosonBasis& basis);
double boson_subset_energy(const ShadowState& quad, int m_total,
                           const std::vector<int>& columns);
double boson_subset_energy_sampled(const ShadowState& quad, int m_total,
                                   const std::vector<int>& columns,
                                   std::uint64_t shots, CounterRng& rng);

}  // namespace shadowsim
