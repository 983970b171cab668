#pragma once

#include <string>
#include <vector>

#include "shadowsim/operator_set.hpp"
#include "shadowsim/rng.hpp"
#include "shadowsim/sparse.hpp"
#include "shadowsim/types.hpp"

namespace shadowsim {

// Unit vector of normalized expectation values over an operator family,
// with the normalization constant carried separately:
// amplitudes_m = <O_m> / sqrt(normA), normA = sum_m |<O_m>|^2.
struct ShadowState {
  std::vector<std::string> labels;
  Vector amplitudes;
  double normA = 0.0;
};

// Builds a ShadowState from raw expectation values. All-zero input is a
// degenerate shadow (no state to normalize) and is refused.
ShadowState shadow_from_expectations(std::vector<std::string> labels,
                                     const Vector& raw);

// Generator of shadow dynamics: d/dt amplitudes = -i hs * amplitudes.
// hs(m, m') is the coefficient h_{mm'} in [H, O_m] = -sum_{m'} h_{mm'} O_{m'}.
struct ShadowHamiltonian {
  std::vector<std::string> labels;
  SparseMatrix hs;
  double leakage = 0.0;        // max_m fraction of [H, O_m] outside span S
  double hermitian_defect = 0.0;
};

// Trace-projection construction for an orthogonal set:
// h_{mm'} = -(1/lambda) tr(O_{m'}^dag [H, O_m]), with the leakage
// diagnostic max_m ||[H,O_m] + sum h O||_F / ||[H,O_m]||_F.
ShadowHamiltonian build_shadow_hamiltonian_dense(const Matrix& h,
                                                 const OperatorSet& set,
                                                 double drop_tol = 1e-13);

// Leakage of an externally built generator against a dense H and set.
double leakage_diagnostic(const Matrix& h, const OperatorSet& set,
                          const SparseMatrix& hs);

// Real structure constants [O_j, O_k] = sum_l f_{jkl} O_l of an
// anti-Hermitian operator basis.
struct StructureEntry {
  int j;
  int k;
  int l;
  double f;
};
struct StructureTable {
  int p = 0;  // basis size
  std::vector<StructureEntry> entries;
};

double antisymmetry_defect(const StructureTable& table);

// H = i sum_m alpha_m O_m  =>  h_{kl} = -i sum_m alpha_m f_{mkl}.
// Asserts the closure bounds: row sparsity <= (#noncommuting terms) * d'
// and max entry <= p_eff * max|alpha| * max|f|.
ShadowHamiltonian build_from_structure_constants(
    const StructureTable& table, const RealVector& alpha,
    std::vector<std::string> labels);

// Basis {iX, iY, iZ}: f_{jkl} = -2 eps_{jkl}.
StructureTable su2_structure_table();

// Propagates the shadow state: amplitudes <- exp(-i t hs) amplitudes.
// Refuses a generator whose hermitian defect exceeds tol.
ShadowState evolve_shadow(const ShadowHamiltonian& sh, const ShadowState& st,
                          double t, double tol = 1e-10);

// Shadow of a simultaneous eigenstate: h_i |lw> = e_i |lw> with purely
// imaginary e_i. Amplitudes proportional to e_i, global phase fixed so the
// first nonzero amplitude is real positive; normA = sum |e_i|^2.
ShadowState lowest_weight_shadow(const std::vector<cplx>& eigenvalues,
                                 std::vector<std::string> labels);

// Shadow over a subset of the monitored operators: the kept raw
// expectations are renormalized among themselves.
ShadowState restrict_shadow(const ShadowState& full, const std::vector<int>& keep);

cplx shadow_overlap(const ShadowState& a, const ShadowState& b);

// K-shot estimate of <a|b>: real and imaginary parts each estimated from
// a Binomial(K, (1 +/- part)/2) draw.
cplx shadow_overlap_sampled(const ShadowState& a, const ShadowState& b,
                            std::uint64_t shots, CounterRng& rng);

}  // namespace shadowsim
