#include <cmath>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "shadowsim/expm.hpp"
#include "shadowsim/fermions.hpp"
#include "shadowsim/oracle.hpp"
#include "shadowsim/shadow.hpp"

using namespace shadowsim;
using namespace shadowsim::testing;

namespace {

constexpr cplx kI{0.0, 1.0};

// a_j and a_j^dag from the Majorana pair of site j.
Matrix annihilator(int n, int j) {
  return 0.5 * (jordan_wigner_majorana(n, 2 * j - 1) +
                kI * jordan_wigner_majorana(n, 2 * j));
}

double scaled_diff(const Matrix& a, const Matrix& b) {
  const double s = std::max(1.0, b.cwiseAbs().maxCoeff());
  return (a - b).cwiseAbs().maxCoeff() / s;
}

}  // namespace

TEST_SUITE_BEGIN("fermions");

TEST_CASE("pair basis enumeration") {
  CHECK(majorana_pair_count(1) == 1);
  CHECK(majorana_pair_count(3) == 15);
  CHECK(majorana_pair_label(1, 2) == "c1c2");
  const int n = 4;
  int idx = 0;
  for (int j = 1; j <= 2 * n; ++j) {
    for (int k = j + 1; k <= 2 * n; ++k) {
      CHECK(majorana_pair_index(n, j, k) == idx);
      CHECK(majorana_pair_from_index(n, idx) == std::make_pair(j, k));
      ++idx;
    }
  }
  CHECK(idx == majorana_pair_count(n));
  CHECK(majorana_pair_labels(2).front() == "c1c2");
  CHECK(majorana_pair_labels(2).back() == "c3c4");
  CHECK_THROWS_AS(majorana_pair_index(2, 2, 2), SchemaError);
}

TEST_CASE("majorana operators satisfy the Clifford relations") {
  const int n = 3;
  const int dim = 1 << n;
  for (int p = 1; p <= 2 * n; ++p) {
    const Matrix cp = jordan_wigner_majorana(n, p);
    CHECK(hermitian_defect(cp) < 1e-14);
    for (int q = p; q <= 2 * n; ++q) {
      const Matrix cq = jordan_wigner_majorana(n, q);
      Matrix anti = cp * cq + cq * cp;
      if (p == q) anti -= 2.0 * Matrix::Identity(dim, dim);
      CHECK(anti.cwiseAbs().maxCoeff() < 1e-14);
    }
  }
  // Site 1 is the most significant qubit.
  Matrix zx = kron((Matrix(2, 2) << 1, 0, 0, -1).finished(),
                   (Matrix(2, 2) << 0, 1, 1, 0).finished());
  CHECK((jordan_wigner_majorana(2, 3) - zx).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("vacuum and product kets") {
  const int n = 3;
  const Vector vac = basis_ket(n, {});
  CHECK(vac[0] == cplx(1.0, 0.0));
  for (int j = 1; j <= n; ++j) {
    CHECK((annihilator(n, j) * vac).norm() < 1e-14);
  }
  // Occupying site 1 flips the most significant bit.
  const Vector one = basis_ket(n, {1});
  CHECK(one[4] == cplx(1.0, 0.0));
  const Matrix num1 = annihilator(n, 1).adjoint() * annihilator(n, 1);
  CHECK(std::abs(one.dot(num1 * one) - cplx(1.0, 0.0)) < 1e-14);
  CHECK_THROWS_AS(basis_ket(n, {0}), SchemaError);
  CHECK_THROWS_AS(basis_ket(n, {1, 1}), SchemaError);
}

TEST_CASE("canonical form only shifts the energy") {
  CounterRng rng(101, 0);
  const int n = 3;
  const Matrix raw = random_hermitian(2 * n, rng);
  const CanonicalGamma canon = canonicalize_gamma(raw);
  CHECK(canon.gamma.real().cwiseAbs().maxCoeff() < 1e-14);
  CHECK(canon.gamma.diagonal().cwiseAbs().maxCoeff() < 1e-14);
  CHECK(hermitian_defect(canon.gamma) < 1e-13);

  // 1/2 sum_{jk} raw_jk c_j c_k, all index pairs.
  const int dim = 1 << n;
  Matrix full = Matrix::Zero(dim, dim);
  for (int j = 1; j <= 2 * n; ++j) {
    for (int k = 1; k <= 2 * n; ++k) {
      full += 0.5 * raw(j - 1, k - 1) * jordan_wigner_majorana(n, j) *
              jordan_wigner_majorana(n, k);
    }
  }
  const Matrix canonical = fermion_hamiltonian_dense(canon.gamma) +
                           canon.offset * Matrix::Identity(dim, dim);
  CHECK(scaled_diff(full, canonical) < 1e-13);
}

TEST_CASE("hopping and pairing coefficients reproduce the dense Hamiltonian") {
  CounterRng rng(102, 0);
  const int n = 3;
  const int dim = 1 << n;
  const Matrix alpha = random_hermitian(n, rng);
  Matrix beta = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      beta(j, k) = rng.normal_cplx();
      beta(k, j) = -beta(j, k);
    }
  }
  const CanonicalGamma g = gamma_from_hopping(alpha, beta);

  Matrix want = Matrix::Zero(dim, dim);
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      const Matrix aj = annihilator(n, j), ak = annihilator(n, k);
      want += alpha(j - 1, k - 1) * aj.adjoint() * ak;
      want += 0.5 * beta(j - 1, k - 1) * aj.adjoint() * ak.adjoint();
      want -= 0.5 * std::conj(beta(j - 1, k - 1)) * aj * ak;
    }
  }
  const Matrix got = fermion_hamiltonian_dense(g.gamma) +
                     g.offset * Matrix::Identity(dim, dim);
  CHECK(scaled_diff(got, want) < 1e-12);

  // Single mode: omega a^dag a has gamma_12 = i omega / 2, offset omega / 2.
  Matrix a1(1, 1);
  a1 << 2.5;
  const CanonicalGamma num = gamma_from_hopping(a1, Matrix::Zero(1, 1));
  CHECK(std::abs(num.gamma(0, 1) - kI * 1.25) < 1e-14);
  CHECK(num.offset == doctest::Approx(1.25));
}

TEST_CASE("index-level generator golden entry") {
  const double g = 0.37;
  Matrix gamma = Matrix::Zero(4, 4);
  gamma(0, 2) = kI * g;
  gamma(2, 0) = -kI * g;
  const SparseMatrix hs = fermion_shadow_hamiltonian_serial(gamma);
  const int row = majorana_pair_index(2, 1, 2);
  const int col = majorana_pair_index(2, 2, 3);
  CHECK(std::abs(hs.coeff(row, col) - cplx(0.0, -2.0 * g)) < 1e-15);
  CHECK(hermitian_defect(hs) < 1e-15);
}

TEST_CASE("serial and parallel assembly agree exactly") {
  CounterRng rng(103, 0);
  for (const int n : {2, 5, 17}) {
    CounterRng sub = rng.split(n);
    const Matrix gamma =
        n > 4 ? random_banded_gamma(n, 3, sub) : random_gamma(n, sub);
    const SparseMatrix a = fermion_shadow_hamiltonian_serial(gamma);
    const SparseMatrix b = fermion_shadow_hamiltonian_omp(gamma);
    REQUIRE(a.rows() == b.rows());
    CHECK(a.row_ptr() == b.row_ptr());
    CHECK(a.col_idx() == b.col_idx());
    CHECK(a.values() == b.values());
  }
}

TEST_CASE("index route equals trace projection on the dense set") {
  CounterRng rng(104, 0);
  for (const int n : {2, 3}) {
    CounterRng sub = rng.split(n);
    const Matrix gamma = random_gamma(n, sub);
    const ShadowHamiltonian fast = fermion_shadow(gamma);
    const OperatorSet set = majorana_pair_set(n);
    const Matrix h = fermion_hamiltonian_dense(gamma);
    const ShadowHamiltonian dense = build_shadow_hamiltonian_dense(h, set);
    CHECK(dense.leakage < 1e-10);
    CHECK((fast.hs.to_dense() - dense.hs.to_dense()).cwiseAbs().maxCoeff() <
          1e-10);
  }
}

TEST_CASE("structure-constant route equals the index route") {
  CounterRng rng(105, 0);
  const int n = 3;
  const Matrix gamma = random_gamma(n, rng);
  const StructureTable table = so2n_structure_table(n);
  CHECK(antisymmetry_defect(table) == 0.0);
  const ShadowHamiltonian structural = build_from_structure_constants(
      table, so2n_alpha(gamma), majorana_pair_labels(n));
  const ShadowHamiltonian fast = fermion_shadow(gamma);
  CHECK((structural.hs.to_dense() - fast.hs.to_dense()).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("sparsity and norm bounds at scale") {
  CounterRng rng(106, 0);
  const int n = 200;
  for (const int band : {2, 3, 4}) {
    CounterRng sub = rng.split(band);
    const Matrix gamma = random_banded_gamma(n, band, sub);
    int degree = 0;
    for (int r = 0; r < 2 * n; ++r) {
      int row = 0;
      for (int c = 0; c < 2 * n; ++c) {
        if (c != r && gamma(r, c) != cplx(0.0, 0.0)) ++row;
      }
      degree = std::max(degree, row);
    }
    const SparseMatrix hs = fermion_shadow_hamiltonian_omp(gamma);
    CHECK(hs.rows() == majorana_pair_count(n));
    CHECK(hs.max_row_nnz() <= 2 * degree);
    CHECK(hs.max_abs() <= 2.0 * gamma.cwiseAbs().maxCoeff() + 1e-12);
    CHECK(hermitian_defect(hs) < 1e-12);
  }
}

TEST_CASE("vacuum shadow matches the oracle") {
  for (const int n : {1, 2, 3}) {
    const ShadowState conv = vacuum_shadow(n);
    const OperatorSet set = majorana_pair_set(n);
    const ShadowState oracle = shadow_from_state(basis_ket(n, {}), set);
    CHECK(conv.normA == doctest::Approx(oracle.normA).epsilon(1e-12));
    CHECK((conv.amplitudes - oracle.amplitudes).cwiseAbs().maxCoeff() < 1e-12);
    // The vacuum expectation of c_{2l-1} c_{2l} is +i.
    CHECK(std::abs(conv.amplitudes[majorana_pair_index(n, 1, 2)] -
                   kI / std::sqrt(double(n))) < 1e-12);
  }
}

TEST_CASE("product shadows and the particle-hole flip") {
  const int n = 3;
  const std::vector<int> occ{1, 3};
  const ShadowState st = product_shadow(n, occ);
  const OperatorSet set = majorana_pair_set(n);
  const ShadowState oracle = shadow_from_state(basis_ket(n, occ), set);
  CHECK(st.normA == doctest::Approx(oracle.normA).epsilon(1e-12));
  CHECK((st.amplitudes - oracle.amplitudes).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(st.amplitudes[majorana_pair_index(n, 1, 2)] +
                 kI / std::sqrt(double(n))) < 1e-14);
  CHECK(std::abs(st.amplitudes[majorana_pair_index(n, 3, 4)] -
                 kI / std::sqrt(double(n))) < 1e-14);

  const ShadowState holes = product_shadow(n, {2});
  CHECK((holes.amplitudes + st.amplitudes).cwiseAbs().maxCoeff() == 0.0);
  CHECK(holes.normA == st.normA);
}

TEST_CASE("shadow dynamics track the full Hilbert space") {
  CounterRng rng(107, 0);
  for (const int n : {2, 3}) {
    CounterRng sub = rng.split(n);
    const Matrix gamma = random_gamma(n, sub);
    const ShadowHamiltonian sh = fermion_shadow(gamma);
    const Matrix h = fermion_hamiltonian_dense(gamma);
    const OperatorSet set = majorana_pair_set(n);
    const Vector psi0 = random_state(1 << n, sub);
    const ShadowState st0 = shadow_from_state(psi0, set);
    for (const double t : {0.5, 2.0, 10.0}) {
      const ShadowState got = evolve_shadow(sh, st0, t);
      const ShadowState want = shadow_from_state(evolve_full(h, psi0, t), set);
      CHECK(got.normA == doctest::Approx(want.normA).epsilon(1e-9));
      CHECK((got.amplitudes - want.amplitudes).norm() < 1e-8);
    }
  }
}

TEST_CASE("subset energies read off the shadow") {
  CounterRng rng(108, 0);
  const int n = 3;
  const Matrix gamma = random_gamma(n, rng);
  const OperatorSet set = majorana_pair_set(n);
  const Vector psi = random_state(1 << n, rng);
  const ShadowState st = shadow_from_state(psi, set);

  std::vector<int> all(2 * n);
  for (int i = 0; i < 2 * n; ++i) all[i] = i + 1;
  const Matrix h = fermion_hamiltonian_dense(gamma);
  const double e_all = subset_energy(gamma, st, all);
  CHECK(std::abs(e_all - psi.dot(h * psi).real()) < 1e-10);

  const std::vector<int> sub{1, 2, 5, 6};
  Matrix h_sub = Matrix::Zero(1 << n, 1 << n);
  for (std::size_t u = 0; u < sub.size(); ++u) {
    for (std::size_t v = u + 1; v < sub.size(); ++v) {
      h_sub += gamma(sub[u] - 1, sub[v] - 1) *
               jordan_wigner_majorana(n, sub[u]) *
               jordan_wigner_majorana(n, sub[v]);
    }
  }
  const double e_sub = subset_energy(gamma, st, sub);
  CHECK(std::abs(e_sub - psi.dot(h_sub * psi).real()) < 1e-8);

  // Single mode, vacuum: H = omega (n - 1/2), energy -omega/2.
  const double omega = 1.8;
  Matrix g1 = Matrix::Zero(2, 2);
  g1(0, 1) = kI * omega / 2.0;
  g1(1, 0) = -kI * omega / 2.0;
  const double e_vac = subset_energy(g1, vacuum_shadow(1), {1, 2});
  CHECK(std::abs(e_vac + omega / 2.0) < 1e-12);

  // Shot-noise estimate stays within 4 G sqrt(A) / sqrt(shots).
  CounterRng shot_rng(5150, 0);
  const std::uint64_t shots = 10000;
  double g2 = 0.0;
  for (std::size_t u = 0; u < sub.size(); ++u) {
    for (std::size_t v = u + 1; v < sub.size(); ++v) {
      g2 += std::norm(gamma(sub[u] - 1, sub[v] - 1));
    }
  }
  const double bound =
      4.0 * std::sqrt(g2) * std::sqrt(st.normA) / std::sqrt(double(shots));
  const double e_est = subset_energy_sampled(gamma, st, sub, shots, shot_rng);
  CHECK(std::abs(e_est - e_sub) < bound);
}

TEST_CASE("number conservation defect separates hopping from pairing") {
  CounterRng rng(109, 0);
  const int n = 3;
  const Matrix alpha = random_hermitian(n, rng);
  const CanonicalGamma hop = gamma_from_hopping(alpha, Matrix::Zero(n, n));
  CHECK(number_conservation_defect(hop.gamma) < 1e-12);

  Matrix beta = Matrix::Zero(n, n);
  beta(0, 1) = 1.0;
  beta(1, 0) = -1.0;
  const CanonicalGamma pair = gamma_from_hopping(alpha, beta);
  CHECK(number_conservation_defect(pair.gamma) > 0.1);

  // Against the oracle: defect zero iff [H, N] = 0.
  const int dim = 1 << n;
  Matrix nop = Matrix::Zero(dim, dim);
  for (int j = 1; j <= n; ++j) {
    nop += annihilator(n, j).adjoint() * annihilator(n, j);
  }
  const Matrix h_hop = fermion_hamiltonian_dense(hop.gamma);
  CHECK((h_hop * nop - nop * h_hop).cwiseAbs().maxCoeff() < 1e-12);
  const Matrix h_pair = fermion_hamiltonian_dense(pair.gamma);
  CHECK((h_pair * nop - nop * h_pair).cwiseAbs().maxCoeff() > 0.1);
}

TEST_CASE("single-particle crosscheck") {
  CounterRng rng(110, 0);
  const int n = 3;
  const Matrix alpha = random_hermitian(n, rng);
  const Vector psi = random_state(n, rng);
  const SparseMatrix hsp = single_particle_shadow_hamiltonian(alpha);
  CHECK(hermitian_defect(hsp) < 1e-12);
  const double t = 1.4;
  const Vector got = expm_action(hsp, single_particle_amplitudes(psi), t);
  const Vector want =
      single_particle_amplitudes(dense_expm(alpha, t) * psi);
  CHECK((got - want).norm() < 1e-10);
}

TEST_CASE("quartic terms break the quadratic closure") {
  CounterRng rng(111, 0);
  const int n = 3;
  const Matrix gamma = random_gamma(n, rng);
  const OperatorSet set = majorana_pair_set(n);

  const Matrix h2 = fermion_hamiltonian_dense(gamma);
  CHECK(build_shadow_hamiltonian_dense(h2, set).leakage < 1e-10);

  const QuarticTerm term{1, 2, 3, 4, 0.9};
  const Matrix hq = quartic_term_dense(n, term);
  CHECK(hermitian_defect(hq) < 1e-14);
  CHECK((hq * hq -
         term.g * term.g * Matrix::Identity(1 << n, 1 << n))
            .cwiseAbs()
            .maxCoeff() < 1e-13);
  CHECK(build_shadow_hamiltonian_dense(h2 + hq, set).leakage > 0.1);
}

TEST_SUITE_END();
