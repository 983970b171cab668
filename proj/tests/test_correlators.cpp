#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "shadowsim/correlators.hpp"
#include "shadowsim/expm.hpp"
#include "shadowsim/fermions.hpp"
#include "shadowsim/oracle.hpp"
#include "shadowsim/qubits.hpp"
#include "shadowsim/shadow.hpp"

using namespace shadowsim;
using namespace shadowsim::testing;

namespace {

constexpr cplx kI{0.0, 1.0};

OperatorSet pauli_xyz_set() {
  OperatorSet set;
  set.labels = {"X", "Y", "Z"};
  const Matrix x = pauli_matrix(PauliString{1, 1, 0});
  const Matrix y = kI * pauli_matrix(PauliString{1, 1, 1});
  const Matrix z = pauli_matrix(PauliString{1, 0, 1});
  set.ops = {x, y, z};
  return set;
}

}  // namespace

TEST_SUITE_BEGIN("correlators");

TEST_CASE("equal-time golden on the single-qubit set") {
  Matrix rho = Matrix::Zero(2, 2);
  rho(0, 0) = 1.0;  // |0><0|
  const Matrix c = correlator_init_dense(pauli_xyz_set(), rho);
  Matrix want(3, 3);
  want << 1.0, kI, 0.0,
          -kI, 1.0, 0.0,
          0.0, 0.0, 1.0;
  CHECK((c - want).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("wick contraction equals the dense vacuum correlator") {
  for (const int n : {2, 3}) {
    const Vector vac = basis_ket(n, {});
    const Matrix rho = vac * vac.adjoint();

    // Two-point block first.
    const Matrix t2 = fermion_vacuum_two_point(n);
    for (int p = 1; p <= 2 * n; ++p) {
      for (int q = 1; q <= 2 * n; ++q) {
        const cplx want = vac.dot(jordan_wigner_majorana(n, p) *
                                  (jordan_wigner_majorana(n, q) * vac));
        CHECK(std::abs(t2(p - 1, q - 1) - want) < 1e-13);
      }
    }

    const Matrix c_wick = fermion_vacuum_correlator_matrix(n);
    const Matrix c_dense = correlator_init_dense(majorana_pair_set(n), rho);
    CHECK((c_wick - c_dense).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("axis evolution matches the dense kronecker action") {
  CounterRng rng(501, 0);
  const std::vector<int> dims{2, 3, 2};
  const Matrix h = random_hermitian(3, rng);
  std::vector<Triplet> trips;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) trips.push_back({r, c, h(r, c)});
  }
  const SparseMatrix hs = SparseMatrix::from_triplets(3, 3, std::move(trips));
  const Vector v = random_state(12, rng);
  const double t = 0.8;

  const Vector got = evolve_axis(dims, 1, hs, v, t, 1e-12);
  const Matrix u = dense_expm(h, t);
  const Matrix full = kron(kron(Matrix::Identity(2, 2), u),
                           Matrix::Identity(2, 2));
  CHECK((got - full * v).cwiseAbs().maxCoeff() < 1e-10);

  // Outer and inner axes need their own 2x2 generator.
  const Matrix h2 = random_hermitian(2, rng);
  std::vector<Triplet> t2;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) t2.push_back({r, c, h2(r, c)});
  }
  const SparseMatrix hs2 = SparseMatrix::from_triplets(2, 2, std::move(t2));
  const Matrix u2 = dense_expm(h2, t);
  const Vector got0 = evolve_axis(dims, 0, hs2, v, t, 1e-12);
  const Matrix full0 = kron(kron(u2, Matrix::Identity(3, 3)),
                            Matrix::Identity(2, 2));
  CHECK((got0 - full0 * v).cwiseAbs().maxCoeff() < 1e-10);
  const Vector got2 = evolve_axis(dims, 2, hs2, v, t, 1e-12);
  const Matrix full2 = kron(kron(Matrix::Identity(2, 2), Matrix::Identity(3, 3)),
                            u2);
  CHECK((got2 - full2 * v).cwiseAbs().maxCoeff() < 1e-10);

  CHECK_THROWS_AS(evolve_axis(dims, 3, hs, v, t), SchemaError);
  CHECK_THROWS_AS(evolve_axis(dims, 0, hs, v, t), SchemaError);
}

TEST_CASE("fermion two-time grid tracks the oracle") {
  CounterRng rng(502, 0);
  const int n = 3;
  const Matrix gamma = random_gamma(n, rng);
  const SparseMatrix hs = fermion_shadow_hamiltonian_serial(gamma);
  const Matrix h = fermion_hamiltonian_dense(gamma);
  const OperatorSet set = majorana_pair_set(n);
  const Vector vac = basis_ket(n, {});
  const Matrix rho = vac * vac.adjoint();

  const Matrix c0 = fermion_vacuum_correlator_matrix(n);
  for (const double t : {0.0, 0.5, 1.3}) {
    for (const double tp : {0.0, 0.5, 1.3}) {
      const Matrix got = evolve_correlator(hs, c0, t, tp, 1e-12);
      const Matrix want = correlator_oracle(h, set, rho, t, tp);
      CHECK((got - want).cwiseAbs().maxCoeff() < 1e-8);
    }
  }
}

TEST_CASE("qubit two-time grid tracks the oracle") {
  CounterRng rng(503, 0);
  const int n = 2;
  const RealMatrix w = [&] {
    RealMatrix m(n, 3);
    for (int j = 0; j < n; ++j) {
      for (int a = 0; a < 3; ++a) m(j, a) = rng.normal();
    }
    return m;
  }();
  const SparseMatrix hs = one_local_shadow_hamiltonian(w);
  const Matrix h = one_local_hamiltonian_dense(w);
  const OperatorSet set = one_local_set(n);
  const Matrix rho = random_density(1 << n, 2, rng);

  const Matrix c0 = correlator_init_dense(set, rho);
  for (const double t : {0.0, 0.7, 2.1}) {
    for (const double tp : {0.0, 0.7, 2.1}) {
      const Matrix got = evolve_correlator(hs, c0, t, tp, 1e-12);
      const Matrix want = correlator_oracle(h, set, rho, t, tp);
      CHECK((got - want).cwiseAbs().maxCoeff() < 1e-8);
    }
  }
}

TEST_SUITE_END();
