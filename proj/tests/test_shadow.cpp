#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "shadowsim/expm.hpp"
#include "shadowsim/oracle.hpp"
#include "shadowsim/pauli.hpp"
#include "shadowsim/shadow.hpp"

using namespace shadowsim;
using namespace shadowsim::testing;

namespace {

OperatorSet pauli_xyz_set() {
  OperatorSet set;
  set.labels = {"X", "Y", "Z"};
  const Matrix x = pauli_matrix(PauliString{1, 1, 0});
  const Matrix y = cplx(0.0, 1.0) * pauli_matrix(PauliString{1, 1, 1});
  const Matrix z = pauli_matrix(PauliString{1, 0, 1});
  set.ops = {x, y, z};
  return set;
}

}  // namespace

TEST_SUITE_BEGIN("shadow");

TEST_CASE("shadow normalization") {
  Vector raw(2);
  raw << cplx(3.0, 0.0), cplx(0.0, 4.0);
  const ShadowState st = shadow_from_expectations({"a", "b"}, raw);
  CHECK(st.normA == doctest::Approx(25.0));
  CHECK(std::abs(st.amplitudes.norm() - 1.0) < 1e-14);
  CHECK(std::abs(st.amplitudes[0] - cplx(0.6, 0.0)) < 1e-14);
  CHECK(std::abs(st.amplitudes[1] - cplx(0.0, 0.8)) < 1e-14);
  CHECK_THROWS_AS(shadow_from_expectations({"a"}, Vector::Zero(1)),
                  DegenerateShadowError);
}

TEST_CASE("dense generator golden: precession under Z") {
  OperatorSet set = pauli_xyz_set();
  set.labels.resize(2);
  set.ops.resize(2);  // {X, Y}
  Matrix h(2, 2);
  h << 1.0, 0.0, 0.0, -1.0;
  const ShadowHamiltonian sh = build_shadow_hamiltonian_dense(h, set);
  CHECK(sh.leakage < 1e-12);
  CHECK(sh.hermitian_defect < 1e-12);
  CHECK(std::abs(sh.hs.coeff(0, 1) - cplx(0.0, -2.0)) < 1e-12);
  CHECK(std::abs(sh.hs.coeff(1, 0) - cplx(0.0, 2.0)) < 1e-12);
  CHECK(std::abs(sh.hs.coeff(0, 0)) < 1e-12);

  // |+> has <X> = 1, <Y> = 0; under H = Z they precess at rate 2.
  Vector raw(2);
  raw << 1.0, 0.0;
  const ShadowState st0 = shadow_from_expectations(set.labels, raw);
  for (const double t : {0.3, 1.7}) {
    const ShadowState st = evolve_shadow(sh, st0, t);
    CHECK(std::abs(st.amplitudes[0] - std::cos(2.0 * t)) < 1e-10);
    CHECK(std::abs(st.amplitudes[1] - std::sin(2.0 * t)) < 1e-10);
  }
}

TEST_CASE("leakage flags a set that does not close") {
  OperatorSet set;
  set.labels = {"Z"};
  set.ops = {pauli_matrix(PauliString{1, 0, 1})};
  Matrix h(2, 2);
  h << 0.0, 1.0, 1.0, 0.0;  // X
  const ShadowHamiltonian sh = build_shadow_hamiltonian_dense(h, set);
  CHECK(sh.leakage == doctest::Approx(1.0));  // [X, Z] lands entirely on Y
}

TEST_CASE("structure-constant route matches the trace projection") {
  const StructureTable table = su2_structure_table();
  CHECK(antisymmetry_defect(table) == 0.0);

  CounterRng rng(31, 0);
  RealVector w(3);
  for (int i = 0; i < 3; ++i) w[i] = rng.normal();

  // H = sum_a w_a sigma_a = i sum_a alpha_a (i sigma_a) with alpha = -w.
  const OperatorSet set = pauli_xyz_set();
  Matrix h = Matrix::Zero(2, 2);
  for (int a = 0; a < 3; ++a) h += w[a] * set.ops[a];
  const ShadowHamiltonian dense = build_shadow_hamiltonian_dense(h, set);

  const RealVector alpha = -w;
  const ShadowHamiltonian structural =
      build_from_structure_constants(table, alpha, set.labels);
  CHECK((structural.hs.to_dense() - dense.hs.to_dense()).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK(leakage_diagnostic(h, set, structural.hs) < 1e-12);
}

TEST_CASE("antisymmetry defect catches a bad table") {
  StructureTable bad;
  bad.p = 3;
  bad.entries = {{0, 1, 2, -2.0}, {1, 0, 2, -2.0}};
  CHECK(antisymmetry_defect(bad) == doctest::Approx(4.0));
  RealVector alpha = RealVector::Ones(3);
  CHECK_THROWS(build_from_structure_constants(bad, alpha, {"a", "b", "c"}));
}

TEST_CASE("evolution refuses a non-Hermitian generator") {
  ShadowHamiltonian sh;
  sh.labels = {"a", "b"};
  sh.hs = SparseMatrix::from_triplets(2, 2, {{0, 1, {1.0, 0.0}}});
  sh.hermitian_defect = hermitian_defect(sh.hs);
  Vector raw(2);
  raw << 1.0, 0.0;
  const ShadowState st = shadow_from_expectations(sh.labels, raw);
  CHECK_THROWS_AS(evolve_shadow(sh, st, 1.0), NonHermitianError);
}

TEST_CASE("lowest-weight shadow fixes the global phase") {
  const ShadowState st =
      lowest_weight_shadow({cplx(0.0, 1.0), cplx(0.0, 2.0)}, {"a", "b"});
  CHECK(st.normA == doctest::Approx(5.0));
  CHECK(std::abs(st.amplitudes[0] - 1.0 / std::sqrt(5.0)) < 1e-14);
  CHECK(std::abs(st.amplitudes[1] - 2.0 / std::sqrt(5.0)) < 1e-14);
  CHECK_THROWS(lowest_weight_shadow({cplx(1.0, 0.0)}, {"a"}));
}

TEST_CASE("restricted shadow renormalizes the kept block") {
  Vector raw(3);
  raw << cplx(1.0, 0.0), cplx(0.0, 2.0), cplx(2.0, 0.0);
  const ShadowState full = shadow_from_expectations({"a", "b", "c"}, raw);
  const ShadowState sub = restrict_shadow(full, {0, 2});
  CHECK(sub.labels == std::vector<std::string>{"a", "c"});
  CHECK(sub.normA == doctest::Approx(5.0));
  CHECK(std::abs(sub.amplitudes[0] - 1.0 / std::sqrt(5.0)) < 1e-14);
  CHECK(std::abs(sub.amplitudes[1] - 2.0 / std::sqrt(5.0)) < 1e-14);
  CHECK_THROWS(restrict_shadow(full, {5}));
}

TEST_CASE("sampled overlap concentrates around the exact value") {
  Vector ra(2), rb(2);
  ra << cplx(1.0, 0.0), cplx(0.0, 1.0);
  rb << cplx(1.0, 0.0), cplx(1.0, 0.0);
  const ShadowState a = shadow_from_expectations({"u", "v"}, ra);
  const ShadowState b = shadow_from_expectations({"u", "v"}, rb);
  const cplx exact = shadow_overlap(a, b);
  CHECK(std::abs(exact - cplx(0.5, -0.5)) < 1e-14);
  CounterRng rng(77, 0);
  const cplx est = shadow_overlap_sampled(a, b, 200000, rng);
  CHECK(std::abs(est - exact) < 0.02);
}

TEST_CASE("oracle round trip on random states") {
  CounterRng rng(55, 0);
  const OperatorSet set = pauli_xyz_set();
  Matrix h = random_hermitian(2, rng);
  const ShadowHamiltonian sh = build_shadow_hamiltonian_dense(h, set);
  for (int rep = 0; rep < 5; ++rep) {
    CounterRng sub = rng.split(rep + 1);
    const Vector psi0 = random_state(2, sub);
    const ShadowState st0 = shadow_from_state(psi0, set);
    const double t = 0.5 + rep;
    const ShadowState got = evolve_shadow(sh, st0, t);
    const Vector psit = evolve_full(h, psi0, t);
    const ShadowState want = shadow_from_state(psit, set);
    CHECK(got.normA == doctest::Approx(want.normA).epsilon(1e-10));
    CHECK((got.amplitudes - want.amplitudes).norm() < 1e-9);
  }
}

TEST_SUITE_END();
