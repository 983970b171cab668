#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "shadowsim/bosons.hpp"
#include "shadowsim/expm.hpp"
#include "shadowsim/shadow.hpp"

using namespace shadowsim;
using namespace shadowsim::testing;

namespace {

OscillatorNetwork chain3() {
  OscillatorNetwork net;
  net.masses = (RealVector(3) << 1.0, 2.0, 0.5).finished();
  net.kappa = (RealMatrix(3, 3) << 1.2, 0.7, 0.0,
                                   0.7, 0.9, 0.4,
                                   0.0, 0.4, 1.5).finished();
  return net;
}

void random_phase_space(int n, CounterRng& rng, RealVector& p, RealVector& q) {
  p.resize(n);
  q.resize(n);
  for (int i = 0; i < n; ++i) {
    p[i] = rng.normal();
    q[i] = rng.normal();
  }
}

}  // namespace

TEST_SUITE_BEGIN("bosons");

TEST_CASE("network validation") {
  OscillatorNetwork bad = chain3();
  bad.masses[1] = -1.0;
  CHECK_THROWS_AS(validate_network(bad), SchemaError);
  bad = chain3();
  bad.kappa(0, 1) = 0.9;  // asymmetric
  CHECK_THROWS_AS(validate_network(bad), SchemaError);
  bad = chain3();
  bad.kappa(0, 1) = bad.kappa(1, 0) = -0.5;
  CHECK_THROWS_AS(validate_network(bad), SchemaError);
}

TEST_CASE("factorization reproduces the classical energy") {
  const OscillatorNetwork net = chain3();
  const BosonBasis basis = boson_basis(net);
  // 3 kinetic + 3 on-site + 2 springs.
  CHECK(basis.b.cols() == 8);
  CHECK(basis.labels.front() == "kinetic 1");
  CHECK(basis.labels.back() == "spring (2,3)");

  CounterRng rng(201, 0);
  RealVector p, q;
  random_phase_space(3, rng, p, q);
  RealVector y(6);
  y.head(3) = p;
  y.tail(3) = q;
  const double via_b = 0.5 * y.dot(basis.b * (basis.b.transpose() * y));
  CHECK(std::abs(via_b - classical_energy(net, p, q)) < 1e-12);

  const Vector o = boson_amplitudes(basis, p, q);
  CHECK(std::abs(0.5 * o.squaredNorm() - classical_energy(net, p, q)) < 1e-12);
  CHECK(boson_shadow_state(basis, p, q).normA ==
        doctest::Approx(2.0 * classical_energy(net, p, q)).epsilon(1e-12));
}

TEST_CASE("single oscillator golden generator") {
  OscillatorNetwork net;
  net.masses = RealVector::Ones(1);
  net.kappa = RealMatrix::Ones(1, 1);
  const ShadowHamiltonian sh = boson_shadow(net);
  CHECK(sh.hs.rows() == 2);
  CHECK(std::abs(sh.hs.coeff(0, 1) - cplx(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(sh.hs.coeff(1, 0) - cplx(0.0, 1.0)) < 1e-15);
  CHECK(sh.hermitian_defect == 0.0);

  // Eigenvalues +/- sqrt(kappa / m).
  Eigen::SelfAdjointEigenSolver<Matrix> es(sh.hs.to_dense());
  CHECK(std::abs(es.eigenvalues()[0] + 1.0) < 1e-12);
  CHECK(std::abs(es.eigenvalues()[1] - 1.0) < 1e-12);

  // m = kappa = 1: p(t) = p cos t - q sin t, q(t) = q cos t + p sin t.
  RealVector p = (RealVector(1) << 0.3).finished();
  RealVector q = (RealVector(1) << -1.1).finished();
  const double t = 2.4;
  RealVector pt = p, qt = q;
  classical_evolve(net, pt, qt, t);
  CHECK(std::abs(pt[0] - (p[0] * std::cos(t) - q[0] * std::sin(t))) < 1e-12);
  CHECK(std::abs(qt[0] - (q[0] * std::cos(t) + p[0] * std::sin(t))) < 1e-12);
}

TEST_CASE("eigenvalues scale as sqrt(kappa/m)") {
  OscillatorNetwork net;
  net.masses = (RealVector(1) << 4.0).finished();
  net.kappa = (RealMatrix(1, 1) << 9.0).finished();
  const ShadowHamiltonian sh = boson_shadow(net);
  Eigen::SelfAdjointEigenSolver<Matrix> es(sh.hs.to_dense());
  const double want = std::sqrt(9.0 / 4.0);
  CHECK(std::abs(es.eigenvalues()[0] + want) < 1e-10);
  CHECK(std::abs(es.eigenvalues()[1] - want) < 1e-10);
}

TEST_CASE("shadow dynamics match the classical trajectory") {
  const OscillatorNetwork net = chain3();
  const BosonBasis basis = boson_basis(net);
  const ShadowHamiltonian sh = boson_shadow(net);
  CounterRng rng(202, 0);
  RealVector p, q;
  random_phase_space(3, rng, p, q);
  const double e0 = classical_energy(net, p, q);
  const ShadowState st0 = boson_shadow_state(basis, p, q);

  for (const double t : {0.5, 2.0, 10.0}) {
    const ShadowState got = evolve_shadow(sh, st0, t, 1e-12);
    RealVector pt = p, qt = q;
    classical_evolve(net, pt, qt, t);
    CHECK(std::abs(classical_energy(net, pt, qt) - e0) < 1e-10);
    const ShadowState want = boson_shadow_state(basis, pt, qt);
    CHECK(got.normA == doctest::Approx(want.normA).epsilon(1e-10));
    CHECK((got.amplitudes - want.amplitudes).norm() < 1e-8);
  }
}

TEST_CASE("translation zero mode drifts linearly") {
  OscillatorNetwork net;
  net.masses = (RealVector(2) << 1.0, 3.0).finished();
  net.kappa = (RealMatrix(2, 2) << 0.0, 2.0, 2.0, 0.0).finished();
  const BosonBasis basis = boson_basis(net);
  CHECK(basis.b.cols() == 3);  // 2 kinetic + 1 spring, no on-site terms

  RealVector p = (RealVector(2) << 1.0, -0.2).finished();
  RealVector q = (RealVector(2) << 0.0, 0.7).finished();
  const double ptot = p.sum();
  const double e0 = classical_energy(net, p, q);
  const ShadowState st0 = boson_shadow_state(basis, p, q);
  const ShadowHamiltonian sh = boson_shadow(net);

  const double t = 7.0;
  RealVector pt = p, qt = q;
  classical_evolve(net, pt, qt, t);
  CHECK(std::abs(pt.sum() - ptot) < 1e-10);
  CHECK(std::abs(classical_energy(net, pt, qt) - e0) < 1e-10);
  // Center of mass moves at ptot / mtot.
  const double mtot = net.masses.sum();
  const double com0 = (net.masses[0] * q[0] + net.masses[1] * q[1]) / mtot;
  const double com_t =
      (net.masses[0] * qt[0] + net.masses[1] * qt[1]) / mtot;
  CHECK(std::abs(com_t - (com0 + t * ptot / mtot)) < 1e-10);

  const ShadowState got = evolve_shadow(sh, st0, t, 1e-12);
  const ShadowState want = boson_shadow_state(basis, pt, qt);
  CHECK((got.amplitudes - want.amplitudes).norm() < 1e-8);
}

TEST_CASE("quadratic monitors evolve under the doubled generator") {
  const OscillatorNetwork net = chain3();
  const BosonBasis basis = boson_basis(net);
  const SparseMatrix hs = boson_shadow_hamiltonian(basis);
  const SparseMatrix hs2 = boson_quadratic_hamiltonian(hs);
  CHECK(hermitian_defect(hs2) < 1e-14);

  CounterRng rng(203, 0);
  RealVector p, q;
  random_phase_space(3, rng, p, q);
  const ShadowState quad0 = boson_quadratic_state(basis, p, q);
  const int m_total = static_cast<int>(basis.b.cols());
  CHECK(quad0.amplitudes.size() == m_total * m_total);
  CHECK(boson_quadratic_labels(basis).size() ==
        static_cast<std::size_t>(m_total) * m_total);

  ShadowHamiltonian doubled;
  doubled.labels = boson_quadratic_labels(basis);
  doubled.hs = hs2;
  doubled.hermitian_defect = hermitian_defect(hs2);

  const double t = 1.3;
  const ShadowState got = evolve_shadow(doubled, quad0, t, 1e-12);
  RealVector pt = p, qt = q;
  classical_evolve(net, pt, qt, t);
  const ShadowState want = boson_quadratic_state(basis, pt, qt);
  CHECK(got.normA == doctest::Approx(want.normA).epsilon(1e-9));
  CHECK((got.amplitudes - want.amplitudes).norm() < 1e-8);
}

TEST_CASE("subset energies read off the diagonal slots") {
  const OscillatorNetwork net = chain3();
  const BosonBasis basis = boson_basis(net);
  CounterRng rng(204, 0);
  RealVector p, q;
  random_phase_space(3, rng, p, q);
  const ShadowState quad = boson_quadratic_state(basis, p, q);
  const int m_total = static_cast<int>(basis.b.cols());

  std::vector<int> all(m_total);
  for (int i = 0; i < m_total; ++i) all[i] = i;
  CHECK(std::abs(boson_subset_energy(quad, m_total, all) -
                 classical_energy(net, p, q)) < 1e-10);

  // Column 0 is the kinetic term of site 1.
  CHECK(std::abs(boson_subset_energy(quad, m_total, {0}) -
                 p[0] * p[0] / (2.0 * net.masses[0])) < 1e-12);

  // The last column is the (2,3) spring.
  const double d = q[1] - q[2];
  CHECK(std::abs(boson_subset_energy(quad, m_total, {m_total - 1}) -
                 0.5 * net.kappa(1, 2) * d * d) < 1e-12);

  CHECK_THROWS_AS(boson_subset_energy(quad, m_total, {m_total}), SchemaError);
}

TEST_SUITE_END();
