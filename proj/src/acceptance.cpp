#include "shadowsim/acceptance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

#include "shadowsim/bosons.hpp"
#include "shadowsim/cli.hpp"
#include "shadowsim/correlators.hpp"
#include "shadowsim/expm.hpp"
#include "shadowsim/fermions.hpp"
#include "shadowsim/heisenberg.hpp"
#include "shadowsim/io.hpp"
#include "shadowsim/oracle.hpp"
#include "shadowsim/qubits.hpp"
#include "shadowsim/rng.hpp"
#include "shadowsim/shadow.hpp"

namespace shadowsim {

namespace {

constexpr cplx kI{0.0, 1.0};
const std::vector<double> kTimes{0.5, 2.0, 10.0};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

// ---- random fixtures -------------------------------------------------------

Vector random_state(Eigen::Index dim, CounterRng& rng) {
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = rng.normal_cplx();
  return v / v.norm();
}

Vector random_real_state(Eigen::Index dim, CounterRng& rng) {
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = cplx(rng.normal(), 0.0);
  return v / v.norm();
}

Matrix random_density(Eigen::Index dim, int rank, CounterRng& rng) {
  Matrix g(dim, rank);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (int r = 0; r < rank; ++r) g(i, r) = rng.normal_cplx();
  }
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Matrix random_gamma(int n, CounterRng& rng) {
  RealMatrix k = RealMatrix::Zero(2 * n, 2 * n);
  for (int j = 0; j < 2 * n; ++j) {
    for (int l = j + 1; l < 2 * n; ++l) {
      k(j, l) = rng.normal();
      k(l, j) = -k(j, l);
    }
  }
  return kI * k.cast<cplx>();
}

// Degree-bounded Gamma via d rounds of random pairings.
Matrix bounded_degree_gamma(int two_n, int d, CounterRng& rng) {
  RealMatrix k = RealMatrix::Zero(two_n, two_n);
  std::vector<int> idx(two_n);
  for (int round = 0; round < d; ++round) {
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = two_n - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.uniform() * (i + 1));
      std::swap(idx[i], idx[std::min(j, i)]);
    }
    for (int i = 0; i + 1 < two_n; i += 2) {
      const int a = idx[i], b = idx[i + 1];
      if (k(a, b) == 0.0) {
        const double v = rng.normal();
        k(a, b) = v;
        k(b, a) = -v;
      }
    }
  }
  return kI * k.cast<cplx>();
}

int gamma_degree(const Matrix& gamma) {
  int d = 0;
  for (Eigen::Index j = 0; j < gamma.rows(); ++j) {
    int row = 0;
    for (Eigen::Index l = 0; l < gamma.cols(); ++l) {
      if (l != j && std::abs(gamma(j, l)) > 1e-14) ++row;
    }
    d = std::max(d, row);
  }
  return d;
}

RealMatrix random_fields(int n, CounterRng& rng) {
  RealMatrix w(n, 3);
  for (int j = 0; j < n; ++j) {
    for (int a = 0; a < 3; ++a) w(j, a) = rng.normal();
  }
  return w;
}

OscillatorNetwork random_network(int n, CounterRng& rng) {
  OscillatorNetwork net;
  net.masses = RealVector(n);
  for (int j = 0; j < n; ++j) net.masses[j] = 0.5 + 1.5 * rng.uniform();
  net.kappa = RealMatrix::Zero(n, n);
  for (int j = 0; j + 1 < n; ++j) {
    const double v = 0.2 + rng.uniform();
    net.kappa(j, j + 1) = net.kappa(j + 1, j) = v;
  }
  for (int j = 0; j < n; ++j) {
    if (rng.uniform() < 0.5) net.kappa(j, j) = 0.3 + rng.uniform();
  }
  return net;
}

// Restriction of Gamma to the Majorana modes in J.
Matrix gamma_restrict(const Matrix& gamma, const std::vector<int>& modes) {
  Matrix out = Matrix::Zero(gamma.rows(), gamma.cols());
  for (int j : modes) {
    for (int l : modes) out(j - 1, l - 1) = gamma(j - 1, l - 1);
  }
  return out;
}

// ---- criterion bodies ------------------------------------------------------

// Criteria 1 and 2 read the same instance sweep.
struct EquivalenceSweep {
  double max_err = 0.0;
  double max_defect = 0.0;
  int instances = 0;
};

const EquivalenceSweep& equivalence_sweep() {
  static const EquivalenceSweep sweep = [] {
    EquivalenceSweep s;
    auto track = [&s](double err, double defect) {
      s.max_err = std::max(s.max_err, err);
      s.max_defect = std::max(s.max_defect, defect);
      ++s.instances;
    };
    for (int rep = 0; rep < 20; ++rep) {
      CounterRng rng(0xACC01, rep);
      const int n = 2 + rep % 5;
      const Matrix gamma = random_gamma(n, rng);
      const ShadowHamiltonian sh = fermion_shadow(gamma);
      const OperatorSet set = majorana_pair_set(n);
      const Matrix hd = fermion_hamiltonian_dense(gamma);
      const Vector psi = random_state(Eigen::Index(1) << n, rng);
      const ShadowState st0 = shadow_from_state(psi, set);
      double err = 0.0;
      for (double t : kTimes) {
        const ShadowState ev = evolve_shadow(sh, st0, t);
        const ShadowState orc = shadow_from_state(evolve_full(hd, psi, t), set);
        err = std::max(err, (ev.amplitudes - orc.amplitudes).norm());
      }
      track(err, sh.hermitian_defect);
    }
    for (int rep = 0; rep < 20; ++rep) {
      CounterRng rng(0xACC02, rep);
      const int n = 2 + rep % 5;
      const RealMatrix w = random_fields(n, rng);
      const ShadowHamiltonian sh = one_local_shadow(w);
      const OperatorSet set = one_local_set(n);
      const Matrix hd = one_local_hamiltonian_dense(w);
      const Vector psi = random_state(Eigen::Index(1) << n, rng);
      const ShadowState st0 = shadow_from_state(psi, set);
      double err = 0.0;
      for (double t : kTimes) {
        const ShadowState ev = evolve_shadow(sh, st0, t);
        const ShadowState orc = shadow_from_state(evolve_full(hd, psi, t), set);
        err = std::max(err, (ev.amplitudes - orc.amplitudes).norm());
      }
      track(err, sh.hermitian_defect);
    }
    for (int rep = 0; rep < 20; ++rep) {
      CounterRng rng(0xACC03, rep);
      const int n = 2 + rep % 7;
      const OscillatorNetwork net = random_network(n, rng);
      const BosonBasis basis = boson_basis(net);
      const ShadowHamiltonian sh = boson_shadow(net);
      RealVector p0(n), q0(n);
      for (int j = 0; j < n; ++j) {
        p0[j] = rng.normal();
        q0[j] = rng.normal();
      }
      const ShadowState st0 = boson_shadow_state(basis, p0, q0);
      double err = 0.0;
      for (double t : kTimes) {
        const ShadowState ev = evolve_shadow(sh, st0, t);
        RealVector p = p0, q = q0;
        classical_evolve(net, p, q, t);
        const ShadowState orc = boson_shadow_state(basis, p, q);
        err = std::max(err, (ev.amplitudes - orc.amplitudes).norm());
      }
      track(err, sh.hermitian_defect);
    }
    return s;
  }();
  return sweep;
}

CriterionResult c1_equivalence() {
  const EquivalenceSweep& s = equivalence_sweep();
  CriterionResult r{1, "shadow evolution matches dense/classical oracles"};
  r.pass = s.max_err <= 1e-8 && s.instances == 60;
  r.detail = "max 2-norm error " + fmt(s.max_err) + " over " +
             std::to_string(s.instances) + " instances (gate 1e-8)";
  return r;
}

CriterionResult c2_hermiticity() {
  const EquivalenceSweep& s = equivalence_sweep();
  CriterionResult r{2, "generators Hermitian on orthogonal sets"};
  r.pass = s.max_defect <= 1e-10;
  r.detail = "max hermitian defect " + fmt(s.max_defect) + " (gate 1e-10)";
  return r;
}

CriterionResult c3_fermion_bounds() {
  CriterionResult r{3, "index-level sparsity and entry bounds"};
  int violations = 0;
  int checked = 0;
  double worst_ratio = 0.0;
  for (int d : {2, 3, 4}) {
    for (int n : {50, 120, 200}) {
      CounterRng rng(0xACC3, std::uint64_t(d) * 1000 + n);
      const Matrix gamma = bounded_degree_gamma(2 * n, d, rng);
      const int deg = gamma_degree(gamma);
      const SparseMatrix hs = fermion_shadow_hamiltonian_omp(gamma);
      const double gmax = gamma.cwiseAbs().maxCoeff();
      if (hs.max_row_nnz() > 2 * deg) ++violations;
      if (hs.max_abs() > 2.0 * gmax + 1e-12) ++violations;
      worst_ratio = std::max(worst_ratio, hs.max_abs() / (2.0 * gmax));
      ++checked;
    }
  }
  r.pass = violations == 0 && checked == 9;
  r.detail = std::to_string(violations) + " violations in " +
             std::to_string(checked) + " instances to n=200; max |h|/2|g| " +
             fmt(worst_ratio);
  return r;
}

CriterionResult c4_vacuum_shadow() {
  CriterionResult r{4, "vacuum and product shadows match the oracle"};
  double worst = 0.0;
  double ph_worst = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const OperatorSet set = majorana_pair_set(n);
    const ShadowState built = vacuum_shadow(n);
    const ShadowState orc = shadow_from_state(basis_ket(n, {}), set);
    // global-phase-free distance; the construction is in fact exact
    const cplx ov = orc.amplitudes.dot(built.amplitudes);
    const cplx phase = std::abs(ov) > 0 ? ov / std::abs(ov) : cplx(1.0);
    worst = std::max(worst, (built.amplitudes - phase * orc.amplitudes).norm());
    worst = std::max(worst, std::abs(built.normA - orc.normA));
  }
  for (int n = 2; n <= 5; ++n) {
    CounterRng rng(0xACC4, n);
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<int> occ, comp;
      for (int m = 1; m <= n; ++m) {
        (rng.uniform() < 0.5 ? occ : comp).push_back(m);
      }
      const ShadowState a = product_shadow(n, occ);
      const ShadowState b = product_shadow(n, comp);
      ph_worst =
          std::max(ph_worst, (a.amplitudes + b.amplitudes).norm());
      ph_worst = std::max(ph_worst, std::abs(a.normA - b.normA));
    }
  }
  r.pass = worst <= 1e-10 && ph_worst == 0.0;
  r.detail = "oracle distance " + fmt(worst) +
             " (gate 1e-10); particle-hole defect " + fmt(ph_worst) +
             " (exact)";
  return r;
}

CriterionResult c5_boson_correspondence() {
  CriterionResult r{5, "oscillator shadows track classical trajectories"};
  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    CounterRng rng(0xACC5, rep);
    const int n = 2 + rep % 7;
    const OscillatorNetwork net = random_network(n, rng);
    const BosonBasis basis = boson_basis(net);
    const ShadowHamiltonian sh = boson_shadow(net);
    RealVector p0(n), q0(n);
    for (int j = 0; j < n; ++j) {
      p0[j] = rng.normal();
      q0[j] = rng.normal();
    }
    const ShadowState st0 = boson_shadow_state(basis, p0, q0);
    for (double t : kTimes) {
      const ShadowState ev = evolve_shadow(sh, st0, t);
      RealVector p = p0, q = q0;
      classical_evolve(net, p, q, t);
      const ShadowState orc = boson_shadow_state(basis, p, q);
      worst = std::max(worst, (ev.amplitudes - orc.amplitudes).norm());
    }
  }
  double eig_worst = 0.0;
  const double pairs[4][2] = {{1.0, 1.0}, {4.0, 9.0}, {0.5, 2.0}, {2.0, 5.0}};
  for (const auto& mk : pairs) {
    OscillatorNetwork net;
    net.masses = RealVector::Constant(1, mk[0]);
    net.kappa = RealMatrix::Constant(1, 1, mk[1]);
    const ShadowHamiltonian sh = boson_shadow(net);
    Eigen::SelfAdjointEigenSolver<Matrix> es(sh.hs.to_dense());
    const double omega = std::sqrt(mk[1] / mk[0]);
    eig_worst = std::max(eig_worst, std::abs(es.eigenvalues()[0] + omega));
    eig_worst = std::max(eig_worst, std::abs(es.eigenvalues()[1] - omega));
  }
  r.pass = worst <= 1e-8 && eig_worst <= 1e-10;
  r.detail = "trajectory error " + fmt(worst) +
             " (gate 1e-8); eigenvalue error " + fmt(eig_worst) +
             " (gate 1e-10)";
  return r;
}

CriterionResult c6_subset_energies() {
  CriterionResult r{6, "subset energies match oracle, exact and sampled"};
  double exact_worst = 0.0;
  double shot_margin = 0.0;  // max of |error| / bound; pass needs < 1
  constexpr std::uint64_t kShots = 10000;

  {  // fermion, evolved product state
    const int n = 4;
    CounterRng rng(0xACC61, 0);
    const Matrix gamma = random_gamma(n, rng);
    const ShadowHamiltonian sh = fermion_shadow(gamma);
    const OperatorSet set = majorana_pair_set(n);
    const Matrix hd = fermion_hamiltonian_dense(gamma);
    const std::vector<int> occ{1, 3};
    const Vector psi0 = basis_ket(n, occ);
    const ShadowState st0 = product_shadow(n, occ);
    const std::vector<std::vector<int>> subsets{
        {1, 2, 3, 4, 5, 6, 7, 8}, {1, 2, 5, 6}, {1, 2, 3}};
    for (double t : {0.0, 0.7}) {
      const ShadowState st = evolve_shadow(sh, st0, t);
      const Vector psi = evolve_full(hd, psi0, t);
      for (const auto& sub : subsets) {
        const double e = subset_energy(gamma, st, sub);
        const Matrix hj = fermion_hamiltonian_dense(gamma_restrict(gamma, sub));
        const double eo = (psi.adjoint() * hj * psi)(0, 0).real();
        exact_worst = std::max(exact_worst, std::abs(e - eo));

        CounterRng srng(0xACC62,
                        static_cast<std::uint64_t>(t * 10.0) * 100 + sub.size());
        const double es = subset_energy_sampled(gamma, st, sub, kShots, srng);
        double g2 = 0.0;
        for (std::size_t u = 0; u < sub.size(); ++u) {
          for (std::size_t v = u + 1; v < sub.size(); ++v) {
            g2 += std::norm(gamma(sub[u] - 1, sub[v] - 1));
          }
        }
        const double bound =
            4.0 * std::sqrt(g2) * std::sqrt(st.normA) / std::sqrt(double(kShots));
        if (bound > 0) {
          shot_margin = std::max(shot_margin, std::abs(es - e) / bound);
        }
      }
    }
  }
  {  // fermion vacuum of a single mode: the gamma part carries -omega/2
    const double omega = 1.7;
    Matrix alpha = Matrix::Constant(1, 1, omega);
    const CanonicalGamma cg = gamma_from_hopping(alpha, Matrix::Zero(1, 1));
    const double e = subset_energy(cg.gamma, vacuum_shadow(1), {1, 2});
    exact_worst = std::max(exact_worst, std::abs(e + omega / 2.0));
  }
  {  // bosons, evolved quadratic set
    CounterRng rng(0xACC63, 0);
    const OscillatorNetwork net = random_network(3, rng);
    const BosonBasis basis = boson_basis(net);
    const int m = static_cast<int>(basis.labels.size());
    ShadowHamiltonian sh = boson_shadow(net);
    sh.hs = boson_quadratic_hamiltonian(sh.hs);
    sh.labels = boson_quadratic_labels(basis);
    sh.hermitian_defect = hermitian_defect(sh.hs);
    RealVector p0(3), q0(3);
    for (int j = 0; j < 3; ++j) {
      p0[j] = rng.normal();
      q0[j] = rng.normal();
    }
    const ShadowState st0 = boson_quadratic_state(basis, p0, q0);
    std::vector<int> full(m);
    std::iota(full.begin(), full.end(), 0);
    const std::vector<std::vector<int>> subsets{full, {0}, {1, 2}, {m - 1}};
    for (double t : {0.0, 1.1}) {
      const ShadowState st = evolve_shadow(sh, st0, t);
      RealVector p = p0, q = q0;
      classical_evolve(net, p, q, t);
      const Vector o = boson_amplitudes(basis, p, q);
      for (const auto& sub : subsets) {
        const double e = boson_subset_energy(st, m, sub);
        double eo = 0.0;
        for (int c : sub) eo += 0.5 * std::norm(o[c]);
        exact_worst = std::max(exact_worst, std::abs(e - eo));

        CounterRng srng(0xACC64,
                        static_cast<std::uint64_t>(t * 10.0) * 100 + sub.size());
        const double es =
            boson_subset_energy_sampled(st, m, sub, kShots, srng);
        const double bound = 4.0 * 0.5 * std::sqrt(double(sub.size())) *
                             std::sqrt(st.normA) / std::sqrt(double(kShots));
        shot_margin = std::max(shot_margin, std::abs(es - e) / bound);
      }
    }
  }
  r.pass = exact_worst <= 1e-8 && shot_margin < 1.0;
  r.detail = "exact error " + fmt(exact_worst) +
             " (gate 1e-8); shot error at " + fmt(shot_margin) +
             " of the 4/sqrt(shots) bound";
  return r;
}

CriterionResult c7_bell_lemma() {
  CriterionResult r{7, "Bell rotation reproduces full-Pauli shadows"};
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    CounterRng rng(0xACC7, rep);
    const int n = 1 + rep % 3;
    const OperatorSet set = full_pauli_set(n);
    const Vector psi = random_state(Eigen::Index(1) << n, rng);
    const ShadowState via = shadow_via_bell(n, psi);
    const ShadowState ref = shadow_from_state(psi, set);
    worst = std::max(worst, (via.amplitudes - ref.amplitudes).norm());
    worst =
        std::max(worst, std::abs(via.normA - std::pow(2.0, n)));

    const Matrix rho = random_density(Eigen::Index(1) << n, 2, rng);
    const ShadowState mvia = shadow_via_bell_density(n, rho);
    const ShadowState mref = shadow_from_density(rho, set);
    worst = std::max(worst, (mvia.amplitudes - mref.amplitudes).norm());
    const double pur = (rho * rho).trace().real();
    worst = std::max(worst, std::abs(mvia.normA - std::pow(2.0, n) * pur));
  }
  r.pass = worst <= 1e-10;
  r.detail = "max error " + fmt(worst) + " over 50 states (gate 1e-10)";
  return r;
}

CriterionResult c8_swap_test() {
  CriterionResult r{8, "swap test separates real from complex amplitudes"};
  CounterRng rng_real(0xACC8, 1);
  CounterRng rng_cplx(0xACC8, 2);
  const Vector psi_real = random_real_state(8, rng_real);
  const double est_real = swap_test_estimate(psi_real, 10000, rng_real);
  Vector psi_i(2);
  psi_i << cplx(1.0, 0.0), cplx(0.0, 1.0);
  psi_i /= std::sqrt(2.0);
  const double est_cplx = swap_test_estimate(psi_i, 10000, rng_cplx);
  r.pass = est_real >= 0.95 && est_cplx <= 0.2;
  r.detail = "real-amplitude estimate " + fmt(est_real) +
             " (>= 0.95); (|0>+i|1>)/sqrt2 estimate " + fmt(est_cplx) +
             " (<= 0.2)";
  return r;
}

CriterionResult c9_correlators() {
  CriterionResult r{9, "two-time correlators match Heisenberg oracle"};
  const std::vector<double> grid{0.0, 0.7, 1.4};
  double worst = 0.0;
  {  // fermion n = 3, vacuum
    const int n = 3;
    CounterRng rng(0xACC9, 1);
    const Matrix gamma = random_gamma(n, rng);
    const ShadowHamiltonian sh = fermion_shadow(gamma);
    const OperatorSet set = majorana_pair_set(n);
    const Matrix hd = fermion_hamiltonian_dense(gamma);
    const Vector vac = basis_ket(n, {});
    const Matrix rho = vac * vac.adjoint();
    const Matrix c0 = fermion_vacuum_correlator_matrix(n);
    for (double t : grid) {
      for (double tp : grid) {
        const Matrix c = evolve_correlator(sh.hs, c0, t, tp);
        const Matrix co = correlator_oracle(hd, set, rho, t, tp);
        worst = std::max(worst, (c - co).cwiseAbs().maxCoeff());
      }
    }
  }
  {  // qubit n = 2, one-local set, random mixed state
    const int n = 2;
    CounterRng rng(0xACC9, 2);
    const RealMatrix w = random_fields(n, rng);
    const ShadowHamiltonian sh = one_local_shadow(w);
    const OperatorSet set = one_local_set(n);
    const Matrix hd = one_local_hamiltonian_dense(w);
    const Matrix rho = random_density(4, 3, rng);
    const Matrix c0 = correlator_init_dense(set, rho);
    for (double t : grid) {
      for (double tp : grid) {
        const Matrix c = evolve_correlator(sh.hs, c0, t, tp);
        const Matrix co = correlator_oracle(hd, set, rho, t, tp);
        worst = std::max(worst, (c - co).cwiseAbs().maxCoeff());
      }
    }
  }
  r.pass = worst <= 1e-8;
  r.detail = "max grid error " + fmt(worst) + " on 3x3 grids (gate 1e-8)";
  return r;
}

std::string random_word(int n, CounterRng& rng) {
  const char axes[3] = {'X', 'Y', 'Z'};
  const int q = 1 + static_cast<int>(rng.uniform() * n);
  return std::string(1, axes[static_cast<int>(rng.uniform() * 3)]) +
         std::to_string(std::min(q, n));
}

CriterionResult c10_operator_evolution() {
  CriterionResult r{10, "Heisenberg flow: continuous, Clifford, light cone"};
  double cont_worst = 0.0;
  {
    const int n = 2;
    const std::vector<std::pair<std::string, cplx>> hdef{
        {"X1", 0.9}, {"Z1Z2", -0.7}, {"Y2", 0.55}};
    const auto terms = collect_pauli_terms(n, hdef);
    const SparseMatrix hs = full_pauli_shadow_hamiltonian(n, terms);
    const Matrix hd = pauli_terms_dense(n, terms);
    const PauliMap op = pauli_map_single(n, "X1");
    const Vector z0 = pauli_map_to_vector(op);
    for (double t : {0.5, 2.0}) {
      const Vector z = heisenberg_continuous(hs, z0, t);
      const Vector zo =
          heisenberg_oracle_coefficients(n, dense_expm(hd, t),
                                         pauli_map_dense(op));
      cont_worst = std::max(cont_worst, (z - zo).norm());
    }
  }

  int clifford_fails = 0;
  const std::vector<std::string> cliff1{"H", "S", "X", "Y", "Z"};
  const std::vector<std::string> cliff2{"CNOT", "CZ", "SWAP"};
  for (int rep = 0; rep < 20; ++rep) {
    CounterRng rng(0xACCA, rep);
    const int n = 2 + rep % 4;
    std::vector<Gate> circuit;
    const int depth = 3 + static_cast<int>(rng.uniform() * 10);
    for (int g = 0; g < depth; ++g) {
      Gate gate;
      if (rng.uniform() < 0.4) {
        gate.name = cliff2[static_cast<int>(rng.uniform() * cliff2.size())];
        const int a = 1 + static_cast<int>(rng.uniform() * n);
        int b = 1 + static_cast<int>(rng.uniform() * n);
        while (b == a) b = 1 + static_cast<int>(rng.uniform() * n);
        gate.qubits = {a, b};
      } else {
        gate.name = cliff1[static_cast<int>(rng.uniform() * cliff1.size())];
        gate.qubits = {1 + static_cast<int>(rng.uniform() * n)};
      }
      circuit.push_back(gate);
    }
    const PauliMap fin =
        heisenberg_circuit(pauli_map_single(n, random_word(n, rng)), circuit);
    if (fin.terms.size() != 1) {
      ++clifford_fails;
    } else {
      // stored coefficients sit on X^x Z^z; the Hermitian word carries
      // i^{|x & z|}, so a signed Pauli means c / i^{|x & z|} = +/-1
      const auto& [key, c] = *fin.terms.begin();
      const std::uint64_t mask = (std::uint64_t(1) << n) - 1;
      const int o = std::popcount((key >> n) & key & mask);
      static const cplx iphase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      const cplx ch = c / iphase[o & 3];
      if (std::abs(std::abs(ch.real()) - 1.0) > 1e-12 ||
          std::abs(ch.imag()) > 1e-12) {
        ++clifford_fails;
      }
    }
  }

  int cone_violations = 0;
  for (int rep = 0; rep < 100; ++rep) {
    CounterRng rng(0xACCB, rep);
    const int n = 3 + rep % 3;
    const int depth = 1 + rep % 4;
    std::vector<Gate> circuit;
    for (int layer = 0; layer < depth; ++layer) {
      for (int a = 1 + layer % 2; a + 1 <= n; a += 2) {
        Gate gate;
        gate.name = cliff2[static_cast<int>(rng.uniform() * cliff2.size())];
        gate.qubits = {a, a + 1};
        circuit.push_back(gate);
      }
    }
    const int site = 1 + static_cast<int>(rng.uniform() * n);
    const PauliMap fin = heisenberg_circuit(
        pauli_map_single(n, "Z" + std::to_string(site)), circuit);
    const std::vector<int> sup = support_qubits(fin);
    const std::vector<int> cone = light_cone(n, circuit, {site});
    for (int q : sup) {
      if (std::abs(q - site) > depth) ++cone_violations;
      if (std::find(cone.begin(), cone.end(), q) == cone.end()) {
        ++cone_violations;
      }
    }
  }

  r.pass = cont_worst <= 1e-8 && clifford_fails == 0 && cone_violations == 0;
  r.detail = "continuous error " + fmt(cont_worst) + " (gate 1e-8); " +
             std::to_string(clifford_fails) + " non-single-Pauli Cliffords; " +
             std::to_string(cone_violations) + " light-cone violations";
  return r;
}

CriterionResult c11_leakage() {
  CriterionResult r{11, "leakage zero on quadratic, flagged on quartic"};
  const int n = 3;
  CounterRng rng(0xACCC, 0);
  const Matrix gamma = random_gamma(n, rng);
  const ShadowHamiltonian sh = fermion_shadow(gamma);
  const OperatorSet set = majorana_pair_set(n);
  const Matrix hd = fermion_hamiltonian_dense(gamma);
  const double quad_leak = leakage_diagnostic(hd, set, sh.hs);
  const Matrix hq = hd + quartic_term_dense(n, {1, 2, 3, 4, 0.8});
  const double quartic_leak = leakage_diagnostic(hq, set, sh.hs);

  // CLI refusal: a quartic term in the problem file must exit 3 and leave
  // the leakage value in the report.
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / "shadowsim_acceptance_c11";
  fs::create_directories(dir);
  const fs::path input = dir / "quartic.json";
  {
    std::ofstream out(input);
    out << R"({"type": "fermion", "n": 3,
               "gamma": [[1, 2, 0.0, 0.6], [3, 5, 0.0, -0.4]],
               "quartic": [[1, 2, 3, 4, 0.8]],
               "initial": "vacuum", "times": [0.5]})";
  }
  const int code = cli_main({"run", "--input", input.string(),
                             "--output-dir", (dir / "out").string()});
  double reported_leak = 0.0;
  try {
    const io::json rep = io::load_json_file((dir / "out" / "report.json").string());
    if (rep.contains("leakage")) reported_leak = rep["leakage"].get<double>();
  } catch (const Error&) {
  }
  fs::remove_all(dir);

  r.pass = quad_leak <= 1e-10 && quartic_leak > 0.1 && code == 3 &&
           reported_leak > 0.1;
  r.detail = "quadratic " + fmt(quad_leak) + " (gate 1e-10); quartic " +
             fmt(quartic_leak) + " (> 0.1); CLI exit " + std::to_string(code) +
             " with reported leakage " + fmt(reported_leak);
  return r;
}

CriterionResult timed(CriterionResult (*fn)(), int id, const char* name) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = fn();
  } catch (const std::exception& e) {
    r.id = id;
    r.name = name;
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  out.push_back(timed(c1_equivalence, 1, "equivalence"));
  out.push_back(timed(c2_hermiticity, 2, "hermiticity"));
  out.push_back(timed(c3_fermion_bounds, 3, "fermion bounds"));
  out.push_back(timed(c4_vacuum_shadow, 4, "vacuum shadow"));
  out.push_back(timed(c5_boson_correspondence, 5, "boson correspondence"));
  out.push_back(timed(c6_subset_energies, 6, "subset energies"));
  out.push_back(timed(c7_bell_lemma, 7, "Bell rotation"));
  out.push_back(timed(c8_swap_test, 8, "swap test"));
  out.push_back(timed(c9_correlators, 9, "correlators"));
  out.push_back(timed(c10_operator_evolution, 10, "operator evolution"));
  out.push_back(timed(c11_leakage, 11, "leakage"));
  // criterion 1 carries its own runtime budget
  for (auto& r : out) {
    if (r.id == 1 && r.seconds > 60.0) {
      r.pass = false;
      r.detail += "; runtime " + fmt(r.seconds) + " s exceeds 60 s";
    }
  }
  return out;
}

int print_acceptance(std::ostream& out) {
  const std::vector<CriterionResult> results = run_acceptance();
  int failed = 0;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name
        << " -- " << r.detail << " (" << fmt(r.seconds) << " s)\n";
    if (!r.pass) ++failed;
  }
  out << (failed == 0 ? "acceptance: all criteria passed\n"
                      : "acceptance: " + std::to_string(failed) +
                            " criteria FAILED\n");
  return failed == 0 ? 0 : 1;
}

}  // namespace shadowsim
