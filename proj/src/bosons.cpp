#include "shadowsim/bosons.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace shadowsim {

namespace {

constexpr cplx kI{0.0, 1.0};

int network_size(const OscillatorNetwork& net) {
  return static_cast<int>(net.masses.size());
}

double kappa_scale(const RealMatrix& kappa) {
  return std::max(1.0, kappa.cwiseAbs().maxCoeff());
}

}  // namespace

void validate_network(const OscillatorNetwork& net) {
  const int n = network_size(net);
  require(n >= 1, "oscillator: need at least one site");
  require(net.kappa.rows() == n && net.kappa.cols() == n,
          "oscillator: kappa must be n x n");
  for (int j = 0; j < n; ++j) {
    require(net.masses[j] > 0.0 && std::isfinite(net.masses[j]),
            "oscillator: masses must be positive");
  }
  const double scale = kappa_scale(net.kappa);
  require((net.kappa - net.kappa.transpose()).cwiseAbs().maxCoeff() <=
              1e-12 * scale,
          "oscillator: kappa must be symmetric");
  require(net.kappa.minCoeff() >= -1e-12 * scale,
          "oscillator: couplings must be nonnegative");
}

BosonBasis boson_basis(const OscillatorNetwork& net) {
  validate_network(net);
  const int n = network_size(net);
  const double scale = kappa_scale(net.kappa);

  BosonBasis basis;
  basis.n = n;
  std::vector<RealVector> cols;
  for (int j = 0; j < n; ++j) {
    RealVector c = RealVector::Zero(2 * n);
    c[j] = 1.0 / std::sqrt(net.masses[j]);
    cols.push_back(c);
    basis.labels.push_back("kinetic " + std::to_string(j + 1));
  }
  for (int j = 0; j < n; ++j) {
    if (net.kappa(j, j) <= 1e-12 * scale) continue;
    RealVector c = RealVector::Zero(2 * n);
    c[n + j] = std::sqrt(net.kappa(j, j));
    cols.push_back(c);
    basis.labels.push_back("diag " + std::to_string(j + 1));
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      if (net.kappa(j, k) <= 1e-12 * scale) continue;
      RealVector c = RealVector::Zero(2 * n);
      c[n + j] = std::sqrt(net.kappa(j, k));
      c[n + k] = -std::sqrt(net.kappa(j, k));
      cols.push_back(c);
      basis.labels.push_back("spring (" + std::to_string(j + 1) + "," +
                             std::to_string(k + 1) + ")");
    }
  }
  basis.b.resize(2 * n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t m = 0; m < cols.size(); ++m) {
    basis.b.col(static_cast<Eigen::Index>(m)) = cols[m];
  }
  return basis;
}

SparseMatrix boson_shadow_hamiltonian(const BosonBasis& basis) {
  const int n = basis.n;
  const int m_count = static_cast<int>(basis.b.cols());
  // Omega maps (p, q) -> (-q, p); i B^T Omega B stays exactly sparse.
  RealMatrix omega_b(2 * n, m_count);
  omega_b.topRows(n) = -basis.b.bottomRows(n);
  omega_b.bottomRows(n) = basis.b.topRows(n);
  const RealMatrix hs_real = basis.b.transpose() * omega_b;
  std::vector<Triplet> trips;
  for (int r = 0; r < m_count; ++r) {
    for (int c = 0; c < m_count; ++c) {
      if (hs_real(r, c) != 0.0) trips.push_back({r, c, kI * hs_real(r, c)});
    }
  }
  return SparseMatrix::from_triplets(m_count, m_count, std::move(trips));
}

ShadowHamiltonian boson_shadow(const OscillatorNetwork& net) {
  const BosonBasis basis = boson_basis(net);
  ShadowHamiltonian sh;
  sh.labels = basis.labels;
  sh.hs = boson_shadow_hamiltonian(basis);
  sh.hermitian_defect = hermitian_defect(sh.hs);
  sh.leakage = 0.0;  // the linear span of B^T Y is invariant identically
  return sh;
}

Vector boson_amplitudes(const BosonBasis& basis, const RealVector& p,
                        const RealVector& q) {
  const int n = basis.n;
  require(p.size() == n && q.size() == n, "oscillator: phase-space size mismatch");
  RealVector y(2 * n);
  y.head(n) = p;
  y.tail(n) = q;
  return (basis.b.transpose() * y).cast<cplx>();
}

ShadowState boson_shadow_state(const BosonBasis& basis, const RealVector& p,
                               const RealVector& q) {
  return shadow_from_expectations(basis.labels, boson_amplitudes(basis, p, q));
}

double classical_energy(const OscillatorNetwork& net, const RealVector& p,
                        const RealVector& q) {
  validate_network(net);
  const int n = network_size(net);
  require(p.size() == n && q.size() == n, "oscillator: phase-space size mismatch");
  double e = 0.0;
  for (int j = 0; j < n; ++j) {
    e += p[j] * p[j] / (2.0 * net.masses[j]) +
         0.5 * net.kappa(j, j) * q[j] * q[j];
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const double d = q[j] - q[k];
      e += 0.5 * net.kappa(j, k) * d * d;
    }
  }
  return e;
}

void classical_evolve(const OscillatorNetwork& net, RealVector& p,
                      RealVector& q, double t) {
  validate_network(net);
  const int n = network_size(net);
  require(p.size() == n && q.size() == n, "oscillator: phase-space size mismatch");

  RealMatrix k = RealMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    double diag = net.kappa(j, j);
    for (int c = 0; c < n; ++c) {
      if (c == j) continue;
      diag += net.kappa(j, c);
      k(j, c) = -net.kappa(j, c);
    }
    k(j, j) = diag;
  }
  const RealVector sqrt_m = net.masses.cwiseSqrt();
  const RealMatrix w =
      sqrt_m.cwiseInverse().asDiagonal() * k * sqrt_m.cwiseInverse().asDiagonal();

  Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (w + w.transpose()));
  require(es.info() == Eigen::Success, "oscillator: eigensolver failed");
  const RealMatrix& v = es.eigenvectors();
  const RealVector& d = es.eigenvalues();

  RealVector u = v.transpose() * (sqrt_m.asDiagonal() * q);
  RealVector wv = v.transpose() * (p.cwiseQuotient(sqrt_m));
  const double wscale = std::max(1.0, d.cwiseAbs().maxCoeff());
  for (int i = 0; i < n; ++i) {
    if (d[i] <= 1e-12 * wscale) {  // translation mode
      u[i] += t * wv[i];
      continue;
    }
    const double om = std::sqrt(d[i]);
    const double u0 = u[i], w0 = wv[i];
    u[i] = std::cos(om * t) * u0 + std::sin(om * t) / om * w0;
    wv[i] = -om * std::sin(om * t) * u0 + std::cos(om * t) * w0;
  }
  q = (v * u).cwiseQuotient(sqrt_m);
  p = (v * wv).cwiseProduct(sqrt_m);
}

Vector boson_quadratic_amplitudes(const Vector& o) {
  const Eigen::Index m = o.size();
  Vector out(m * m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) out[a * m + b] = o[a] * o[b];
  }
  return out;
}

SparseMatrix boson_quadratic_hamiltonian(const SparseMatrix& hs) {
  return sparse_kron_sum(hs, hs);
}

std::vector<std::string> boson_quadratic_labels(const BosonBasis& basis) {
  std::vector<std::string> out;
  out.reserve(basis.labels.size() * basis.labels.size());
  for (const auto& a : basis.labels) {
    for (const auto& b : basis.labels) out.push_back(a + " * " + b);
  }
  return out;
}

ShadowState boson_quadratic_state(const BosonBasis& basis, const RealVector& p,
                                  const RealVector& q) {
  return shadow_from_expectations(
      boson_quadratic_labels(basis),
      boson_quadratic_amplitudes(boson_amplitudes(basis, p, q)));
}

double boson_subset_energy(const ShadowState& quad, int m_total,
                           const std::vector<int>& columns) {
  require(quad.amplitudes.size() == static_cast<Eigen::Index>(m_total) * m_total,
          "oscillator: quadratic state does not match basis size");
  std::vector<int> sorted = columns;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "oscillator: subset lists a column twice");
  require(sorted.empty() || (sorted.front() >= 0 && sorted.back() < m_total),
          "oscillator: subset column out of range");
  cplx acc = 0.0;
  for (int m : sorted) acc += quad.amplitudes[static_cast<Eigen::Index>(m) * m_total + m];
  return 0.5 * std::sqrt(quad.normA) * acc.real();
}

double boson_subset_energy_sampled(const ShadowState& quad, int m_total,
                                   const std::vector<int>& columns,
                                   std::uint64_t shots, CounterRng& rng) {
  require(shots > 0, "oscillator: shots must be positive");
  if (columns.empty()) return 0.0;
  // E_I = G sqrt(A) Re<psi_I|st> with psi_I the uniform diagonal-slot
  // indicator over I and G = sqrt(|I|) / 2.
  const double exact = boson_subset_energy(quad, m_total, columns);
  const double big_g = 0.5 * std::sqrt(static_cast<double>(columns.size()));
  const double scale = big_g * std::sqrt(quad.normA);
  const double p = std::clamp((1.0 + exact / scale) / 2.0, 0.0, 1.0);
  const double hits = static_cast<double>(rng.binomial(shots, p));
  return scale * (2.0 * hits / static_cast<double>(shots) - 1.0);
}

}  // namespace shadowsim
