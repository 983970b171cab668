#include "shadowsim/fermions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "shadowsim/expm.hpp"
#include "shadowsim/oracle.hpp"

namespace shadowsim {

namespace {

// gamma must be Hermitian, purely imaginary, zero diagonal; returns n.
int check_canonical(const Matrix& gamma) {
  require(gamma.rows() == gamma.cols() && gamma.rows() >= 2 &&
              gamma.rows() % 2 == 0,
          "fermion: gamma must be square with even dimension 2n >= 2");
  const int n = static_cast<int>(gamma.rows()) / 2;
  const double scale = std::max(1.0, gamma.cwiseAbs().maxCoeff());
  if (hermitian_defect(gamma) > 1e-12 * scale) {
    throw NonHermitianError("fermion: gamma is not Hermitian");
  }
  require(gamma.real().cwiseAbs().maxCoeff() <= 1e-12 * scale,
          "fermion: gamma must be purely imaginary; use canonicalize_gamma");
  require(gamma.diagonal().cwiseAbs().maxCoeff() <= 1e-12 * scale,
          "fermion: gamma must have zero diagonal");
  return n;
}

int offdiag_degree(const Matrix& gamma) {
  int best = 0;
  for (Eigen::Index r = 0; r < gamma.rows(); ++r) {
    int deg = 0;
    for (Eigen::Index c = 0; c < gamma.cols(); ++c) {
      if (c != r && gamma(r, c) != cplx(0.0, 0.0)) ++deg;
    }
    best = std::max(best, deg);
  }
  return best;
}

// c_p c_q for p != q, folded onto the ordered pair basis.
struct Folded {
  int idx;
  double sign;
};
Folded fold_pair(int n, int p, int q) {
  if (p < q) return {majorana_pair_index(n, p, q), 1.0};
  return {majorana_pair_index(n, q, p), -1.0};
}

void check_shadow_bounds(const SparseMatrix& hs, const Matrix& gamma) {
  const int deg = offdiag_degree(gamma);
  const double gmax = gamma.size() ? gamma.cwiseAbs().maxCoeff() : 0.0;
  if (hs.max_row_nnz() > 2 * deg || hs.max_abs() > 2.0 * gmax + 1e-12) {
    throw Error("fermion: shadow generator violates its sparsity/norm bounds");
  }
}

constexpr cplx kI{0.0, 1.0};

Matrix kron_chain(const std::vector<const Matrix*>& factors) {
  Matrix out = Matrix::Identity(1, 1);
  for (const Matrix* f : factors) out = kron(out, *f);
  return out;
}

}  // namespace

int majorana_pair_count(int n) {
  require(n >= 1, "fermion: need at least one mode");
  return n * (2 * n - 1);
}

int majorana_pair_index(int n, int j, int k) {
  require(j >= 1 && j < k && k <= 2 * n, "fermion: bad Majorana pair");
  return (j - 1) * 2 * n - (j - 1) * j / 2 + (k - j) - 1;
}

std::pair<int, int> majorana_pair_from_index(int n, int idx) {
  require(idx >= 0 && idx < majorana_pair_count(n),
          "fermion: pair index out of range");
  int j = 1;
  while (idx >= 2 * n - j) {
    idx -= 2 * n - j;
    ++j;
  }
  return {j, j + 1 + idx};
}

std::string majorana_pair_label(int j, int k) {
  return "c" + std::to_string(j) + "c" + std::to_string(k);
}

std::vector<std::string> majorana_pair_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(majorana_pair_count(n));
  for (int j = 1; j <= 2 * n; ++j) {
    for (int k = j + 1; k <= 2 * n; ++k) labels.push_back(majorana_pair_label(j, k));
  }
  return labels;
}

CanonicalGamma canonicalize_gamma(const Matrix& gamma_in) {
  require(gamma_in.rows() == gamma_in.cols() && gamma_in.rows() >= 2 &&
              gamma_in.rows() % 2 == 0,
          "fermion: gamma must be square with even dimension 2n >= 2");
  const double scale = std::max(1.0, gamma_in.cwiseAbs().maxCoeff());
  if (hermitian_defect(gamma_in) > 1e-10 * scale) {
    throw NonHermitianError("fermion: gamma is not Hermitian");
  }
  const RealMatrix re = 0.5 * (gamma_in.real() + gamma_in.real().transpose());
  RealMatrix im = 0.5 * (gamma_in.imag() - gamma_in.imag().transpose());
  im.diagonal().setZero();
  CanonicalGamma out;
  out.gamma = kI * im.cast<cplx>();
  out.offset = 0.5 * re.trace();
  return out;
}

CanonicalGamma gamma_from_hopping(const Matrix& alpha, const Matrix& beta) {
  require(alpha.rows() == alpha.cols() && alpha.rows() >= 1,
          "fermion: alpha must be square");
  require(beta.rows() == alpha.rows() && beta.cols() == alpha.cols(),
          "fermion: beta must match alpha in shape");
  const int n = static_cast<int>(alpha.rows());
  const double scale =
      std::max(1.0, std::max(alpha.cwiseAbs().maxCoeff(), beta.cwiseAbs().maxCoeff()));
  if (hermitian_defect(alpha) > 1e-10 * scale) {
    throw NonHermitianError("fermion: alpha is not Hermitian");
  }
  require((beta + beta.transpose()).cwiseAbs().maxCoeff() <= 1e-10 * scale,
          "fermion: beta must be antisymmetric");

  // a_j = (c_{2j-1} + i c_{2j}) / 2 and its adjoint, as mode/weight pairs.
  auto lower = [](int j) {
    return std::array<std::pair<int, cplx>, 2>{{{2 * j - 1, 0.5}, {2 * j, 0.5 * kI}}};
  };
  auto raise = [](int j) {
    return std::array<std::pair<int, cplx>, 2>{{{2 * j - 1, 0.5}, {2 * j, -0.5 * kI}}};
  };

  Matrix k2 = Matrix::Zero(2 * n, 2 * n);
  cplx scalar = 0.0;
  auto accumulate = [&](cplx coef, const auto& left, const auto& right) {
    if (coef == cplx(0.0, 0.0)) return;
    for (const auto& [p, wl] : left) {
      for (const auto& [q, wr] : right) {
        const cplx c = coef * wl * wr;
        if (p == q) {
          scalar += c;
        } else {
          k2(p - 1, q - 1) += c;
        }
      }
    }
  };

  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      accumulate(alpha(j - 1, k - 1), raise(j), lower(k));
      accumulate(0.5 * beta(j - 1, k - 1), raise(j), raise(k));
      accumulate(-0.5 * std::conj(beta(j - 1, k - 1)), lower(j), lower(k));
    }
  }
  require(std::abs(scalar.imag()) <= 1e-12 * scale,
          "fermion: scalar part failed to come out real");

  // Fold sum_{p != q} K_pq c_p c_q onto ordered pairs: gamma'_pq = K_pq - K_qp.
  Matrix gamma = Matrix::Zero(2 * n, 2 * n);
  for (int p = 1; p <= 2 * n; ++p) {
    for (int q = p + 1; q <= 2 * n; ++q) {
      const cplx g = k2(p - 1, q - 1) - k2(q - 1, p - 1);
      gamma(p - 1, q - 1) = g;
      gamma(q - 1, p - 1) = -g;
    }
  }
  CanonicalGamma out = canonicalize_gamma(gamma);
  out.offset += scalar.real();
  return out;
}

SparseMatrix fermion_shadow_hamiltonian_serial(const Matrix& gamma) {
  const int n = check_canonical(gamma);
  const int m_count = majorana_pair_count(n);
  std::vector<Triplet> trips;
  for (int a = 1; a <= 2 * n; ++a) {
    for (int b = a + 1; b <= 2 * n; ++b) {
      const int row = majorana_pair_index(n, a, b);
      for (int j = 1; j <= 2 * n; ++j) {
        if (j == a || j == b) continue;
        const cplx gja = gamma(j - 1, a - 1);
        if (gja != cplx(0.0, 0.0)) {
          const Folded f = fold_pair(n, j, b);
          trips.push_back({row, f.idx, -2.0 * f.sign * gja});
        }
        const cplx gjb = gamma(j - 1, b - 1);
        if (gjb != cplx(0.0, 0.0)) {
          const Folded f = fold_pair(n, a, j);
          trips.push_back({row, f.idx, -2.0 * f.sign * gjb});
        }
      }
    }
  }
  SparseMatrix hs = SparseMatrix::from_triplets(m_count, m_count, std::move(trips));
  check_shadow_bounds(hs, gamma);
  return hs;
}

SparseMatrix fermion_shadow_hamiltonian_omp(const Matrix& gamma) {
  const int n = check_canonical(gamma);
  const int m_count = majorana_pair_count(n);

  std::vector<std::vector<int>> adj(2 * n + 1);
  for (int p = 1; p <= 2 * n; ++p) {
    for (int j = 1; j <= 2 * n; ++j) {
      if (j != p && gamma(j - 1, p - 1) != cplx(0.0, 0.0)) adj[p].push_back(j);
    }
  }

  std::vector<int> row_ptr(static_cast<std::size_t>(m_count) + 1, 0);
#pragma omp parallel for schedule(static)
  for (int row = 0; row < m_count; ++row) {
    const auto [a, b] = majorana_pair_from_index(n, row);
    int cnt = static_cast<int>(adj[a].size() + adj[b].size());
    if (std::binary_search(adj[a].begin(), adj[a].end(), b)) --cnt;
    if (std::binary_search(adj[b].begin(), adj[b].end(), a)) --cnt;
    row_ptr[static_cast<std::size_t>(row) + 1] = cnt;
  }
  std::partial_sum(row_ptr.begin(), row_ptr.end(), row_ptr.begin());

  std::vector<int> col_idx(row_ptr.back());
  std::vector<cplx> values(row_ptr.back());
#pragma omp parallel for schedule(static)
  for (int row = 0; row < m_count; ++row) {
    const auto [a, b] = majorana_pair_from_index(n, row);
    int pos = row_ptr[row];
    const int base = pos;
    for (int j : adj[a]) {
      if (j == b) continue;
      const Folded f = fold_pair(n, j, b);
      col_idx[pos] = f.idx;
      values[pos] = -2.0 * f.sign * gamma(j - 1, a - 1);
      ++pos;
    }
    for (int j : adj[b]) {
      if (j == a) continue;
      const Folded f = fold_pair(n, a, j);
      col_idx[pos] = f.idx;
      values[pos] = -2.0 * f.sign * gamma(j - 1, b - 1);
      ++pos;
    }
    // Targets within a row never collide, so an in-place sort finishes it.
    std::vector<std::pair<int, cplx>> entries;
    entries.reserve(pos - base);
    for (int k = base; k < pos; ++k) entries.push_back({col_idx[k], values[k]});
    std::sort(entries.begin(), entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (int k = base; k < pos; ++k) {
      col_idx[k] = entries[k - base].first;
      values[k] = entries[k - base].second;
    }
  }

  SparseMatrix hs = SparseMatrix::from_csr(m_count, m_count, std::move(row_ptr),
                                           std::move(col_idx), std::move(values));
  check_shadow_bounds(hs, gamma);
  return hs;
}

ShadowHamiltonian fermion_shadow(const Matrix& gamma) {
  ShadowHamiltonian sh;
  const int n = check_canonical(gamma);
  sh.labels = majorana_pair_labels(n);
  sh.hs = fermion_shadow_hamiltonian_omp(gamma);
  sh.hermitian_defect = hermitian_defect(sh.hs);
  sh.leakage = 0.0;  // quadratic H closes on the pair basis identically
  return sh;
}

Matrix jordan_wigner_majorana(int n, int p) {
  require(n >= 1 && p >= 1 && p <= 2 * n, "fermion: Majorana index out of range");
  check_oracle_dim(Eigen::Index(1) << n);
  const int site = (p + 1) / 2;
  static const Matrix id = Matrix::Identity(2, 2);
  static const Matrix x = (Matrix(2, 2) << 0, 1, 1, 0).finished();
  static const Matrix y = (Matrix(2, 2) << 0, -kI, kI, 0).finished();
  static const Matrix z = (Matrix(2, 2) << 1, 0, 0, -1).finished();
  std::vector<const Matrix*> factors;
  for (int i = 1; i <= n; ++i) {
    if (i < site) {
      factors.push_back(&z);
    } else if (i == site) {
      factors.push_back(p % 2 == 1 ? &x : &y);
    } else {
      factors.push_back(&id);
    }
  }
  return kron_chain(factors);
}

OperatorSet majorana_pair_set(int n) {
  check_oracle_dim(Eigen::Index(1) << n);
  std::vector<Matrix> c;
  c.reserve(2 * n);
  for (int p = 1; p <= 2 * n; ++p) c.push_back(jordan_wigner_majorana(n, p));
  OperatorSet set;
  set.labels = majorana_pair_labels(n);
  set.ops.reserve(majorana_pair_count(n));
  for (int j = 1; j <= 2 * n; ++j) {
    for (int k = j + 1; k <= 2 * n; ++k) set.ops.push_back(c[j - 1] * c[k - 1]);
  }
  return set;
}

Matrix fermion_hamiltonian_dense(const Matrix& gamma) {
  const int n = check_canonical(gamma);
  check_oracle_dim(Eigen::Index(1) << n);
  const Eigen::Index dim = Eigen::Index(1) << n;
  Matrix h = Matrix::Zero(dim, dim);
  for (int j = 1; j <= 2 * n; ++j) {
    Matrix cj;
    bool have_cj = false;
    for (int k = j + 1; k <= 2 * n; ++k) {
      if (gamma(j - 1, k - 1) == cplx(0.0, 0.0)) continue;
      if (!have_cj) {
        cj = jordan_wigner_majorana(n, j);
        have_cj = true;
      }
      h += gamma(j - 1, k - 1) * cj * jordan_wigner_majorana(n, k);
    }
  }
  return h;
}

Matrix quartic_term_dense(int n, const QuarticTerm& term) {
  require(term.a >= 1 && term.a < term.b && term.b < term.c &&
              term.c < term.d && term.d <= 2 * n,
          "fermion: quartic term needs strictly increasing modes in range");
  require(std::isfinite(term.g), "fermion: quartic coefficient must be finite");
  return term.g * jordan_wigner_majorana(n, term.a) *
         jordan_wigner_majorana(n, term.b) * jordan_wigner_majorana(n, term.c) *
         jordan_wigner_majorana(n, term.d);
}

ShadowState vacuum_shadow(int n) {
  const int m_count = majorana_pair_count(n);
  ShadowState st;
  st.labels = majorana_pair_labels(n);
  st.amplitudes = Vector::Zero(m_count);
  // <c_{2l-1} c_{2l}> = i (1 - 2 n_l); the phase is physical — energy
  // read-off needs the amplitudes to be the actual expectations.
  for (int l = 1; l <= n; ++l) {
    st.amplitudes[majorana_pair_index(n, 2 * l - 1, 2 * l)] =
        kI / std::sqrt(static_cast<double>(n));
  }
  st.normA = static_cast<double>(n);
  return st;
}

ShadowState product_shadow(int n, const std::vector<int>& occupied) {
  ShadowState st = vacuum_shadow(n);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int site : occupied) {
    require(site >= 1 && site <= n, "fermion: occupied site out of range");
    require(!seen[site], "fermion: occupied site listed twice");
    seen[site] = true;
    st.amplitudes[majorana_pair_index(n, 2 * site - 1, 2 * site)] *= -1.0;
  }
  return st;
}

Vector basis_ket(int n, const std::vector<int>& occupied) {
  check_oracle_dim(Eigen::Index(1) << n);
  std::uint64_t index = 0;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int site : occupied) {
    require(site >= 1 && site <= n, "fermion: occupied site out of range");
    require(!seen[site], "fermion: occupied site listed twice");
    seen[site] = true;
    index |= std::uint64_t(1) << (n - site);  // site 1 = most significant bit
  }
  Vector psi = Vector::Zero(Eigen::Index(1) << n);
  psi[static_cast<Eigen::Index>(index)] = 1.0;
  return psi;
}

namespace {

std::vector<int> check_mode_subset(int n, const std::vector<int>& modes) {
  std::vector<int> sorted = modes;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "fermion: subset lists a mode twice");
  require(sorted.empty() || (sorted.front() >= 1 && sorted.back() <= 2 * n),
          "fermion: subset mode out of range");
  return sorted;
}

}  // namespace

double subset_energy(const Matrix& gamma, const ShadowState& st,
                     const std::vector<int>& modes) {
  const int n = check_canonical(gamma);
  require(st.amplitudes.size() == majorana_pair_count(n),
          "fermion: shadow state does not match gamma's pair basis");
  const std::vector<int> sorted = check_mode_subset(n, modes);
  cplx acc = 0.0;
  for (std::size_t u = 0; u < sorted.size(); ++u) {
    for (std::size_t v = u + 1; v < sorted.size(); ++v) {
      const int j = sorted[u], k = sorted[v];
      acc += gamma(j - 1, k - 1) *
             st.amplitudes[majorana_pair_index(n, j, k)];
    }
  }
  return std::sqrt(st.normA) * acc.real();
}

double subset_energy_sampled(const Matrix& gamma, const ShadowState& st,
                             const std::vector<int>& modes,
                             std::uint64_t shots, CounterRng& rng) {
  const int n = check_canonical(gamma);
  require(st.amplitudes.size() == majorana_pair_count(n),
          "fermion: shadow state does not match gamma's pair basis");
  require(shots > 0, "fermion: shots must be positive");
  const std::vector<int> sorted = check_mode_subset(n, modes);
  double g2 = 0.0;
  cplx overlap = 0.0;  // <psi_J|st> with psi_J = conj(gamma_J) / G on pairs in J
  for (std::size_t u = 0; u < sorted.size(); ++u) {
    for (std::size_t v = u + 1; v < sorted.size(); ++v) {
      const int j = sorted[u], k = sorted[v];
      const cplx g = gamma(j - 1, k - 1);
      g2 += std::norm(g);
      overlap += g * st.amplitudes[majorana_pair_index(n, j, k)];
    }
  }
  const double big_g = std::sqrt(g2);
  if (big_g == 0.0) return 0.0;
  const double p = std::clamp((1.0 + overlap.real() / big_g) / 2.0, 0.0, 1.0);
  const double hits = static_cast<double>(rng.binomial(shots, p));
  const double est = 2.0 * hits / static_cast<double>(shots) - 1.0;
  return big_g * std::sqrt(st.normA) * est;
}

double number_conservation_defect(const Matrix& gamma) {
  const int n = check_canonical(gamma);
  const SparseMatrix hs = fermion_shadow_hamiltonian_serial(gamma);
  Vector nvec = Vector::Zero(majorana_pair_count(n));
  for (int l = 1; l <= n; ++l) {
    nvec[majorana_pair_index(n, 2 * l - 1, 2 * l)] = 0.5 * kI;
  }
  return spmv(hs.transpose(), nvec).norm();
}

SparseMatrix single_particle_shadow_hamiltonian(const Matrix& alpha) {
  require(alpha.rows() == alpha.cols() && alpha.rows() >= 1,
          "fermion: alpha must be square");
  const double scale = std::max(1.0, alpha.cwiseAbs().maxCoeff());
  if (hermitian_defect(alpha) > 1e-10 * scale) {
    throw NonHermitianError("fermion: alpha is not Hermitian");
  }
  const int n = static_cast<int>(alpha.rows());
  std::vector<Triplet> trips;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const int row = j * n + k;
      for (int jp = 0; jp < n; ++jp) {
        const cplx v = -std::conj(alpha(j, jp));
        if (v != cplx(0.0, 0.0)) trips.push_back({row, jp * n + k, v});
      }
      for (int kp = 0; kp < n; ++kp) {
        const cplx v = alpha(k, kp);
        if (v != cplx(0.0, 0.0)) trips.push_back({row, j * n + kp, v});
      }
    }
  }
  return SparseMatrix::from_triplets(n * n, n * n, std::move(trips));
}

Vector single_particle_amplitudes(const Vector& psi) {
  const int n = static_cast<int>(psi.size());
  Vector v(static_cast<Eigen::Index>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) v[j * n + k] = std::conj(psi[j]) * psi[k];
  }
  return v;
}

StructureTable so2n_structure_table(int n) {
  const int m_count = majorana_pair_count(n);
  StructureTable t;
  t.p = m_count;
  // [c_a c_b, c_c c_d] = 2 d_bc c_a c_d - 2 d_ac c_b c_d
  //                    + 2 d_bd c_c c_a - 2 d_ad c_c c_b
  auto push = [&](int m, int mp, int p, int q, double coef) {
    const Folded f = fold_pair(n, p, q);
    t.entries.push_back({m, mp, f.idx, coef * f.sign});
  };
  for (int m = 0; m < m_count; ++m) {
    const auto [a, b] = majorana_pair_from_index(n, m);
    for (int mp = 0; mp < m_count; ++mp) {
      if (mp == m) continue;
      const auto [c, d] = majorana_pair_from_index(n, mp);
      if (b == c) push(m, mp, a, d, 2.0);
      if (a == c) push(m, mp, b, d, -2.0);
      if (b == d) push(m, mp, c, a, 2.0);
      if (a == d) push(m, mp, c, b, -2.0);
    }
  }
  return t;
}

RealVector so2n_alpha(const Matrix& gamma) {
  const int n = check_canonical(gamma);
  RealVector alpha(majorana_pair_count(n));
  for (int j = 1; j <= 2 * n; ++j) {
    for (int k = j + 1; k <= 2 * n; ++k) {
      alpha[majorana_pair_index(n, j, k)] = gamma(j - 1, k - 1).imag();
    }
  }
  return alpha;
}

}  // namespace shadowsim
