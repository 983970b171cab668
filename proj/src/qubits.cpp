#include "shadowsim/qubits.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "shadowsim/expm.hpp"
#include "shadowsim/oracle.hpp"

namespace shadowsim {

namespace {

constexpr cplx kI{0.0, 1.0};

const Matrix& sigma(int axis) {
  static const Matrix x = (Matrix(2, 2) << 0, 1, 1, 0).finished();
  static const Matrix y = (Matrix(2, 2) << 0, -kI, kI, 0).finished();
  static const Matrix z = (Matrix(2, 2) << 1, 0, 0, -1).finished();
  switch (axis) {
    case 0: return x;
    case 1: return y;
    default: return z;
  }
}

Matrix single_site(int n, int qubit, int axis) {
  Matrix out = Matrix::Identity(1, 1);
  for (int q = 1; q <= n; ++q) {
    out = kron(out, q == qubit ? sigma(axis) : Matrix::Identity(2, 2));
  }
  return out;
}

double levi_civita(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0.0;
  if ((a + 1) % 3 == b) return 1.0;  // cyclic (0,1,2)
  return -1.0;
}

void check_field(const RealMatrix& w) {
  require(w.rows() >= 1 && w.cols() == 3, "qubit: field matrix must be n x 3");
  require(w.allFinite(), "qubit: field entries must be finite");
}

constexpr char kAxisNames[] = {'X', 'Y', 'Z'};

}  // namespace

std::vector<std::string> one_local_labels(int n) {
  require(n >= 1, "qubit: need at least one qubit");
  std::vector<std::string> labels{"1"};
  for (int j = 1; j <= n; ++j) {
    for (int a = 0; a < 3; ++a) labels.push_back(kAxisNames[a] + std::to_string(j));
  }
  return labels;
}

int one_local_slot(int qubit, int axis) { return 1 + 3 * (qubit - 1) + axis; }

OperatorSet one_local_set(int n) {
  check_oracle_dim(Eigen::Index(1) << n);
  OperatorSet set;
  set.labels = one_local_labels(n);
  const Eigen::Index dim = Eigen::Index(1) << n;
  set.ops.push_back(Matrix::Identity(dim, dim));
  for (int j = 1; j <= n; ++j) {
    for (int a = 0; a < 3; ++a) set.ops.push_back(single_site(n, j, a));
  }
  return set;
}

SparseMatrix one_local_shadow_hamiltonian(const RealMatrix& w) {
  check_field(w);
  const int n = static_cast<int>(w.rows());
  const int dim = 3 * n + 1;
  std::vector<Triplet> trips;
  for (int j = 1; j <= n; ++j) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        if (b == c) continue;
        const int a = 3 - b - c;
        const double coef = w(j - 1, a) * levi_civita(a, b, c);
        if (coef != 0.0) {
          trips.push_back(
              {one_local_slot(j, b), one_local_slot(j, c), -2.0 * kI * coef});
        }
      }
    }
  }
  return SparseMatrix::from_triplets(dim, dim, std::move(trips));
}

ShadowHamiltonian one_local_shadow(const RealMatrix& w) {
  ShadowHamiltonian sh;
  sh.labels = one_local_labels(static_cast<int>(w.rows()));
  sh.hs = one_local_shadow_hamiltonian(w);
  sh.hermitian_defect = hermitian_defect(sh.hs);
  sh.leakage = 0.0;  // single-site fields close on the single-site set
  return sh;
}

Matrix one_local_hamiltonian_dense(const RealMatrix& w) {
  check_field(w);
  const int n = static_cast<int>(w.rows());
  check_oracle_dim(Eigen::Index(1) << n);
  const Eigen::Index dim = Eigen::Index(1) << n;
  Matrix h = Matrix::Zero(dim, dim);
  for (int j = 1; j <= n; ++j) {
    for (int a = 0; a < 3; ++a) {
      if (w(j - 1, a) != 0.0) h += w(j - 1, a) * single_site(n, j, a);
    }
  }
  return h;
}

ShadowState all_zero_shadow(int n) {
  ShadowState st;
  st.labels = one_local_labels(n);
  st.amplitudes = Vector::Zero(3 * n + 1);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n) + 1.0);
  st.amplitudes[0] = amp;
  for (int j = 1; j <= n; ++j) st.amplitudes[one_local_slot(j, 2)] = amp;
  st.normA = static_cast<double>(n) + 1.0;
  return st;
}

std::vector<std::string> full_pauli_labels(int n) {
  std::vector<std::string> labels;
  for (const PauliString& p : full_pauli_words(n)) labels.push_back(pauli_label(p));
  return labels;
}

OperatorSet full_pauli_set(int n) {
  check_oracle_dim(Eigen::Index(1) << n);
  OperatorSet set;
  set.labels = full_pauli_labels(n);
  for (const PauliString& p : full_pauli_words(n)) set.ops.push_back(pauli_matrix(p));
  return set;
}

namespace {

// Sum duplicate words and check Hermiticity: (X^x Z^z)^dag = (-1)^{x.z} X^x Z^z.
std::vector<PauliTerm> merge_and_check(int n, std::vector<PauliTerm> terms) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, cplx> merged;
  for (const auto& t : terms) {
    require(t.p.n == n, "qubit: term qubit count mismatch");
    merged[{t.p.x, t.p.z}] += t.w;
  }
  std::vector<PauliTerm> out;
  double scale = 1.0;
  for (const auto& [key, w] : merged) scale = std::max(scale, std::abs(w));
  for (const auto& [key, w] : merged) {
    if (w == cplx(0.0, 0.0)) continue;
    PauliString p{n, key.first, key.second};
    const double dag_sign = std::popcount(p.x & p.z) % 2 == 0 ? 1.0 : -1.0;
    if (std::abs(std::conj(w) * dag_sign - w) > 1e-12 * scale) {
      throw NonHermitianError("qubit: Pauli expansion is not Hermitian at " +
                              pauli_label(p));
    }
    out.push_back({p, w});
  }
  return out;
}

}  // namespace

std::vector<PauliTerm> collect_pauli_terms(
    int n, const std::vector<std::pair<std::string, cplx>>& terms) {
  std::vector<PauliTerm> parsed;
  for (const auto& [text, coef] : terms) {
    const ParsedPauli pp = parse_pauli(text, n);
    parsed.push_back({pp.p, coef * pp.factor});
  }
  return merge_and_check(n, std::move(parsed));
}

SparseMatrix full_pauli_shadow_hamiltonian(int n,
                                           const std::vector<PauliTerm>& terms) {
  require(n >= 1, "qubit: n must be positive");
  if (n > 10) {
    throw CapacityError("qubit: full Pauli basis supported up to n = 10");
  }
  const std::vector<PauliTerm> clean = merge_and_check(n, terms);
  const std::size_t m_count = std::size_t(1) << (2 * n);
  std::vector<Triplet> trips;
  for (const auto& [tau, w] : clean) {
    for (std::size_t m = 0; m < m_count; ++m) {
      const PauliString pm{n, m >> n, m & ((std::uint64_t(1) << n) - 1)};
      const double s1 = pauli_mult_sign(tau, pm);
      const double s2 = pauli_mult_sign(pm, tau);
      if (s1 == s2) continue;
      const PauliString target = pauli_mult(tau, pm);
      trips.push_back({static_cast<int>(m), static_cast<int>(pauli_slot(target)),
                       -w * (s1 - s2)});
    }
  }
  return SparseMatrix::from_triplets(static_cast<int>(m_count),
                                     static_cast<int>(m_count), std::move(trips));
}

ShadowHamiltonian full_pauli_shadow(int n, const std::vector<PauliTerm>& terms) {
  ShadowHamiltonian sh;
  sh.labels = full_pauli_labels(n);
  sh.hs = full_pauli_shadow_hamiltonian(n, terms);
  sh.hermitian_defect = hermitian_defect(sh.hs);
  sh.leakage = 0.0;  // the full word basis closes under commutation
  return sh;
}

Matrix pauli_terms_dense(int n, const std::vector<PauliTerm>& terms) {
  check_oracle_dim(Eigen::Index(1) << n);
  const Eigen::Index dim = Eigen::Index(1) << n;
  Matrix h = Matrix::Zero(dim, dim);
  for (const auto& [p, w] : terms) {
    require(p.n == n, "qubit: term qubit count mismatch");
    h += w * pauli_matrix(p);
  }
  return h;
}

Matrix bell_rotation_dense(int n) {
  require(n >= 1, "qubit: n must be positive");
  if (n > 6) {
    throw CapacityError("qubit: dense Bell rotation supported up to n = 6");
  }
  const Eigen::Index dim = Eigen::Index(1) << n;
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  Matrix vdag = Matrix::Zero(dim * dim, dim * dim);
  for (const PauliString& p : full_pauli_words(n)) {
    const Matrix pm = pauli_matrix(p);
    const Eigen::Index col = static_cast<Eigen::Index>(pauli_slot(p));
    for (Eigen::Index k = 0; k < dim; ++k) {
      for (Eigen::Index r = 0; r < dim; ++r) {
        if (pm(r, k) != cplx(0.0, 0.0)) vdag(k * dim + r, col) = norm * pm(r, k);
      }
    }
  }
  return vdag.adjoint();
}

namespace {

void apply_h_gate(Vector& v, int total_qubits, int qubit) {
  const std::uint64_t mask = std::uint64_t(1) << (total_qubits - qubit);
  const double s = 1.0 / std::sqrt(2.0);
  const std::uint64_t size = std::uint64_t(1) << total_qubits;
  for (std::uint64_t i = 0; i < size; ++i) {
    if (i & mask) continue;
    const cplx a = v[static_cast<Eigen::Index>(i)];
    const cplx b = v[static_cast<Eigen::Index>(i | mask)];
    v[static_cast<Eigen::Index>(i)] = s * (a + b);
    v[static_cast<Eigen::Index>(i | mask)] = s * (a - b);
  }
}

void apply_cnot_gate(Vector& v, int total_qubits, int control, int target) {
  const std::uint64_t cm = std::uint64_t(1) << (total_qubits - control);
  const std::uint64_t tm = std::uint64_t(1) << (total_qubits - target);
  const std::uint64_t size = std::uint64_t(1) << total_qubits;
  for (std::uint64_t i = 0; i < size; ++i) {
    if ((i & cm) && !(i & tm)) {
      std::swap(v[static_cast<Eigen::Index>(i)],
                v[static_cast<Eigen::Index>(i | tm)]);
    }
  }
}

}  // namespace

Vector bell_rotation_apply(int n, Vector reg12) {
  require(n >= 1 && n <= 16, "qubit: register size out of range");
  require(reg12.size() == Eigen::Index(1) << (2 * n),
          "qubit: Bell rotation input must live on two n-qubit registers");
  for (int l = 1; l <= n; ++l) {
    const int a = l, b = n + l;
    apply_cnot_gate(reg12, 2 * n, b, a);
    apply_cnot_gate(reg12, 2 * n, a, b);
    apply_h_gate(reg12, 2 * n, b);
  }
  return reg12;
}

ShadowState shadow_via_bell(int n, const Vector& psi) {
  const Eigen::Index dim = Eigen::Index(1) << n;
  require(psi.size() == dim, "qubit: state size mismatch");
  const double nrm2 = psi.squaredNorm();
  require(nrm2 > 1e-24, "qubit: zero state");
  Vector v(dim * dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      v[j * dim + k] = psi[j] * std::conj(psi[k]) / nrm2;
    }
  }
  ShadowState st;
  st.labels = full_pauli_labels(n);
  st.amplitudes = bell_rotation_apply(n, std::move(v));
  st.normA = static_cast<double>(dim);
  return st;
}

ShadowState shadow_via_bell_density(int n, const Matrix& rho) {
  const Eigen::Index dim = Eigen::Index(1) << n;
  require(rho.rows() == dim && rho.cols() == dim, "qubit: density size mismatch");
  ShadowState st;
  st.labels = full_pauli_labels(n);
  st.amplitudes = bell_rotation_apply(n, vec_state(rho));
  st.normA = static_cast<double>(dim) * purity(rho);
  return st;
}

double conjugate_overlap(const Vector& psi) {
  const double nrm2 = psi.squaredNorm();
  require(nrm2 > 1e-24, "qubit: zero state");
  cplx s = 0.0;
  for (Eigen::Index i = 0; i < psi.size(); ++i) s += psi[i] * psi[i];
  return std::abs(s) / nrm2;
}

double swap_test_estimate(const Vector& psi, std::uint64_t shots,
                          CounterRng& rng) {
  require(shots > 0, "qubit: shots must be positive");
  const double ov = conjugate_overlap(psi);
  const double p = std::clamp(0.5 + 0.5 * ov * ov, 0.0, 1.0);
  const double hits = static_cast<double>(rng.binomial(shots, p));
  const double p_hat = hits / static_cast<double>(shots);
  return std::sqrt(std::max(0.0, 2.0 * p_hat - 1.0));
}

Matrix hw_shift(int dim) {
  require(dim >= 2, "qudit: dimension must be at least 2");
  Matrix x = Matrix::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) x((j + 1) % dim, j) = 1.0;
  return x;
}

Matrix hw_clock(int dim) {
  require(dim >= 2, "qudit: dimension must be at least 2");
  Matrix z = Matrix::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    const double phi = -2.0 * M_PI * j / dim;
    z(j, j) = cplx(std::cos(phi), std::sin(phi));
  }
  return z;
}

Matrix hw_word(int dim, int i, int j) {
  require(i >= 0 && i < dim && j >= 0 && j < dim, "qudit: word exponent range");
  Matrix out = Matrix::Identity(dim, dim);
  const Matrix x = hw_shift(dim);
  const Matrix z = hw_clock(dim);
  for (int k = 0; k < i; ++k) out = out * x;
  for (int k = 0; k < j; ++k) out = out * z;
  return out;
}

Matrix hw_bell_rotation(int dim) {
  const Eigen::Index d = dim, d2 = d * d;
  Matrix f(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      const double phi = 2.0 * M_PI * static_cast<double>(j * k) / dim;
      f(j, k) = cplx(std::cos(phi), std::sin(phi)) / std::sqrt(double(dim));
    }
  }
  Matrix swap = Matrix::Zero(d2, d2);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) swap(k * d + j, j * d + k) = 1.0;
  }
  Matrix c = Matrix::Zero(d2, d2);
  for (int j = 0; j < dim; ++j) {
    c.block(j * d, j * d, d, d) = hw_word(dim, j, 0);
  }
  return kron(Matrix::Identity(d, d), f) * swap * c.adjoint();
}

Matrix hw_bell_rotation_defining(int dim) {
  const Eigen::Index d = dim, d2 = d * d;
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  Matrix vdag = Matrix::Zero(d2, d2);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const Matrix w = hw_word(dim, i, j);
      for (Eigen::Index k = 0; k < d; ++k) {
        for (Eigen::Index r = 0; r < d; ++r) {
          if (w(r, k) != cplx(0.0, 0.0)) {
            vdag(k * d + r, static_cast<Eigen::Index>(i) * d + j) =
                norm * w(r, k);
          }
        }
      }
    }
  }
  return vdag.adjoint();
}

}  // namespace shadowsim
