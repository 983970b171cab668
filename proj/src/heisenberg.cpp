#include "shadowsim/heisenberg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "shadowsim/expm.hpp"

namespace shadowsim {

namespace {

constexpr cplx kI{0.0, 1.0};

void check_map(const PauliMap& op) {
  require(op.n >= 1 && op.n <= 32, "heisenberg: qubit count out of range");
}

int gate_arity(const Matrix& u) {
  require(u.rows() == u.cols() && (u.rows() == 2 || u.rows() == 4),
          "heisenberg: gates act on one or two qubits");
  return u.rows() == 2 ? 1 : 2;
}

void check_gate(const Gate& gate, int n, int arity) {
  require(static_cast<int>(gate.qubits.size()) == arity,
          "heisenberg: gate " + gate.name + " takes " + std::to_string(arity) +
              " qubit(s)");
  for (int q : gate.qubits) {
    require(q >= 1 && q <= n, "heisenberg: gate qubit out of range");
  }
  if (arity == 2) {
    require(gate.qubits[0] != gate.qubits[1],
            "heisenberg: gate qubits must be distinct");
  }
}

std::uint64_t word_key(const PauliString& p) {
  return (p.x << p.n) | p.z;
}

}  // namespace

PauliMap pauli_map_single(int n, const std::string& word, cplx coef) {
  const ParsedPauli pp = parse_pauli(word, n);
  PauliMap op;
  op.n = n;
  op.terms[word_key(pp.p)] = coef * pp.factor;
  return op;
}

Vector pauli_map_to_vector(const PauliMap& op) {
  check_map(op);
  require(op.n <= 8, "heisenberg: dense coefficient vector supported to n = 8");
  Vector v = Vector::Zero(Eigen::Index(1) << (2 * op.n));
  for (const auto& [key, c] : op.terms) v[static_cast<Eigen::Index>(key)] = c;
  return v;
}

Matrix pauli_map_dense(const PauliMap& op) {
  check_map(op);
  const Eigen::Index dim = Eigen::Index(1) << op.n;
  const std::uint64_t zmask = (std::uint64_t(1) << op.n) - 1;
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& [key, c] : op.terms) {
    out += c * pauli_matrix(PauliString{op.n, key >> op.n, key & zmask});
  }
  return out;
}

double pauli_map_norm(const PauliMap& op) {
  double s = 0.0;
  for (const auto& [key, c] : op.terms) s += std::norm(c);
  return std::sqrt(s);
}

Vector heisenberg_continuous(const SparseMatrix& hs, const Vector& z, double t,
                             double tol) {
  return expm_action(hs.conjugate(), z, t, tol);
}

Matrix gate_unitary(const std::string& name) {
  const double s = 1.0 / std::sqrt(2.0);
  if (name == "H") return (Matrix(2, 2) << s, s, s, -s).finished();
  if (name == "S") return (Matrix(2, 2) << 1, 0, 0, kI).finished();
  if (name == "T") {
    return (Matrix(2, 2) << 1, 0, 0, cplx(s, s)).finished();
  }
  if (name == "X") return (Matrix(2, 2) << 0, 1, 1, 0).finished();
  if (name == "Y") return (Matrix(2, 2) << 0, -kI, kI, 0).finished();
  if (name == "Z") return (Matrix(2, 2) << 1, 0, 0, -1).finished();
  if (name == "CNOT") {
    Matrix u = Matrix::Identity(4, 4);
    u(2, 2) = u(3, 3) = 0;
    u(2, 3) = u(3, 2) = 1;
    return u;
  }
  if (name == "CZ") {
    Matrix u = Matrix::Identity(4, 4);
    u(3, 3) = -1;
    return u;
  }
  if (name == "SWAP") {
    Matrix u = Matrix::Identity(4, 4);
    u(1, 1) = u(2, 2) = 0;
    u(1, 2) = u(2, 1) = 1;
    return u;
  }
  throw SchemaError("heisenberg: unknown gate " + name);
}

Matrix gate_matrix(const Gate& gate) {
  if (gate.name != "unitary") return gate_unitary(gate.name);
  const Matrix& u = gate.u;
  require(u.rows() == u.cols() && (u.rows() == 2 || u.rows() == 4),
          "heisenberg: unitary gate matrix must be 2x2 or 4x4");
  const double defect =
      (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm();
  require(defect < 1e-10, "heisenberg: unitary gate matrix is not unitary");
  return u;
}

Matrix gate_transfer(const Matrix& u) {
  const int k = gate_arity(u);
  const Eigen::Index dim = u.rows();
  const int words = 1 << (2 * k);
  const std::uint64_t zmask = (std::uint64_t(1) << k) - 1;
  Matrix g(words, words);
  for (int l = 0; l < words; ++l) {
    const Matrix a =
        u.adjoint() *
        pauli_matrix(PauliString{k, static_cast<std::uint64_t>(l) >> k,
                                 static_cast<std::uint64_t>(l) & zmask}) *
        u;
    for (int lp = 0; lp < words; ++lp) {
      const Matrix p = pauli_matrix(PauliString{
          k, static_cast<std::uint64_t>(lp) >> k,
          static_cast<std::uint64_t>(lp) & zmask});
      g(l, lp) = (p.adjoint() * a).trace() / static_cast<double>(dim);
    }
  }
  return g;
}

bool is_signed_permutation(const Matrix& transfer, double tol) {
  for (Eigen::Index r = 0; r < transfer.rows(); ++r) {
    int hits = 0;
    for (Eigen::Index c = 0; c < transfer.cols(); ++c) {
      const double a = std::abs(transfer(r, c));
      if (a > tol) {
        ++hits;
        if (std::abs(a - 1.0) > tol ||
            std::abs(transfer(r, c).imag()) > tol) {
          return false;
        }
      }
    }
    if (hits != 1) return false;
  }
  return true;
}

PauliMap heisenberg_gate(const PauliMap& op, const Gate& gate,
                         double drop_tol) {
  check_map(op);
  const Matrix u = gate_matrix(gate);
  const int k = gate_arity(u);
  check_gate(gate, op.n, k);
  const Matrix g = gate_transfer(u);
  const int words = 1 << (2 * k);

  // Bit positions of the gate's qubits inside the x and z halves.
  std::vector<int> bits(k);
  for (int i = 0; i < k; ++i) bits[i] = pauli_bit(op.n, gate.qubits[i]);

  auto extract = [&](std::uint64_t half) {
    std::uint64_t local = 0;
    for (int i = 0; i < k; ++i) {
      if (half >> bits[i] & 1) local |= std::uint64_t(1) << (k - 1 - i);
    }
    return local;
  };
  auto clear_bits = [&](std::uint64_t half) {
    for (int i = 0; i < k; ++i) half &= ~(std::uint64_t(1) << bits[i]);
    return half;
  };
  auto spread = [&](std::uint64_t local) {
    std::uint64_t half = 0;
    for (int i = 0; i < k; ++i) {
      if (local >> (k - 1 - i) & 1) half |= std::uint64_t(1) << bits[i];
    }
    return half;
  };

  PauliMap out;
  out.n = op.n;
  const std::uint64_t zmask = (std::uint64_t(1) << op.n) - 1;
  for (const auto& [key, c] : op.terms) {
    const std::uint64_t x = key >> op.n;
    const std::uint64_t z = key & zmask;
    const std::uint64_t l = (extract(x) << k) | extract(z);
    const std::uint64_t rest_x = clear_bits(x);
    const std::uint64_t rest_z = clear_bits(z);
    for (int lp = 0; lp < words; ++lp) {
      const cplx coef = g(static_cast<Eigen::Index>(l), lp);
      if (coef == cplx(0.0, 0.0)) continue;
      const std::uint64_t nx = rest_x | spread(static_cast<std::uint64_t>(lp) >> k);
      const std::uint64_t nz = rest_z | spread(static_cast<std::uint64_t>(lp) & ((1u << k) - 1));
      out.terms[(nx << op.n) | nz] += c * coef;
    }
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    if (std::abs(it->second) <= drop_tol) {
      it = out.terms.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

PauliMap heisenberg_circuit(PauliMap op, const std::vector<Gate>& circuit,
                            double drop_tol) {
  for (auto it = circuit.rbegin(); it != circuit.rend(); ++it) {
    op = heisenberg_gate(op, *it, drop_tol);
  }
  return op;
}

SupportMetric support_metric(const PauliMap& op) {
  check_map(op);
  SupportMetric m;
  m.weight_mass.assign(static_cast<std::size_t>(op.n) + 1, 0.0);
  m.qubit_mass = RealVector::Zero(op.n);
  const std::uint64_t zmask = (std::uint64_t(1) << op.n) - 1;
  for (const auto& [key, c] : op.terms) {
    const std::uint64_t sup = (key >> op.n) | (key & zmask);
    const double mass = std::norm(c);
    m.weight_mass[static_cast<std::size_t>(std::popcount(sup))] += mass;
    for (int q = 1; q <= op.n; ++q) {
      if (sup >> pauli_bit(op.n, q) & 1) m.qubit_mass[q - 1] += mass;
    }
  }
  return m;
}

std::vector<int> support_qubits(const PauliMap& op, double threshold) {
  const SupportMetric m = support_metric(op);
  double total = 0.0;
  for (double w : m.weight_mass) total += w;
  std::vector<int> out;
  for (int q = 1; q <= op.n; ++q) {
    if (m.qubit_mass[q - 1] > threshold * std::max(total, 1e-300)) {
      out.push_back(q);
    }
  }
  return out;
}

std::vector<int> light_cone(int n, const std::vector<Gate>& circuit,
                            const std::vector<int>& start) {
  std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
  for (int q : start) {
    require(q >= 1 && q <= n, "heisenberg: start qubit out of range");
    reach[q] = true;
  }
  for (auto it = circuit.rbegin(); it != circuit.rend(); ++it) {
    bool touches = false;
    for (int q : it->qubits) touches = touches || (q >= 1 && q <= n && reach[q]);
    if (touches) {
      for (int q : it->qubits) reach[q] = true;
    }
  }
  std::vector<int> out;
  for (int q = 1; q <= n; ++q) {
    if (reach[q]) out.push_back(q);
  }
  return out;
}

Vector apply_gate_state(const Gate& gate, int n, Vector psi) {
  const Matrix u = gate_matrix(gate);
  const int k = gate_arity(u);
  check_gate(gate, n, k);
  require(psi.size() == Eigen::Index(1) << n, "heisenberg: state size mismatch");

  std::vector<std::uint64_t> masks(k);
  for (int i = 0; i < k; ++i) {
    masks[i] = std::uint64_t(1) << pauli_bit(n, gate.qubits[i]);
  }
  std::uint64_t gate_mask = 0;
  for (auto m : masks) gate_mask |= m;

  const std::uint64_t size = std::uint64_t(1) << n;
  const int local = 1 << k;
  Vector in(local), out(local);
  for (std::uint64_t base = 0; base < size; ++base) {
    if (base & gate_mask) continue;
    for (int l = 0; l < local; ++l) {
      std::uint64_t idx = base;
      for (int i = 0; i < k; ++i) {
        if (l >> (k - 1 - i) & 1) idx |= masks[i];
      }
      in[l] = psi[static_cast<Eigen::Index>(idx)];
    }
    out = u * in;
    for (int l = 0; l < local; ++l) {
      std::uint64_t idx = base;
      for (int i = 0; i < k; ++i) {
        if (l >> (k - 1 - i) & 1) idx |= masks[i];
      }
      psi[static_cast<Eigen::Index>(idx)] = out[l];
    }
  }
  return psi;
}

Matrix circuit_unitary_dense(int n, const std::vector<Gate>& circuit) {
  require(n >= 1 && n <= 12, "heisenberg: dense circuit supported to n = 12");
  const Eigen::Index dim = Eigen::Index(1) << n;
  Matrix u = Matrix::Identity(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Vector psi = u.col(col);
    for (const Gate& g : circuit) psi = apply_gate_state(g, n, std::move(psi));
    u.col(col) = psi;
  }
  return u;
}

Vector heisenberg_oracle_coefficients(int n, const Matrix& u, const Matrix& op) {
  require(n >= 1 && n <= 8, "heisenberg: oracle supported to n = 8");
  const Eigen::Index dim = Eigen::Index(1) << n;
  require(u.rows() == dim && op.rows() == dim, "heisenberg: size mismatch");
  const Matrix evolved = u.adjoint() * op * u;
  Vector z(Eigen::Index(1) << (2 * n));
  for (const PauliString& p : full_pauli_words(n)) {
    z[static_cast<Eigen::Index>(pauli_slot(p))] =
        (pauli_matrix(p).adjoint() * evolved).trace() / static_cast<double>(dim);
  }
  return z;
}

}  // namespace shadowsim
