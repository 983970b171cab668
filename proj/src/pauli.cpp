#include "shadowsim/pauli.hpp"

#include <bit>
#include <cctype>

#include "shadowsim/expm.hpp"

namespace shadowsim {

namespace {

void check_n(int n) {
  require(n >= 1 && n <= 32, "pauli: qubit count must be in [1, 32]");
}

}  // namespace

ParsedPauli parse_pauli(const std::string& text, int n) {
  check_n(n);
  PauliString p;
  p.n = n;
  cplx factor(1.0, 0.0);
  std::size_t i = 0;
  // Bare identity spellings.
  if (text == "1" || text == "I" || text.empty()) return {p, factor};
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    char axis = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    require(axis == 'X' || axis == 'Y' || axis == 'Z',
            "pauli: expected axis letter in '" + text + "'");
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    require(i > start, "pauli: missing qubit index in '" + text + "'");
    int q = std::stoi(text.substr(start, i - start));
    require(q >= 1 && q <= n, "pauli: qubit index out of range in '" + text + "'");
    std::uint64_t bit = 1ULL << pauli_bit(n, q);
    require(!((p.x | p.z) & bit), "pauli: repeated qubit in '" + text + "'");
    if (axis == 'X') {
      p.x |= bit;
    } else if (axis == 'Z') {
      p.z |= bit;
    } else {  // Y = i X Z
      p.x |= bit;
      p.z |= bit;
      factor *= cplx(0.0, 1.0);
    }
  }
  return {p, factor};
}

std::string pauli_label(const PauliString& p) {
  std::string out;
  for (int q = 1; q <= p.n; ++q) {
    std::uint64_t bit = 1ULL << pauli_bit(p.n, q);
    if (q > 1) out += '.';
    bool hx = p.x & bit;
    bool hz = p.z & bit;
    if (hx && hz) {
      out += "XZ";
    } else if (hx) {
      out += 'X';
    } else if (hz) {
      out += 'Z';
    } else {
      out += 'I';
    }
  }
  return out;
}

Matrix pauli_matrix(const PauliString& p) {
  check_n(p.n);
  Matrix X(2, 2), Z(2, 2), XZ(2, 2), I2 = Matrix::Identity(2, 2);
  X << 0, 1, 1, 0;
  Z << 1, 0, 0, -1;
  XZ << 0, -1, 1, 0;
  Matrix out = Matrix::Identity(1, 1);
  for (int q = 1; q <= p.n; ++q) {
    std::uint64_t bit = 1ULL << pauli_bit(p.n, q);
    bool hx = p.x & bit;
    bool hz = p.z & bit;
    const Matrix& factor = hx && hz ? XZ : hx ? X : hz ? Z : I2;
    out = kron(out, factor);
  }
  return out;
}

double pauli_mult_sign(const PauliString& p, const PauliString& q) {
  return std::popcount(p.z & q.x) % 2 == 0 ? 1.0 : -1.0;
}

PauliString pauli_mult(const PauliString& p, const PauliString& q) {
  require(p.n == q.n, "pauli: size mismatch");
  return {p.n, p.x ^ q.x, p.z ^ q.z};
}

bool pauli_commutes(const PauliString& p, const PauliString& q) {
  require(p.n == q.n, "pauli: size mismatch");
  return (std::popcount(p.x & q.z) + std::popcount(p.z & q.x)) % 2 == 0;
}

int pauli_weight(const PauliString& p) {
  return std::popcount(p.x | p.z);
}

Vector pauli_apply(const PauliString& p, const Vector& v) {
  const std::size_t dim = 1ULL << p.n;
  require(v.size() == static_cast<Eigen::Index>(dim), "pauli: state size mismatch");
  Vector out(v.size());
  for (std::size_t b = 0; b < dim; ++b) {
    double sign = std::popcount(p.z & b) % 2 == 0 ? 1.0 : -1.0;
    out[b ^ p.x] = sign * v[b];
  }
  return out;
}

cplx pauli_expectation(const PauliString& p, const Vector& psi) {
  return psi.dot(pauli_apply(p, psi));
}

std::vector<PauliString> full_pauli_words(int n) {
  check_n(n);
  require(n <= 16, "pauli: full word list limited to n <= 16");
  const std::uint64_t side = 1ULL << n;
  std::vector<PauliString> out;
  out.reserve(side * side);
  for (std::uint64_t i = 0; i < side; ++i) {
    for (std::uint64_t j = 0; j < side; ++j) {
      out.push_back({n, i, j});
    }
  }
  return out;
}

}  // namespace shadowsim
