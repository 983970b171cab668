#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shadowsim/types.hpp"

namespace shadowsim {

// Pauli word X^x Z^z in binary symplectic form, no scalar prefactor.
// Qubit q (1-based) lives at bit (n - q), so the x word read as a binary
// number is the X-exponent string i1 i2 ... in with qubit 1 leading.
struct PauliString {
  int n = 0;
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  bool operator==(const PauliString& o) const {
    return n == o.n && x == o.x && z == o.z;
  }
};

inline int pauli_bit(int n, int qubit) { return n - qubit; }

// Parses "X1Y2Z3" (or "1"/"I" for identity). Y_q is i * X_q Z_q, so the
// returned factor carries i^{#Y}: term = factor * X^x Z^z.
struct ParsedPauli {
  PauliString p;
  cplx factor;
};
ParsedPauli parse_pauli(const std::string& text, int n);

// Per-qubit tokens from {I, X, Z, XZ}, '.'-joined: "X.I.XZ".
std::string pauli_label(const PauliString& p);

Matrix pauli_matrix(const PauliString& p);

// P*Q = sign * (x xor, z xor); sign = (-1)^{z_P . x_Q}.
double pauli_mult_sign(const PauliString& p, const PauliString& q);
PauliString pauli_mult(const PauliString& p, const PauliString& q);
bool pauli_commutes(const PauliString& p, const PauliString& q);
int pauli_weight(const PauliString& p);

// P|b> = (-1)^{z.b} |b xor x>.
Vector pauli_apply(const PauliString& p, const Vector& v);
cplx pauli_expectation(const PauliString& p, const Vector& psi);

// All 4^n words ordered m = int(i) * 2^n + int(j) for P = X^i Z^j.
std::vector<PauliString> full_pauli_words(int n);
inline std::size_t pauli_slot(const PauliString& p) {
  return (static_cast<std::size_t>(p.x) << p.n) | p.z;
}

}  // namespace shadowsim
