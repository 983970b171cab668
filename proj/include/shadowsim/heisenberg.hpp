#pragma once

#include <map>
#include <string>
#include <vector>

#include "shadowsim/pauli.hpp"
#include "shadowsim/sparse.hpp"
#include "shadowsim/types.hpp"

namespace shadowsim {

// Operator in the Pauli word basis, keyed by (x << n) | z. Only words with
// nonzero coefficient are stored, so locality survives evolution.
struct PauliMap {
  int n = 0;
  std::map<std::uint64_t, cplx> terms;
};

PauliMap pauli_map_single(int n, const std::string& word, cplx coef = 1.0);
Vector pauli_map_to_vector(const PauliMap& op);  // dense 4^n coefficients
Matrix pauli_map_dense(const PauliMap& op);
double pauli_map_norm(const PauliMap& op);

// Heisenberg flow of coefficient vectors under a shadow generator:
// z(t) = exp(-i t hs^T) z(0).
Vector heisenberg_continuous(const SparseMatrix& hs, const Vector& z, double t,
                             double tol = 1e-10);

// ---- circuits -----------------------------------------------------------

struct Gate {
  std::string name;        // H S T X Y Z CNOT CZ SWAP, or "unitary"
  std::vector<int> qubits;  // 1-based, first listed = most significant
  Matrix u{};               // only read when name == "unitary"
};

Matrix gate_unitary(const std::string& name);
Matrix gate_matrix(const Gate& gate);
// g_ll' with G^dag P_l G = sum_l' g_ll' P_l' over the 4^k local words.
Matrix gate_transfer(const Matrix& u);
bool is_signed_permutation(const Matrix& transfer, double tol = 1e-10);

// One Heisenberg step: the gate's transfer row replaces the local part of
// every stored word; the rest of the word rides along unchanged.
PauliMap heisenberg_gate(const PauliMap& op, const Gate& gate,
                         double drop_tol = 1e-12);
// U = G_L ... G_1, so conjugation applies gate L first.
PauliMap heisenberg_circuit(PauliMap op, const std::vector<Gate>& circuit,
                            double drop_tol = 1e-12);

// ---- diagnostics ---------------------------------------------------------

struct SupportMetric {
  std::vector<double> weight_mass;  // |z|^2 by Pauli weight, index 0..n
  RealVector qubit_mass;            // |z|^2 touching each qubit
};
SupportMetric support_metric(const PauliMap& op);
// Qubits carrying more than `threshold` of the total squared mass.
std::vector<int> support_qubits(const PauliMap& op, double threshold = 1e-12);
// Qubits reachable from `start` through the circuit's gate graph, in the
// order conjugation applies the gates; evolved support stays inside it.
std::vector<int> light_cone(int n, const std::vector<Gate>& circuit,
                            const std::vector<int>& start);

// ---- dense route ---------------------------------------------------------

Vector apply_gate_state(const Gate& gate, int n, Vector psi);
Matrix circuit_unitary_dense(int n, const std::vector<Gate>& circuit);
// z_m = tr(P_m^dag U^dag Op U) / 2^n over all words.
Vector heisenberg_oracle_coefficients(int n, const Matrix& u, const Matrix& op);

}  // namespace shadowsim
