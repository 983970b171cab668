#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "shadowsim/expm.hpp"
#include "shadowsim/heisenberg.hpp"
#include "shadowsim/oracle.hpp"
#include "shadowsim/qubits.hpp"

using namespace shadowsim;
using namespace shadowsim::testing;

namespace {

constexpr cplx kI{0.0, 1.0};

const std::vector<std::string> kSingle{"H", "S", "T", "X", "Y", "Z"};
const std::vector<std::string> kDouble{"CNOT", "CZ", "SWAP"};
const std::vector<std::string> kClifford{"H", "S", "X", "Y",
                                         "Z", "CNOT", "CZ", "SWAP"};

std::vector<Gate> random_circuit(int n, int depth, CounterRng& rng,
                                 const std::vector<std::string>* pool) {
  std::vector<Gate> out;
  for (int i = 0; i < depth; ++i) {
    std::string name;
    if (pool) {
      name = (*pool)[rng.next_u64() % pool->size()];
    } else if (n >= 2 && rng.uniform() < 0.4) {
      name = kDouble[rng.next_u64() % kDouble.size()];
    } else {
      name = kSingle[rng.next_u64() % kSingle.size()];
    }
    const bool two = name == "CNOT" || name == "CZ" || name == "SWAP";
    if (two && n < 2) {
      name = "H";
    }
    Gate g;
    g.name = name;
    const int a = 1 + static_cast<int>(rng.next_u64() % n);
    if (name == "CNOT" || name == "CZ" || name == "SWAP") {
      int b = 1 + static_cast<int>(rng.next_u64() % n);
      while (b == a) b = 1 + static_cast<int>(rng.next_u64() % n);
      g.qubits = {a, b};
    } else {
      g.qubits = {a};
    }
    out.push_back(g);
  }
  return out;
}

std::string random_word(int n, CounterRng& rng) {
  // Nonempty word over distinct qubits.
  std::string out;
  bool any = false;
  for (int q = 1; q <= n; ++q) {
    const int pick = static_cast<int>(rng.next_u64() % 4);
    if (pick == 3) continue;
    out += "XYZ"[pick] + std::to_string(q);
    any = true;
  }
  if (!any) out = "Z1";
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("heisenberg");

TEST_CASE("pauli map plumbing") {
  const PauliMap op = pauli_map_single(2, "X1Y2", 2.0);
  CHECK(op.terms.size() == 1);
  CHECK(pauli_map_norm(op) == doctest::Approx(2.0));
  const Matrix dense = pauli_map_dense(op);
  const Matrix x = gate_unitary("X"), y = gate_unitary("Y");
  CHECK((dense - 2.0 * kron(x, y)).cwiseAbs().maxCoeff() < 1e-14);

  const Vector v = pauli_map_to_vector(op);
  CHECK(v.cwiseAbs().sum() == doctest::Approx(2.0));  // single slot
}

TEST_CASE("transfer goldens for H, S, T") {
  // Local slots on one qubit: I=0, Z=1, X=2, XZ=3.
  const Matrix h = gate_transfer(gate_unitary("H"));
  CHECK(std::abs(h(2, 1) - 1.0) < 1e-14);   // X -> Z
  CHECK(std::abs(h(1, 2) - 1.0) < 1e-14);   // Z -> X
  CHECK(std::abs(h(3, 3) + 1.0) < 1e-14);   // XZ -> -XZ (Y -> -Y)
  CHECK(is_signed_permutation(h));

  const Matrix s = gate_transfer(gate_unitary("S"));
  CHECK(std::abs(s(2, 3) + kI) < 1e-14);    // X -> -i XZ = -Y
  CHECK(std::abs(s(1, 1) - 1.0) < 1e-14);   // Z fixed
  CHECK_FALSE(is_signed_permutation(s));    // entries are imaginary

  const Matrix t = gate_transfer(gate_unitary("T"));
  const double isq = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(t(2, 2) - isq) < 1e-14);       // X -> X/sqrt2 ...
  CHECK(std::abs(t(2, 3) + kI * isq) < 1e-14);  // ... - Y/sqrt2
  CHECK_FALSE(is_signed_permutation(t));

  const Matrix cx = gate_transfer(gate_unitary("CNOT"));
  // X on the control spreads to the target: slot 8 = X(x)1 -> 12 = X(x)X.
  CHECK(std::abs(cx(8, 12) - 1.0) < 1e-14);
  CHECK(is_signed_permutation(cx));
}

TEST_CASE("clifford transfers are signed permutations") {
  for (const auto& name : kClifford) {
    CAPTURE(name);
    const Matrix g = gate_transfer(gate_unitary(name));
    if (name == "S") {
      // S permutes Hermitian Paulis, but in the XZ-word basis the phase
      // i rides on the coefficient.
      continue;
    }
    CHECK(is_signed_permutation(g));
  }
  CHECK_THROWS_AS(gate_unitary("RX"), SchemaError);
}

TEST_CASE("gate step matches dense conjugation") {
  CounterRng rng(601, 0);
  const int n = 3;
  for (const auto& name : {"H", "S", "T", "CNOT", "SWAP"}) {
    CAPTURE(name);
    Gate g;
    g.name = name;
    g.qubits = std::string(name) == "CNOT" || std::string(name) == "SWAP"
                   ? std::vector<int>{3, 1}
                   : std::vector<int>{2};
    const PauliMap op = pauli_map_single(n, random_word(n, rng), 1.0);
    const PauliMap evolved = heisenberg_gate(op, g);
    const Matrix u = circuit_unitary_dense(n, {g});
    const Vector want =
        heisenberg_oracle_coefficients(n, u, pauli_map_dense(op));
    CHECK((pauli_map_to_vector(evolved) - want).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("circuit conjugation applies gates innermost first") {
  // U = H_1 then S_1 reading the list left to right; U^dag X U picks up
  // the S rotation first.
  const std::vector<Gate> circuit{{"H", {1}}, {"S", {1}}};
  const PauliMap op = pauli_map_single(1, "X1", 1.0);
  const PauliMap evolved = heisenberg_circuit(op, circuit);
  const Matrix u = circuit_unitary_dense(1, circuit);
  const Vector want = heisenberg_oracle_coefficients(1, u, pauli_map_dense(op));
  CHECK((pauli_map_to_vector(evolved) - want).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("random circuits track the dense oracle") {
  CounterRng rng(602, 0);
  for (int rep = 0; rep < 25; ++rep) {
    CounterRng sub = rng.split(rep);
    const int n = 2 + static_cast<int>(sub.next_u64() % 3);
    const int depth = 3 + static_cast<int>(sub.next_u64() % 10);
    const std::vector<Gate> circuit = random_circuit(n, depth, sub, nullptr);
    const PauliMap op = pauli_map_single(n, random_word(n, sub), 1.0);
    const PauliMap evolved = heisenberg_circuit(op, circuit);
    const Matrix u = circuit_unitary_dense(n, circuit);
    const Vector want =
        heisenberg_oracle_coefficients(n, u, pauli_map_dense(op));
    CHECK((pauli_map_to_vector(evolved) - want).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(pauli_map_norm(evolved) - 1.0) < 1e-10);  // unitary flow
  }
}

TEST_CASE("clifford circuits keep a single signed word") {
  CounterRng rng(603, 0);
  for (int rep = 0; rep < 20; ++rep) {
    CounterRng sub = rng.split(rep);
    const int n = 2 + static_cast<int>(sub.next_u64() % 3);
    const std::vector<Gate> circuit = random_circuit(n, 12, sub, &kClifford);
    const PauliMap op = pauli_map_single(n, random_word(n, sub), 1.0);
    const PauliMap evolved = heisenberg_circuit(op, circuit);
    REQUIRE(evolved.terms.size() == 1);
    CHECK(std::abs(std::abs(evolved.terms.begin()->second) - 1.0) < 1e-12);
  }
  // One T splits X into two words.
  const PauliMap split =
      heisenberg_circuit(pauli_map_single(1, "X1", 1.0), {{"T", {1}}});
  CHECK(split.terms.size() == 2);
}

TEST_CASE("support metrics and the light cone") {
  const PauliMap op = pauli_map_single(3, "X1", 1.0);
  const SupportMetric m = support_metric(op);
  CHECK(m.weight_mass[1] == doctest::Approx(1.0));
  CHECK(m.qubit_mass[0] == doctest::Approx(1.0));
  CHECK(m.qubit_mass[1] == 0.0);
  CHECK(support_qubits(op) == std::vector<int>{1});

  // A gate that never touches the support leaves the cone unchanged.
  const std::vector<Gate> far{{"CNOT", {2, 3}}};
  CHECK(light_cone(3, far, {1}) == std::vector<int>{1});
  const std::vector<Gate> touching{{"CNOT", {1, 2}}};
  CHECK(light_cone(3, touching, {1}) == std::vector<int>{1, 2});

  CounterRng rng(604, 0);
  for (int rep = 0; rep < 30; ++rep) {
    CounterRng sub = rng.split(rep);
    const int n = 2 + static_cast<int>(sub.next_u64() % 4);
    const std::vector<Gate> circuit = random_circuit(n, 10, sub, nullptr);
    const PauliMap start = pauli_map_single(n, "Y1", 1.0);
    const PauliMap evolved = heisenberg_circuit(start, circuit);
    const std::vector<int> cone = light_cone(n, circuit, {1});
    for (int q : support_qubits(evolved)) {
      CHECK(std::binary_search(cone.begin(), cone.end(), q));
    }
  }
}

TEST_CASE("continuous flow matches the oracle and the duality") {
  CounterRng rng(605, 0);
  const int n = 2;
  const auto terms = collect_pauli_terms(
      n, {{"X1", 0.9}, {"Z1Z2", -0.7}, {"Y2", 0.55}});
  const SparseMatrix hs = full_pauli_shadow_hamiltonian(n, terms);
  const Matrix h = pauli_terms_dense(n, terms);

  const PauliMap op = pauli_map_single(n, "Z1", 1.0);
  const Vector z0 = pauli_map_to_vector(op);
  const Matrix op_dense = pauli_map_dense(op);
  const Vector psi = random_state(1 << n, rng);
  const Matrix rho = psi * psi.adjoint();

  for (const double t : {0.4, 1.9}) {
    const Vector zt = heisenberg_continuous(hs, z0, t);
    const Matrix u = dense_expm(h, t);
    const Vector want = heisenberg_oracle_coefficients(n, u, op_dense);
    CHECK((zt - want).cwiseAbs().maxCoeff() < 1e-8);

    // sum_m z_m(t) <P_m>_rho equals <Op>_{rho(t)} with rho evolved forward.
    const OperatorSet words = full_pauli_set(n);
    cplx lhs = 0.0;
    for (int m = 0; m < words.size(); ++m) {
      lhs += zt[m] * (rho * words.ops[m]).trace();
    }
    const Matrix rho_t = evolve_full_density(h, rho, t);
    const cplx rhs = (rho_t * op_dense).trace();
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }
}

TEST_SUITE_END();
