#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace shadowsim {

using cplx = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Error taxonomy. Each refusal path maps to one exit code in the CLI
// (see cli.cpp): schema 1, verification 2, leakage 3, non-Hermitian 4,
// degenerate shadow 5, capacity 6.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad JSON, index out of range, ...).
struct SchemaError : Error {
  using Error::Error;
};

// Oracle comparison exceeded the verification gate.
struct VerificationError : Error {
  using Error::Error;
};

// The operator set is not closed under commutation with H beyond tolerance.
struct LeakageError : Error {
  using Error::Error;
};

// A shadow generator failed its Hermiticity precondition.
struct NonHermitianError : Error {
  using Error::Error;
};

// All expectation values vanish; no shadow state exists.
struct DegenerateShadowError : Error {
  using Error::Error;
};

// Requested dimension exceeds the dense-oracle cutoff.
struct CapacityError : Error {
  using Error::Error;
};

// Operation is well-formed but its preconditions on the physics fail
// (e.g. a number-conserving cross-check fed a pairing Hamiltonian).
struct NotApplicableError : Error {
  using Error::Error;
};

// Dense-oracle dimension cap; SHADOWSIM_DENSE_CUTOFF overrides.
int dense_cutoff();

void require(bool cond, const std::string& msg);

}  // namespace shadowsim
