#pragma once

#include "shadowsim/rng.hpp"
#include "shadowsim/types.hpp"

namespace shadowsim::testing {

inline Matrix random_hermitian(int dim, CounterRng& rng) {
  Matrix a(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) a(r, c) = rng.normal_cplx();
  }
  return 0.5 * (a + a.adjoint());
}

inline Vector random_state(int dim, CounterRng& rng) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.normal_cplx();
  v /= v.norm();
  return v;
}

inline Vector random_real_state(int dim, CounterRng& rng) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.normal();
  v /= v.norm();
  return v;
}

inline Matrix random_density(int dim, int rank, CounterRng& rng) {
  Matrix rho = Matrix::Zero(dim, dim);
  double total = 0.0;
  for (int k = 0; k < rank; ++k) {
    const Vector psi = random_state(dim, rng);
    const double w = rng.uniform() + 0.1;
    rho += w * (psi * psi.adjoint());
    total += w;
  }
  return rho / total;
}

// Canonical quadratic coefficient matrix: Hermitian, purely imaginary,
// zero diagonal, 2n x 2n.
inline Matrix random_gamma(int n, CounterRng& rng) {
  Matrix g = Matrix::Zero(2 * n, 2 * n);
  for (int j = 0; j < 2 * n; ++j) {
    for (int k = j + 1; k < 2 * n; ++k) {
      const cplx v(0.0, rng.normal());
      g(j, k) = v;
      g(k, j) = -v;
    }
  }
  return g;
}

// Same, but gamma_jk = 0 unless |j - k| <= band.
inline Matrix random_banded_gamma(int n, int band, CounterRng& rng) {
  Matrix g = Matrix::Zero(2 * n, 2 * n);
  for (int j = 0; j < 2 * n; ++j) {
    for (int k = j + 1; k < 2 * n && k - j <= band; ++k) {
      const cplx v(0.0, rng.normal());
      g(j, k) = v;
      g(k, j) = -v;
    }
  }
  return g;
}

}  // namespace shadowsim::testing
