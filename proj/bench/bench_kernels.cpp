// Times the OpenMP kernels against their serial reference implementations:
// shadow-generator row assembly and CSR matrix-vector products. The two
// variants must agree bit-for-bit on the assembled matrix and to rounding
// on spmv; the bench fails loudly if they drift.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "shadowsim/fermions.hpp"
#include "shadowsim/rng.hpp"
#include "shadowsim/sparse.hpp"
#include "shadowsim/types.hpp"

using namespace shadowsim;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

Matrix banded_gamma(int n, int band, CounterRng& rng) {
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

double sparse_max_diff(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.nnz() != b.nnz()) return 1e100;
  double d = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    if (a.col_idx()[i] != b.col_idx()[i]) return 1e100;
    d = std::max(d, std::abs(a.values()[i] - b.values()[i]));
  }
  return d;
}

}  // namespace

int main() {
  std::printf("%-28s %10s %12s %12s %8s %10s\n", "kernel", "size",
              "serial [s]", "omp [s]", "speedup", "agree");

  for (int n : {100, 200, 400}) {
    CounterRng rng(0xBE7C, n);
    const Matrix gamma = banded_gamma(n, 8, rng);

    SparseMatrix hs_serial, hs_omp;
    const double ts = seconds(
        [&] { hs_serial = fermion_shadow_hamiltonian_serial(gamma); }, 3);
    const double to =
        seconds([&] { hs_omp = fermion_shadow_hamiltonian_omp(gamma); }, 3);
    const double diff = sparse_max_diff(hs_serial, hs_omp);
    std::printf("%-28s %10d %12.4f %12.4f %7.2fx %10s\n", "generator assembly",
                hs_serial.rows(), ts, to, ts / to,
                diff == 0.0 ? "exact" : "DRIFT");
    if (diff != 0.0) return 1;

    const int m = hs_serial.rows();
    Vector x(m), ys = Vector::Zero(m), yo = Vector::Zero(m);
    for (int i = 0; i < m; ++i) x[i] = rng.normal_cplx();
    const int reps = 20;
    const double ss = seconds(
        [&] {
          for (int r = 0; r < reps; ++r) {
            spmv_serial(hs_serial, x.data(), ys.data());
          }
        },
        3);
    const double so = seconds(
        [&] {
          for (int r = 0; r < reps; ++r) spmv_omp(hs_omp, x.data(), yo.data());
        },
        3);
    const double verr = (ys - yo).norm();
    std::printf("%-28s %10d %12.4f %12.4f %7.2fx %10s\n", "spmv (20 products)",
                m, ss, so, ss / so, verr == 0.0 ? "exact" : "DRIFT");
    if (verr != 0.0) return 1;
  }
  return 0;
}
