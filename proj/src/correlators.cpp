#include "shadowsim/correlators.hpp"

#include "shadowsim/expm.hpp"
#include "shadowsim/fermions.hpp"
#include "shadowsim/oracle.hpp"

namespace shadowsim {

Matrix correlator_init_dense(const OperatorSet& set, const Matrix& rho) {
  require(rho.rows() == set.dim() && rho.cols() == set.dim(),
          "correlator: density matrix does not match operator set");
  const int m = set.size();
  Matrix c(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      c(a, b) = (rho * set.ops[a] * set.ops[b]).trace();
    }
  }
  return c;
}

Matrix fermion_vacuum_two_point(int n) {
  require(n >= 1, "correlator: need at least one mode");
  Matrix t = Matrix::Identity(2 * n, 2 * n);
  for (int l = 1; l <= n; ++l) {
    t(2 * l - 2, 2 * l - 1) = cplx(0.0, 1.0);
    t(2 * l - 1, 2 * l - 2) = cplx(0.0, -1.0);
  }
  return t;
}

Matrix fermion_vacuum_correlator_matrix(int n) {
  const Matrix t = fermion_vacuum_two_point(n);
  const int m = majorana_pair_count(n);
  Matrix c(m, m);
  for (int row = 0; row < m; ++row) {
    const auto [a, b] = majorana_pair_from_index(n, row);
    for (int col = 0; col < m; ++col) {
      const auto [cc, d] = majorana_pair_from_index(n, col);
      c(row, col) = t(a - 1, b - 1) * t(cc - 1, d - 1) -
                    t(a - 1, cc - 1) * t(b - 1, d - 1) +
                    t(a - 1, d - 1) * t(b - 1, cc - 1);
    }
  }
  return c;
}

Vector evolve_axis(const std::vector<int>& dims, int axis,
                   const SparseMatrix& hs, Vector v, double t, double tol) {
  require(axis >= 0 && axis < static_cast<int>(dims.size()),
          "correlator: axis out of range");
  Eigen::Index total = 1;
  for (int d : dims) {
    require(d >= 1, "correlator: empty register");
    total *= d;
  }
  require(v.size() == total, "correlator: vector does not match registers");
  const int block = dims[axis];
  require(hs.rows() == block && hs.cols() == block,
          "correlator: generator does not match register");
  Eigen::Index inner = 1;
  for (std::size_t r = axis + 1; r < dims.size(); ++r) inner *= dims[r];
  const Eigen::Index outer = total / (inner * block);

  Vector fiber(block);
  for (Eigen::Index o = 0; o < outer; ++o) {
    for (Eigen::Index i = 0; i < inner; ++i) {
      const Eigen::Index base = o * block * inner + i;
      for (int k = 0; k < block; ++k) fiber[k] = v[base + k * inner];
      fiber = expm_action(hs, fiber, t, tol);
      for (int k = 0; k < block; ++k) v[base + k * inner] = fiber[k];
    }
  }
  return v;
}

Matrix evolve_correlator(const SparseMatrix& hs, const Matrix& c0, double t,
                         double tprime, double tol) {
  const int m = static_cast<int>(c0.rows());
  require(c0.cols() == m && hs.rows() == m, "correlator: shape mismatch");
  Vector v(static_cast<Eigen::Index>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) v[static_cast<Eigen::Index>(a) * m + b] = c0(a, b);
  }
  const std::vector<int> dims{m, m};
  if (t != 0.0) v = evolve_axis(dims, 0, hs, std::move(v), t, tol);
  if (tprime != 0.0) v = evolve_axis(dims, 1, hs, std::move(v), tprime, tol);
  Matrix c(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) c(a, b) = v[static_cast<Eigen::Index>(a) * m + b];
  }
  return c;
}

Matrix correlator_oracle(const Matrix& h, const OperatorSet& set,
                         const Matrix& rho, double t, double tprime) {
  require(rho.rows() == set.dim() && h.rows() == set.dim(),
          "correlator: dimension mismatch");
  const Matrix ut = dense_expm(h, t);
  const Matrix utp = dense_expm(h, tprime);
  const int m = set.size();
  std::vector<Matrix> at(m), atp(m);
  for (int a = 0; a < m; ++a) {
    at[a] = ut.adjoint() * set.ops[a] * ut;
    atp[a] = utp.adjoint() * set.ops[a] * utp;
  }
  Matrix c(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) c(a, b) = (rho * at[a] * atp[b]).trace();
  }
  return c;
}

}  // namespace shadowsim
