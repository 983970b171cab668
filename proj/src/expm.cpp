#include "shadowsim/expm.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace shadowsim {

double frobenius(const Matrix& a) { return a.norm(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix dense_expm(const Matrix& h, double t, double tol) {
  require(h.rows() == h.cols() && h.rows() > 0, "dense_expm: matrix not square");
  if (h.rows() > dense_cutoff()) {
    throw CapacityError("dense_expm: dimension " + std::to_string(h.rows()) +
                        " exceeds dense cutoff " + std::to_string(dense_cutoff()));
  }
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  const double defect = hermitian_defect(h);
  if (defect > tol * scale) {
    throw NonHermitianError("dense_expm: hermitian defect " +
                            std::to_string(defect) + " exceeds tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const cplx mi(0.0, -1.0);
  Vector phases = (mi * t * es.eigenvalues().cast<cplx>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

// exp(-i s T_m)(beta e1) for symmetric tridiagonal T_m given its
// eigendecomposition; also the max |last component| over s in [0, tau],
// which drives the defect-based error bound.
struct SmallSolution {
  Vector y;
  double max_last;
};

SmallSolution propagate_small(const RealVector& evals, const RealMatrix& evecs,
                              double beta, double tau) {
  const int m = static_cast<int>(evals.size());
  RealVector head = beta * evecs.row(0).transpose();  // Q^T (beta e1)
  const cplx mi(0.0, -1.0);
  SmallSolution out;
  out.max_last = 0.0;
  const int samples = 9;
  for (int s = 1; s <= samples; ++s) {
    const double frac = static_cast<double>(s) / samples;
    Vector phase = (mi * (tau * frac) * evals.cast<cplx>()).array().exp();
    Vector y = evecs.cast<cplx>() * (phase.array() * head.cast<cplx>().array()).matrix();
    out.max_last = std::max(out.max_last, std::abs(y(m - 1)));
    if (s == samples) out.y = std::move(y);
  }
  return out;
}

// One Lanczos substep: w ~= exp(-i tau h) v to absolute accuracy tol_abs.
// Returns false when the subspace cap is hit before convergence.
bool lanczos_step(const SparseMatrix& h, const Vector& v, double tau,
                  double tol_abs, int max_m, Vector* out) {
  const double beta = v.norm();
  if (beta == 0.0 || tau == 0.0) {
    *out = v;
    return true;
  }
  const int dim = static_cast<int>(v.size());
  max_m = std::min(max_m, dim);
  const double breakdown = 1e-14 * std::max(1.0, h.max_abs()) * beta;

  std::vector<Vector> basis;
  basis.reserve(max_m + 1);
  basis.push_back(v / beta);
  std::vector<double> alpha;
  std::vector<double> offdiag;  // offdiag[j] couples j and j+1

  auto small_exp = [&](int m, double* max_last) {
    RealMatrix tm = RealMatrix::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      tm(i, i) = alpha[i];
      if (i + 1 < m) tm(i, i + 1) = tm(i + 1, i) = offdiag[i];
    }
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(tm);
    SmallSolution sol = propagate_small(es.eigenvalues(), es.eigenvectors(), beta, tau);
    *max_last = sol.max_last;
    return sol.y;
  };

  auto assemble = [&](const Vector& y) {
    Vector w = Vector::Zero(dim);
    for (int i = 0; i < static_cast<int>(y.size()); ++i) w += y(i) * basis[i];
    return w;
  };

  for (int j = 0; j < max_m; ++j) {
    Vector w = spmv(h, basis[j]);
    const double aj = std::real(basis[j].dot(w));
    alpha.push_back(aj);
    w -= aj * basis[j];
    if (j > 0) w -= offdiag[j - 1] * basis[j - 1];
    // Full reorthogonalization, two passes; keeps the basis orthonormal to
    // machine precision so the propagated norm is exact.
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i <= j; ++i) w -= basis[i].dot(w) * basis[i];
    }
    const double b = w.norm();
    const int m = j + 1;
    if (b <= breakdown) {
      // Krylov space is invariant: the small solution is exact.
      double unused;
      *out = assemble(small_exp(m, &unused));
      return true;
    }
    if (m == max_m || m % 4 == 0) {
      double max_last = 0.0;
      Vector y = small_exp(m, &max_last);
      const double est = b * std::abs(tau) * max_last;
      if (est <= tol_abs) {
        *out = assemble(y);
        return true;
      }
    }
    basis.push_back(w / b);
    offdiag.push_back(b);
  }
  return false;
}

}  // namespace

Vector expm_action(const SparseMatrix& h, const Vector& v, double t, double tol) {
  require(h.rows() == h.cols(), "expm_action: matrix not square");
  require(h.rows() == static_cast<int>(v.size()), "expm_action: size mismatch");
  const double scale = std::max(1.0, h.max_abs());
  const double defect = hermitian_defect(h);
  if (defect > std::max(tol, 1e-12) * scale) {
    throw NonHermitianError("expm_action: hermitian defect " +
                            std::to_string(defect) + " exceeds tolerance");
  }
  if (t == 0.0 || v.norm() == 0.0) return v;

  const int max_m = 96;
  Vector cur = v;
  double done = 0.0;
  double step = t;
  int attempts = 0;
  while (std::abs(done) < std::abs(t) * (1.0 - 1e-15)) {
    const double rem = t - done;
    if (std::abs(step) > std::abs(rem)) step = rem;
    // Linear error budget across substeps.
    const double tol_abs =
        std::max(tol * cur.norm() * std::abs(step) / std::abs(t), 1e-16);
    Vector next;
    if (lanczos_step(h, cur, step, tol_abs, max_m, &next)) {
      cur = std::move(next);
      done += step;
      step *= 1.5;
    } else {
      step *= 0.5;
    }
    if (++attempts > 10000) {
      throw Error("expm_action: step control failed to converge");
    }
  }
  return cur;
}

}  // namespace shadowsim
