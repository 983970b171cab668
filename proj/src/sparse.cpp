#include "shadowsim/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace shadowsim {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require(rows >= 0 && cols >= 0, "sparse: negative dimension");
  row_ptr_.assign(static_cast<std::size_t>(rows) + 1, 0);
}

SparseMatrix SparseMatrix::from_triplets(int rows, int cols,
                                         std::vector<Triplet> entries) {
  SparseMatrix m(rows, cols);
  for (const auto& t : entries) {
    require(t.row >= 0 && t.row < rows && t.col >= 0 && t.col < cols,
            "sparse: triplet index out of range");
    require(std::isfinite(t.value.real()) && std::isfinite(t.value.imag()),
            "sparse: non-finite entry");
  }
  std::sort(entries.begin(), entries.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  m.col_idx_.reserve(entries.size());
  m.values_.reserve(entries.size());
  std::size_t i = 0;
  for (int r = 0; r < rows; ++r) {
    while (i < entries.size() && entries[i].row == r) {
      cplx acc = entries[i].value;
      int c = entries[i].col;
      ++i;
      while (i < entries.size() && entries[i].row == r && entries[i].col == c) {
        acc += entries[i].value;
        ++i;
      }
      if (acc != cplx(0.0, 0.0)) {
        m.col_idx_.push_back(c);
        m.values_.push_back(acc);
      }
    }
    m.row_ptr_[static_cast<std::size_t>(r) + 1] =
        static_cast<int>(m.col_idx_.size());
  }
  return m;
}

SparseMatrix SparseMatrix::from_csr(int rows, int cols,
                                    std::vector<int> row_ptr,
                                    std::vector<int> col_idx,
                                    std::vector<cplx> values) {
  SparseMatrix m(rows, cols);
  require(row_ptr.size() == static_cast<std::size_t>(rows) + 1 &&
              row_ptr.front() == 0 &&
              row_ptr.back() == static_cast<int>(col_idx.size()) &&
              col_idx.size() == values.size(),
          "sparse: malformed CSR arrays");
  for (int r = 0; r < rows; ++r) {
    require(row_ptr[r] <= row_ptr[static_cast<std::size_t>(r) + 1],
            "sparse: row pointers not monotone");
    for (int k = row_ptr[r]; k < row_ptr[static_cast<std::size_t>(r) + 1]; ++k) {
      require(col_idx[k] >= 0 && col_idx[k] < cols,
              "sparse: CSR column out of range");
      require(k == row_ptr[r] || col_idx[k - 1] < col_idx[k],
              "sparse: CSR columns not sorted unique");
    }
  }
  m.row_ptr_ = std::move(row_ptr);
  m.col_idx_ = std::move(col_idx);
  m.values_ = std::move(values);
  return m;
}

cplx SparseMatrix::coeff(int row, int col) const {
  require(row >= 0 && row < rows_ && col >= 0 && col < cols_,
          "sparse: coeff index out of range");
  int lo = row_ptr_[row];
  int hi = row_ptr_[static_cast<std::size_t>(row) + 1];
  auto begin = col_idx_.begin() + lo;
  auto end = col_idx_.begin() + hi;
  auto it = std::lower_bound(begin, end, col);
  if (it != end && *it == col) return values_[it - col_idx_.begin()];
  return cplx(0.0, 0.0);
}

int SparseMatrix::max_row_nnz() const {
  int best = 0;
  for (int r = 0; r < rows_; ++r) {
    best = std::max(best, row_ptr_[static_cast<std::size_t>(r) + 1] - row_ptr_[r]);
  }
  return best;
}

double SparseMatrix::max_abs() const {
  double best = 0.0;
  for (const cplx& v : values_) best = std::max(best, std::abs(v));
  return best;
}

SparseMatrix SparseMatrix::adjoint() const {
  std::vector<Triplet> t;
  t.reserve(values_.size());
  for (int r = 0; r < rows_; ++r) {
    for (int k = row_ptr_[r]; k < row_ptr_[static_cast<std::size_t>(r) + 1]; ++k) {
      t.push_back({col_idx_[k], r, std::conj(values_[k])});
    }
  }
  return from_triplets(cols_, rows_, std::move(t));
}

SparseMatrix SparseMatrix::conjugate() const {
  SparseMatrix m = *this;
  for (cplx& v : m.values_) v = std::conj(v);
  return m;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<Triplet> t;
  t.reserve(values_.size());
  for (int r = 0; r < rows_; ++r) {
    for (int k = row_ptr_[r]; k < row_ptr_[static_cast<std::size_t>(r) + 1]; ++k) {
      t.push_back({col_idx_[k], r, values_[k]});
    }
  }
  return from_triplets(cols_, rows_, std::move(t));
}

Matrix SparseMatrix::to_dense() const {
  Matrix d = Matrix::Zero(rows_, cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = row_ptr_[r]; k < row_ptr_[static_cast<std::size_t>(r) + 1]; ++k) {
      d(r, col_idx_[k]) = values_[k];
    }
  }
  return d;
}

std::vector<Triplet> SparseMatrix::to_triplets() const {
  std::vector<Triplet> t;
  t.reserve(values_.size());
  for (int r = 0; r < rows_; ++r) {
    for (int k = row_ptr_[r]; k < row_ptr_[static_cast<std::size_t>(r) + 1]; ++k) {
      t.push_back({r, col_idx_[k], values_[k]});
    }
  }
  return t;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& other) const {
  require(rows_ == other.rows_ && cols_ == other.cols_,
          "sparse: shape mismatch in sum");
  std::vector<Triplet> t = to_triplets();
  std::vector<Triplet> u = other.to_triplets();
  t.insert(t.end(), u.begin(), u.end());
  return from_triplets(rows_, cols_, std::move(t));
}

SparseMatrix SparseMatrix::scaled(cplx factor) const {
  std::vector<Triplet> t = to_triplets();
  for (auto& e : t) e.value *= factor;
  return from_triplets(rows_, cols_, std::move(t));
}

void spmv_serial(const SparseMatrix& a, const cplx* x, cplx* y) {
  const auto& rp = a.row_ptr();
  const auto& ci = a.col_idx();
  const auto& v = a.values();
  const int rows = a.rows();
  for (int r = 0; r < rows; ++r) {
    cplx acc(0.0, 0.0);
    for (int k = rp[r]; k < rp[static_cast<std::size_t>(r) + 1]; ++k) {
      acc += v[k] * x[ci[k]];
    }
    y[r] = acc;
  }
}

void spmv_omp(const SparseMatrix& a, const cplx* x, cplx* y) {
  const auto& rp = a.row_ptr();
  const auto& ci = a.col_idx();
  const auto& v = a.values();
  const int rows = a.rows();
#pragma omp parallel for schedule(static)
  for (int r = 0; r < rows; ++r) {
    cplx acc(0.0, 0.0);
    for (int k = rp[r]; k < rp[static_cast<std::size_t>(r) + 1]; ++k) {
      acc += v[k] * x[ci[k]];
    }
    y[r] = acc;
  }
}

void spmv(const SparseMatrix& a, const cplx* x, cplx* y) {
#ifdef _OPENMP
  if (a.rows() >= 4096) {
    spmv_omp(a, x, y);
    return;
  }
#endif
  spmv_serial(a, x, y);
}

Vector spmv(const SparseMatrix& a, const Vector& x) {
  require(a.cols() == static_cast<int>(x.size()), "spmv: size mismatch");
  Vector y(a.rows());
  spmv(a, x.data(), y.data());
  return y;
}

SparseMatrix sparse_identity(int n) {
  std::vector<Triplet> t;
  t.reserve(n);
  for (int i = 0; i < n; ++i) t.push_back({i, i, cplx(1.0, 0.0)});
  return SparseMatrix::from_triplets(n, n, std::move(t));
}

SparseMatrix sparse_kron(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(a.nnz()) * b.nnz());
  for (const auto& ea : a.to_triplets()) {
    for (const auto& eb : b.to_triplets()) {
      t.push_back({ea.row * b.rows() + eb.row, ea.col * b.cols() + eb.col,
                   ea.value * eb.value});
    }
  }
  return SparseMatrix::from_triplets(a.rows() * b.rows(), a.cols() * b.cols(),
                                     std::move(t));
}

SparseMatrix sparse_kron_sum(const SparseMatrix& a, const SparseMatrix& b) {
  require(a.rows() == a.cols() && b.rows() == b.cols(),
          "kron_sum: factors must be square");
  return sparse_kron(a, sparse_identity(b.rows())) +
         sparse_kron(sparse_identity(a.rows()), b);
}

double hermitian_defect(const SparseMatrix& a) {
  require(a.rows() == a.cols(), "hermitian_defect: matrix not square");
  double best = 0.0;
  for (const auto& t : a.to_triplets()) {
    best = std::max(best, std::abs(t.value - std::conj(a.coeff(t.col, t.row))));
  }
  return best;
}

double hermitian_defect(const Matrix& a) {
  require(a.rows() == a.cols(), "hermitian_defect: matrix not square");
  if (a.rows() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace shadowsim
