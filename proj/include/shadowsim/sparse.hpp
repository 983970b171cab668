#pragma once

#include <tuple>
#include <vector>

#include "shadowsim/types.hpp"

namespace shadowsim {

struct Triplet {
  int row;
  int col;
  cplx value;
};

// Complex sparse matrix in CSR form. Canonical: rows sorted, columns
// sorted within a row, duplicates accumulated, exact zeros dropped.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols);

  static SparseMatrix from_triplets(int rows, int cols,
                                    std::vector<Triplet> entries);

  // Adopts prebuilt CSR arrays. Columns must already be sorted and unique
  // within each row; zeros are kept as given.
  static SparseMatrix from_csr(int rows, int cols, std::vector<int> row_ptr,
                               std::vector<int> col_idx,
                               std::vector<cplx> values);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t nnz() const { return static_cast<std::int64_t>(values_.size()); }

  const std::vector<int>& row_ptr() const { return row_ptr_; }
  const std::vector<int>& col_idx() const { return col_idx_; }
  const std::vector<cplx>& values() const { return values_; }

  cplx coeff(int row, int col) const;  // 0 if absent
  int max_row_nnz() const;
  double max_abs() const;

  SparseMatrix adjoint() const;
  SparseMatrix conjugate() const;
  SparseMatrix transpose() const;
  Matrix to_dense() const;
  std::vector<Triplet> to_triplets() const;

  // Sum of this and other (same shape).
  SparseMatrix operator+(const SparseMatrix& other) const;
  SparseMatrix scaled(cplx factor) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> row_ptr_{0};
  std::vector<int> col_idx_;
  std::vector<cplx> values_;
};

// y = A x. The _serial variant is the reference implementation; spmv
// dispatches to the OpenMP kernel when compiled with it. Both produce
// identical results (one thread owns one row).
void spmv_serial(const SparseMatrix& a, const cplx* x, cplx* y);
void spmv_omp(const SparseMatrix& a, const cplx* x, cplx* y);
void spmv(const SparseMatrix& a, const cplx* x, cplx* y);
Vector spmv(const SparseMatrix& a, const Vector& x);

SparseMatrix sparse_identity(int n);
SparseMatrix sparse_kron(const SparseMatrix& a, const SparseMatrix& b);
// a (x) 1 + 1 (x) b
SparseMatrix sparse_kron_sum(const SparseMatrix& a, const SparseMatrix& b);

// max_ij |a_ij - conj(a_ji)| over the union sparsity pattern.
double hermitian_defect(const SparseMatrix& a);
double hermitian_defect(const Matrix& a);

}  // namespace shadowsim
