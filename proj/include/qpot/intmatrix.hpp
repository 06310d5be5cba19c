#pragma once

#include <vector>

#include "qpot/numeric.hpp"

namespace qpot {

// Dense exact integer matrix, desk scale (dims <= ~32).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  explicit IntMatrix(std::vector<IntVec> rows);

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows) { return IntMatrix(rows); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  IntVec row(int i) const;
  IntVec col(int j) const;
  std::vector<IntVec> row_vectors() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVec apply(const IntVec& v) const;  // M * v
  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void negate_row(int i);
  void negate_col(int j);
  // row_i += k * row_j, col_i += k * col_j
  void add_row(int i, int j, const Int& k);
  void add_col(int i, int j, const Int& k);

  Int determinant() const;  // Bareiss, exact; square only
  int rank() const;
  bool is_unimodular() const;
  // Exact inverse of a unimodular matrix (entries stay integral).
  IntMatrix inverse_unimodular() const;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

Int dot(const IntVec& a, const IntVec& b);
Int vec_gcd(const IntVec& v);
bool is_zero(const IntVec& v);

}  // namespace qpot
