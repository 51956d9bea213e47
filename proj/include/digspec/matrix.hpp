#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "digspec/digraph.hpp"
#include "digspec/error.hpp"

namespace digspec {

// Dense real matrix, row-major. Integer-valued matrices are the same type
// with is_integral() true; exact routines (exact.hpp) insist on that flag.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols, 0.0) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  static Matrix ones(int rows, int cols) {
    Matrix m(rows, cols);
    std::fill(m.v_.begin(), m.v_.end(), 1.0);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(int i, int j) { return v_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return v_[static_cast<std::size_t>(i) * cols_ + j]; }

  const std::vector<double>& data() const { return v_; }
  std::vector<double>& data() { return v_; }

  bool is_integral() const;
  double inf_norm() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> v_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

// Dense product; OpenMP over rows with a serial reference kept for testing.
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix matmul_serial(const Matrix& a, const Matrix& b);

// Kronecker product of square matrices, pair ordering (i,j) -> i*n' + j.
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix kronecker_serial(const Matrix& a, const Matrix& b);

enum class Construction { BoxI, BoxJ, Lexp };

// BoxI: M (x) I + I (x) M';  BoxJ: M (x) J + J (x) M';  Lexp: M (x) J + I (x) M'.
Matrix construction(Construction op, const Matrix& m, const Matrix& m2);

enum class MatrixKind { A, L, Q, D, DL, DQ };

const char* matrix_kind_name(MatrixKind kind);
MatrixKind matrix_kind_from_name(const std::string& name);

// The six digraph matrices. D/DL/DQ require strong connectivity.
Matrix digraph_matrix(const Digraph& g, MatrixKind kind);
Matrix matrix_from_distance(const DistanceData& d, MatrixKind kind);

}  // namespace digspec
