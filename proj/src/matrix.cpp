#include "digspec/matrix.hpp"

#include <algorithm>
#include <string>

namespace digspec {

bool Matrix::is_integral() const {
  for (double x : v_) {
    if (!std::isfinite(x)) return false;
    if (x != std::floor(x)) return false;
    if (std::abs(x) > 9.0e15) return false;  // past here doubles skip integers
  }
  return true;
}

double Matrix::inf_norm() const {
  double best = 0.0;
  for (int i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (int j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

static void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::OrderMismatch, std::string(what) + ": shapes differ");
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix add");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] += b.data()[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix subtract");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] -= b.data()[i];
  return r;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix r = a;
  for (double& x : r.data()) x *= s;
  return r;
}

static void matmul_row(const Matrix& a, const Matrix& b, Matrix& out, int i) {
  const int n = a.cols();
  const int p = b.cols();
  for (int k = 0; k < n; ++k) {
    double aik = a(i, k);
    if (aik == 0.0) continue;
    for (int j = 0; j < p; ++j) out(i, j) += aik * b(k, j);
  }
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail(Errc::OrderMismatch, "matmul: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < a.rows(); ++i) matmul_row(a, b, out, i);
  return out;
}

Matrix matmul_serial(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail(Errc::OrderMismatch, "matmul: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) matmul_row(a, b, out, i);
  return out;
}

static void kronecker_block_row(const Matrix& a, const Matrix& b, Matrix& out, int i) {
  const int n = a.rows();
  const int nb = b.rows();
  for (int k = 0; k < n; ++k) {
    double aik = a(i, k);
    if (aik == 0.0) continue;
    for (int j = 0; j < nb; ++j)
      for (int l = 0; l < nb; ++l) out(i * nb + j, k * nb + l) = aik * b(j, l);
  }
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (!a.square() || !b.square()) fail(Errc::NonSquare, "kronecker: factors must be square");
  Matrix out(a.rows() * b.rows(), a.rows() * b.rows());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < a.rows(); ++i) kronecker_block_row(a, b, out, i);
  return out;
}

Matrix kronecker_serial(const Matrix& a, const Matrix& b) {
  if (!a.square() || !b.square()) fail(Errc::NonSquare, "kronecker: factors must be square");
  Matrix out(a.rows() * b.rows(), a.rows() * b.rows());
  for (int i = 0; i < a.rows(); ++i) kronecker_block_row(a, b, out, i);
  return out;
}

Matrix construction(Construction op, const Matrix& m, const Matrix& m2) {
  if (!m.square() || !m2.square()) fail(Errc::NonSquare, "construction: factors must be square");
  const int n = m.rows();
  const int n2 = m2.rows();
  switch (op) {
    case Construction::BoxI:
      return kronecker(m, Matrix::identity(n2)) + kronecker(Matrix::identity(n), m2);
    case Construction::BoxJ:
      return kronecker(m, Matrix::ones(n2, n2)) + kronecker(Matrix::ones(n, n), m2);
    case Construction::Lexp:
      return kronecker(m, Matrix::ones(n2, n2)) + kronecker(Matrix::identity(n), m2);
  }
  fail(Errc::InvalidArgument, "construction: bad op");
}

const char* matrix_kind_name(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::A: return "A";
    case MatrixKind::L: return "L";
    case MatrixKind::Q: return "Q";
    case MatrixKind::D: return "D";
    case MatrixKind::DL: return "DL";
    case MatrixKind::DQ: return "DQ";
  }
  return "?";
}

MatrixKind matrix_kind_from_name(const std::string& name) {
  if (name == "A") return MatrixKind::A;
  if (name == "L") return MatrixKind::L;
  if (name == "Q") return MatrixKind::Q;
  if (name == "D") return MatrixKind::D;
  if (name == "DL") return MatrixKind::DL;
  if (name == "DQ") return MatrixKind::DQ;
  fail(Errc::ParseError, "unknown matrix kind '" + name + "'");
}

Matrix matrix_from_distance(const DistanceData& d, MatrixKind kind) {
  if (!d.all_finite)
    fail(Errc::NotStronglyConnected, "distance matrix undefined: digraph is not strongly connected");
  const int n = d.n;
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<double>(d(i, j));
  if (kind == MatrixKind::D) return m;
  Matrix t(n, n);
  for (int i = 0; i < n; ++i) t(i, i) = static_cast<double>(d.transmissions[i]);
  if (kind == MatrixKind::DL) return t - m;
  if (kind == MatrixKind::DQ) return t + m;
  fail(Errc::InvalidArgument, "matrix_from_distance: kind must be D, DL or DQ");
}

Matrix digraph_matrix(const Digraph& g, MatrixKind kind) {
  const int n = g.order();
  switch (kind) {
    case MatrixKind::A: {
      Matrix a(n, n);
      for (int u = 0; u < n; ++u)
        for (int v : g.out_neighbors(u)) a(u, v) = 1.0;
      return a;
    }
    case MatrixKind::L:
    case MatrixKind::Q: {
      Matrix a = digraph_matrix(g, MatrixKind::A);
      Matrix deg(n, n);
      auto degs = g.out_degrees();
      for (int u = 0; u < n; ++u) deg(u, u) = static_cast<double>(degs[u]);
      return kind == MatrixKind::L ? deg - a : deg + a;
    }
    case MatrixKind::D:
    case MatrixKind::DL:
    case MatrixKind::DQ:
      return matrix_from_distance(distance_data(g), kind);
  }
  fail(Errc::InvalidArgument, "digraph_matrix: bad kind");
}

}  // namespace digspec
