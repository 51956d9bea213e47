#include "digspec/exact.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace digspec {

BigMatrix to_big(const Matrix& m) {
  if (!m.is_integral())
    fail(Errc::ExactModeUnavailable, "matrix has non-integer entries");
  BigMatrix b(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) b(i, j) = static_cast<long long>(m(i, j));
  return b;
}

BigMatrix big_matmul(const BigMatrix& a, const BigMatrix& b) {
  if (a.cols != b.rows) fail(Errc::OrderMismatch, "big_matmul: inner dimensions differ");
  BigMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

namespace {

// One Bareiss step: divisions are exact because every intermediate entry is
// a minor of the (row/column permuted) input matrix.
struct BareissResult {
  int rank = 0;
  BigInt det = 0;  // meaningful only for square full-rank input
  int row_swaps = 0;
  int col_swaps = 0;
};

BareissResult bareiss(BigMatrix& m) {
  BareissResult res;
  const int rows = m.rows, cols = m.cols;
  BigInt prev = 1;
  int r = 0;
  while (r < rows && r < cols) {
    int pi = -1, pj = -1;
    for (int i = r; i < rows && pi < 0; ++i)
      for (int j = r; j < cols; ++j)
        if (m(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != r) {
      for (int j = 0; j < cols; ++j) std::swap(m(pi, j), m(r, j));
      ++res.row_swaps;
    }
    if (pj != r) {
      for (int i = 0; i < rows; ++i) std::swap(m(i, pj), m(i, r));
      ++res.col_swaps;
    }
    const BigInt pivot = m(r, r);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = r + 1; j < cols; ++j) {
        m(i, j) = (m(i, j) * pivot - m(i, r) * m(r, j)) / prev;
      }
      m(i, r) = 0;
    }
    prev = pivot;
    ++r;
  }
  res.rank = r;
  if (rows == cols && r == rows) {
    res.det = prev;
    if ((res.row_swaps + res.col_swaps) % 2 != 0) res.det = -res.det;
  }
  return res;
}

}  // namespace

int bareiss_rank(BigMatrix m) { return bareiss(m).rank; }

BigInt bareiss_determinant(BigMatrix m) {
  if (m.rows != m.cols) fail(Errc::NonSquare, "determinant of non-square matrix");
  BareissResult r = bareiss(m);
  if (r.rank < m.rows) return 0;
  return r.det;
}

int exact_rank(const Matrix& m) { return bareiss_rank(to_big(m)); }

BigInt exact_determinant(const Matrix& m) { return bareiss_determinant(to_big(m)); }

namespace {

// den*m - num*I; shares rank behavior with (m - z*I) since den > 0.
BigMatrix shifted_big(const Matrix& m, const Rational& z) {
  if (!m.square()) fail(Errc::NonSquare, "shift of non-square matrix");
  BigMatrix b = to_big(m);
  for (std::size_t i = 0; i < b.v.size(); ++i) b.v[i] *= z.den;
  for (int i = 0; i < b.rows; ++i) b(i, i) -= z.num;
  return b;
}

}  // namespace

int geometric_multiplicity_exact(const Matrix& m, const Rational& z) {
  BigMatrix s = shifted_big(m, z);
  return m.rows() - bareiss_rank(std::move(s));
}

std::vector<int> jordan_structure_exact(const Matrix& m, const Rational& z) {
  const int n = m.rows();
  BigMatrix s = shifted_big(m, z);

  // Weyr characteristic from ranks of powers: w_p = rank(s^{p-1}) - rank(s^p).
  std::vector<int> ranks{n};
  BigMatrix power = s;
  while (true) {
    int r = bareiss_rank(power);
    ranks.push_back(r);
    if (r == ranks[ranks.size() - 2]) break;  // stabilized
    if (static_cast<int>(ranks.size()) > n + 1) break;
    power = big_matmul(power, s);
  }

  std::vector<int> weyr;
  for (std::size_t p = 1; p < ranks.size(); ++p) {
    int w = ranks[p - 1] - ranks[p];
    if (w <= 0) break;
    weyr.push_back(w);
  }
  if (weyr.empty()) return {};

  std::vector<int> blocks;
  for (std::size_t p = 0; p < weyr.size(); ++p) {
    int next = (p + 1 < weyr.size()) ? weyr[p + 1] : 0;
    for (int c = 0; c < weyr[p] - next; ++c) blocks.push_back(static_cast<int>(p) + 1);
  }
  std::sort(blocks.begin(), blocks.end(), std::greater<int>());
  return blocks;
}

}  // namespace digspec
