#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "digspec/matrix.hpp"
#include "digspec/rational.hpp"

namespace digspec {

using BigInt = boost::multiprecision::cpp_int;

// Square/rectangular integer matrix over arbitrary-precision integers.
// Used only by the exact routines; everything numeric stays in Matrix.
struct BigMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> v;

  BigMatrix() = default;
  BigMatrix(int r, int c) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c) {}

  BigInt& operator()(int i, int j) { return v[static_cast<std::size_t>(i) * cols + j]; }
  const BigInt& operator()(int i, int j) const { return v[static_cast<std::size_t>(i) * cols + j]; }
};

// Requires m.is_integral(); throws ExactModeUnavailable otherwise.
BigMatrix to_big(const Matrix& m);

BigMatrix big_matmul(const BigMatrix& a, const BigMatrix& b);

// Rank over the rationals by fraction-free (Bareiss) elimination with full
// pivoting. Exact; no tolerances involved.
int bareiss_rank(BigMatrix m);

// Determinant by the same elimination; exact.
BigInt bareiss_determinant(BigMatrix m);

// Rank of m viewed as an integer matrix.
int exact_rank(const Matrix& m);
BigInt exact_determinant(const Matrix& m);

// n - rank(den*m - num*I), i.e. the geometric multiplicity of z = num/den.
int geometric_multiplicity_exact(const Matrix& m, const Rational& z);

// Jordan block sizes of m at the rational value z, recovered from the rank
// sequence of powers of (m - z*I). Sorted descending; empty if z is not an
// eigenvalue.
std::vector<int> jordan_structure_exact(const Matrix& m, const Rational& z);

}  // namespace digspec
