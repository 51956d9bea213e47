#pragma once

#include <complex>
#include <vector>

#include "digspec/matrix.hpp"
#include "digspec/rational.hpp"

namespace digspec {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

struct CMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Complex> v;

  CMatrix() = default;
  CMatrix(int r, int c) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c) {}
  static CMatrix from_real(const Matrix& m);

  Complex& operator()(int i, int j) { return v[static_cast<std::size_t>(i) * cols + j]; }
  const Complex& operator()(int i, int j) const { return v[static_cast<std::size_t>(i) * cols + j]; }
};

struct SpectrumItem {
  Complex value;
  long long multiplicity = 1;
};

// Eigenvalue multiset, clustered and sorted by (re desc, im asc).
struct Spectrum {
  std::vector<SpectrumItem> items;

  long long total_multiplicity() const;
  // Expanded list, each value repeated by its multiplicity.
  std::vector<Complex> expand() const;
};

struct EigenOptions {
  double cluster_tol_factor = 1e-8;  // scaled by (1 + inf-norm)
  double rank_tol_factor = 1e-10;    // scaled by (1 + inf-norm)
  double perp_tol = 1e-7;            // ones-orthogonality test, scaled by norm*sqrt(n)
  int max_order = 4096;
  int max_iters_per_n = 30;          // QR iteration budget is 30*n total
};

double cluster_tolerance(const Matrix& m, const EigenOptions& opts);
double rank_tolerance_abs(double inf_norm, const EigenOptions& opts);

// All n complex eigenvalues: balance, Householder reduction to Hessenberg
// form, then Francis shifted QR with deflation. Throws NoConvergence when
// the iteration budget runs out.
std::vector<Complex> eigenvalues_raw(const Matrix& m, const EigenOptions& opts = {});

Spectrum cluster_spectrum(std::vector<Complex> values, double tol);
Spectrum eigenvalues(const Matrix& m, const EigenOptions& opts = {});

// Orthonormal basis of the numerical kernel (singular directions below
// tol_abs) via column-pivoted Householder QR.
std::vector<CVector> null_space_basis(const CMatrix& m, double tol_abs);

int numerical_rank(const CMatrix& m, double tol_abs);

enum class GmultMode { Numeric, Exact };

// dim ker(m - z*I). Numeric mode uses the rank-revealing factorization at
// the options' rank tolerance; Exact mode needs an integer matrix and a
// rational z and lives in exact.hpp (this overload forwards when the
// imaginary part is zero and z is integral).
int geometric_multiplicity(const Matrix& m, Complex z, GmultMode mode, const EigenOptions& opts = {});

// True iff every kernel vector of (m - z*I) is numerically orthogonal to
// the all-ones vector. Throws NotAnEigenvalue when the kernel is empty.
bool eigenspace_perp_ones(const Matrix& m, Complex z, const EigenOptions& opts = {});

// Eigenvectors for eigenvalue z: kernel estimate refined by a few inverse
// iteration steps, reorthonormalized. Size = numerical gmult.
std::vector<CVector> eigenvectors_for(const Matrix& m, Complex z, const EigenOptions& opts = {});

struct MatchReport {
  bool ok = false;
  double worst_deviation = 0.0;
  Complex worst_predicted{};
  Complex worst_computed{};
};

// Minimum-cost bipartite assignment between the two multisets; passes iff
// every matched pair lies within tol*(1 + max magnitude of the pair).
MatchReport spectrum_match(const Spectrum& predicted, const Spectrum& computed, double tol);

// Rank of the column span of the given vectors (for independence checks).
int rank_of_vectors(const std::vector<CVector>& vectors, double tol_abs);

double residual_norm(const Matrix& m, Complex mu, const CVector& w);

}  // namespace digspec
