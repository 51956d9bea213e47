#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "digspec/digraph.hpp"
#include "digspec/eigen.hpp"
#include "digspec/matrix.hpp"

namespace digspec {

// Spectral data of one construction factor: order, the row-sum (Perron)
// eigenvalue, the remaining eigenvalues, and optionally eigenvectors with
// the all-ones vector first.
struct FactorSpectralData {
  int n = 0;
  double rho = 0.0;
  std::vector<Complex> rest;                              // lambda_2 .. lambda_n
  std::vector<std::pair<Complex, CVector>> eigvecs;       // (value, vector); (rho, ones) first when present

  bool has_eigvecs() const { return !eigvecs.empty(); }
  std::vector<Complex> full_spectrum() const;
};

// Numeric factor data for an irreducible nonnegative constant-row-sum
// matrix; rho is taken as the row sum when rows are constant, otherwise the
// maximal-real-part eigenvalue.
FactorSpectralData factor_from_matrix(const Matrix& m, bool with_vectors, const EigenOptions& opts = {});

// Same for a digraph matrix; for A of an out-regular digraph and D/DL/DQ of
// a transmission regular one the Perron value is exact.
FactorSpectralData factor_from_digraph(const Digraph& g, MatrixKind kind, bool with_vectors,
                                       const EigenOptions& opts = {});

// ---------------------------------------------------------------------------
// Spectra of the three constructions and the four digraph products.

// spec(M boxI M') = all pairwise sums.
Spectrum spec_box_i(const Spectrum& a, const Spectrum& b, double cluster_tol = 1e-9);

// spec(M boxJ M') = {n rho' + n' rho} u {n' lambda_i} u {n lambda'_j} u {0^((n-1)(n'-1))}.
Spectrum spec_box_j(const FactorSpectralData& f, const FactorSpectralData& f2, double cluster_tol = 1e-9);

// spec(M lexp M') = {n' lambda_i + rho'} u {lambda'_j^(n), j >= 2}.
Spectrum spec_lexp_construction(const FactorSpectralData& f, const FactorSpectralData& f2,
                                double cluster_tol = 1e-9);

// Pairwise products / pairwise a*b + a + b.
Spectrum spec_direct(const Spectrum& a, const Spectrum& b, double cluster_tol = 1e-9);
Spectrum spec_strong(const Spectrum& a, const Spectrum& b, double cluster_tol = 1e-9);

// Cartesian-product digraph spectra. Kind A works for any digraphs
// (pairwise sums of adjacency spectra); D/DL/DQ need both factors
// transmission regular.
Spectrum spec_cartesian(const Digraph& g, const Digraph& h, MatrixKind kind, const EigenOptions& opts = {});

// ---------------------------------------------------------------------------
// Jordan structure of the boxJ construction.

struct JordanBlockSet {
  Complex eigenvalue;
  std::vector<int> sizes;  // descending
};
using JordanStructure = std::vector<JordanBlockSet>;

// Jordan structure of M boxJ M' from the factor structures. Each factor
// structure must carry its Perron value as a simple block.
JordanStructure jordan_box_j(const JordanStructure& jm, double rho, int n, const JordanStructure& jm2,
                             double rho2, int n2, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Eigenvector families.

struct EigvecList {
  std::vector<std::pair<Complex, CVector>> vectors;
  std::vector<std::string> warnings;  // skipped (i,j) pairs with vanishing denominators
};

// Four families for M boxJ M': ones (x) ones at the spectral radius, lifted
// factor eigenvectors with gamma corrections, and the J-kernel products.
EigvecList eigvecs_box_j(const FactorSpectralData& f, const FactorSpectralData& f2);

// Two families for M lexp M': v_i (x) ones, and v_i (x) v'_j with a gamma
// correction along v_i (x) ones.
EigvecList eigvecs_lexp(const FactorSpectralData& f, const FactorSpectralData& f2);

// ---------------------------------------------------------------------------
// The lexicographic gmult kernel and the digraph-level corollaries.

// Geometric multiplicity of z in M lexp M' by the five-case rule on
// membership of z in spec(M') \ {rho'} and (z - rho')/n' in spec(M).
int gmult_lexp(const Matrix& m, const Matrix& m2, Complex z, const EigenOptions& opts = {});

enum class LexpKind { A, L, Q, D, DL, DQ };
enum class LexpRegime { Auto, LongGirth, DoublyDirected };

const char* lexp_kind_name(LexpKind kind);

// Spectrum of the chosen matrix of g lexp h via the matching corollary.
// Hypotheses (out-/transmission-regularity, diam(h) <= girth(g) or every
// vertex of g on a doubly directed arc) are validated and violations throw
// HypothesisViolated. Regime selection only matters for D/DL/DQ.
Spectrum spec_lexp_digraph(const Digraph& g, const Digraph& h, LexpKind kind,
                           LexpRegime regime = LexpRegime::Auto, const EigenOptions& opts = {});

int gmult_lexp_digraph(const Digraph& g, const Digraph& h, LexpKind kind, Complex z,
                       LexpRegime regime = LexpRegime::Auto, const EigenOptions& opts = {});

// Regime the Auto selection would pick (after hypothesis checks).
LexpRegime lexp_selected_regime(const Digraph& g, const Digraph& h, LexpKind kind, LexpRegime regime);

// ---------------------------------------------------------------------------
// Complement shift: B = A + 2*A(complement) of an r-out-regular digraph.

// Spectral data of B from adjacency data: spectrum {2n-2-r} u {-(alpha_j+2)},
// eigenvectors v_j + beta_j * ones.
FactorSpectralData complement_shift(const FactorSpectralData& adjacency, int r);

// gmult transfer: gmult_B(-alpha-2) = gmult_A(alpha) for alpha != r, and
// gmult_B(-r-2) = gmult_A(r) - 1.
int complement_shift_gmult(const Matrix& a, int r, Complex z_of_b, const EigenOptions& opts = {});

}  // namespace digspec
