#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "digspec/digraph.hpp"
#include "digspec/eigen.hpp"
#include "digspec/rational.hpp"

namespace digspec {

// Parameter 5-tuple of a directed strongly regular graph: order n, degree k,
// s doubly directed arcs per vertex, a paths of length two across arcs and
// c across non-arcs.
struct DsrgParams {
  long long n = 0, k = 0, s = 0, a = 0, c = 0;
};

// Exact integer check of A^2 = s*I + a*A + c*(J - I - A) and A*J = J*A = k*J.
bool validate_dsrg(const Digraph& g, const DsrgParams& p);

// Measure (n,k,s,a,c) from the digraph and validate; nullopt when g is not
// a DSRG for any parameters.
std::optional<DsrgParams> infer_dsrg_params(const Digraph& g);

// Three-eigenvalue adjacency spectrum. Multiplicities are carried as exact
// rationals; they are integers exactly when the parameters are genuine.
struct DuvalSpectrum {
  double theta1 = 0.0;  // = k
  Complex theta2{}, theta3{};
  Rational mult2, mult3;  // mult1 == 1
  bool nonreal = false;

  bool mults_integral() const { return mult2.is_integer() && mult3.is_integer(); }
  Spectrum to_spectrum() const;  // requires mults_integral()
};

// Theta formulas from the parameters; throws DegenerateDiscriminant when
// theta2 == theta3.
DuvalSpectrum duval_spectrum(const DsrgParams& p);

struct SpectrumWithVectors {
  Spectrum spectrum;
  std::vector<std::pair<Complex, CVector>> eigvecs;
};

// Distance spectrum of a k-regular (in and out) digraph of diameter <= 2:
// the adjacency spectrum shifted by alpha -> -(alpha+2) with Perron value
// 2n-2-k; adjacency eigenvectors for alpha != k carry over unchanged.
SpectrumWithVectors diam2_distance_spectrum(const Digraph& g, const EigenOptions& opts = {});

enum class DsrgMatrix { D, DL, DQ, L, Q };

// Three-eigenvalue spectra of the derived matrices, multiplicities copied
// from the Duval spectrum.
Spectrum dsrg_derived_spectrum(const DsrgParams& p, DsrgMatrix kind);

// Distance spectrum of the ell-th Cartesian power of a digraph whose
// distance spectrum has shape {t, partial2^(m), 0^(n-1-m)}.
Spectrum cartesian_power_spectrum(double t, Complex partial2, long long m, long long n, int ell);

enum class RealityClass { AllRational, NonReal };

// Non-real spectra occur exactly for doubly regular tournaments
// Gamma(2k+1, k, 0, a, a+1).
RealityClass nonreal_classification(const DsrgParams& p);

// Fixture generators.
Digraph directed_cycle(int n);
Digraph figure1();
Digraph figure2_dsrg();
Digraph paley_tournament(long long p);  // prime p = 3 mod 4
Digraph cartesian_power(const Digraph& g, int ell);

}  // namespace digspec
