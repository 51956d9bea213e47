#pragma once

#include <string>
#include <vector>

#include "digspec/digraph.hpp"
#include "digspec/eigen.hpp"
#include "digspec/formulas.hpp"
#include "digspec/matrix.hpp"

namespace digspec {

// One closed-form prediction checked against the brute-force oracle.
struct GmultCheck {
  Complex z;
  long long predicted = 0;
  long long numeric = 0;
  bool gap_too_small = false;  // comparison skipped, eigenvalue gap < 1e-3
};

struct VerifyResult {
  std::string theorem;
  enum class Verdict { Pass, Fail, Skip } verdict = Verdict::Skip;
  std::string detail;
  double tolerance = 0.0;
  double worst_deviation = 0.0;
  double max_residual = 0.0;
  std::vector<GmultCheck> gmults;
  std::vector<std::string> notes;

  bool passed() const { return verdict == Verdict::Pass; }
};

struct VerifyInputs {
  std::vector<Digraph> digraphs;
  std::vector<Matrix> matrices;
  int power = 2;
  double tol = 1e-7;
  EigenOptions opts;
};

// Theorem names accepted by verify_theorem, in a stable order.
const std::vector<std::string>& verify_theorem_names();

// How many digraph / matrix inputs a theorem consumes.
struct TheoremArity {
  int digraphs = 0;
  int matrices = 0;
};
TheoremArity theorem_arity(const std::string& name);

// Runs the named check: computes the closed-form prediction and the
// brute-force oracle, compares spectra / geometric multiplicities /
// eigenvector residuals. Hypothesis violations come back as Skip with the
// failed condition named.
VerifyResult verify_theorem(const std::string& name, const VerifyInputs& in);

}  // namespace digspec
