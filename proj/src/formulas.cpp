#include "digspec/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace digspec {

std::vector<Complex> FactorSpectralData::full_spectrum() const {
  std::vector<Complex> all;
  all.reserve(rest.size() + 1);
  all.emplace_back(rho, 0.0);
  all.insert(all.end(), rest.begin(), rest.end());
  return all;
}

namespace {

bool spectrum_has(const Spectrum& s, Complex z, double tol) {
  for (const auto& it : s.items)
    if (std::abs(it.value - z) <= tol) return true;
  return false;
}

// z in spec \ {excluded}: matches some cluster other than the excluded one.
bool spectrum_has_excluding(const Spectrum& s, Complex z, double excluded, double tol) {
  for (const auto& it : s.items)
    if (std::abs(it.value - z) <= tol) return std::abs(it.value - Complex(excluded, 0.0)) > tol;
  return false;
}

std::optional<double> constant_row_sum(const Matrix& m, double tol) {
  double first = 0.0;
  for (int j = 0; j < m.cols(); ++j) first += m(0, j);
  for (int i = 1; i < m.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols(); ++j) s += m(i, j);
    if (std::abs(s - first) > tol) return std::nullopt;
  }
  return first;
}

// Drop one eigenvalue closest to rho from the raw list.
std::vector<Complex> drop_perron(std::vector<Complex> values, double rho) {
  std::size_t best = 0;
  double bestd = std::abs(values[0] - Complex(rho, 0.0));
  for (std::size_t i = 1; i < values.size(); ++i) {
    double d = std::abs(values[i] - Complex(rho, 0.0));
    if (d < bestd) {
      bestd = d;
      best = i;
    }
  }
  values.erase(values.begin() + best);
  return values;
}

void attach_eigvecs(FactorSpectralData& f, const Matrix& m, bool ones_is_perron, const EigenOptions& opts) {
  const int n = m.rows();
  double ctol = cluster_tolerance(m, opts);
  Spectrum s = cluster_spectrum(f.full_spectrum(), ctol);
  if (ones_is_perron) {
    f.eigvecs.emplace_back(Complex(f.rho, 0.0), CVector(n, Complex(1.0, 0.0)));
  } else {
    auto vecs = eigenvectors_for(m, Complex(f.rho, 0.0), opts);
    if (!vecs.empty()) f.eigvecs.emplace_back(Complex(f.rho, 0.0), vecs.front());
  }
  for (const auto& it : s.items) {
    if (std::abs(it.value - Complex(f.rho, 0.0)) <= ctol) continue;
    for (auto& v : eigenvectors_for(m, it.value, opts)) f.eigvecs.emplace_back(it.value, std::move(v));
  }
}

}  // namespace

FactorSpectralData factor_from_matrix(const Matrix& m, bool with_vectors, const EigenOptions& opts) {
  if (!m.square()) fail(Errc::NonSquare, "factor matrix must be square");
  FactorSpectralData f;
  f.n = m.rows();
  std::vector<Complex> raw = eigenvalues_raw(m, opts);
  auto rs = constant_row_sum(m, 1e-9 * (1.0 + m.inf_norm()));
  if (rs) {
    f.rho = *rs;
  } else {
    double best = -std::numeric_limits<double>::infinity();
    for (const Complex& v : raw) best = std::max(best, v.real());
    f.rho = best;
  }
  f.rest = drop_perron(std::move(raw), f.rho);
  if (with_vectors) attach_eigvecs(f, m, rs.has_value(), opts);
  return f;
}

FactorSpectralData factor_from_digraph(const Digraph& g, MatrixKind kind, bool with_vectors,
                                       const EigenOptions& opts) {
  Matrix m = digraph_matrix(g, kind);
  DigraphMetrics met = metrics(g);
  double exact_rho;
  bool regular;
  switch (kind) {
    case MatrixKind::A:
      regular = met.is_out_regular;
      exact_rho = met.out_degrees.empty() ? 0.0 : static_cast<double>(met.out_degrees[0]);
      break;
    case MatrixKind::L:
      regular = met.is_out_regular;
      exact_rho = 0.0;
      break;
    case MatrixKind::Q:
      regular = met.is_out_regular;
      exact_rho = met.out_degrees.empty() ? 0.0 : 2.0 * met.out_degrees[0];
      break;
    case MatrixKind::D:
      regular = met.is_transmission_regular;
      exact_rho = regular ? static_cast<double>(met.transmissions[0]) : 0.0;
      break;
    case MatrixKind::DL:
      regular = met.is_transmission_regular;
      exact_rho = 0.0;
      break;
    case MatrixKind::DQ:
      regular = met.is_transmission_regular;
      exact_rho = regular ? 2.0 * static_cast<double>(met.transmissions[0]) : 0.0;
      break;
    default:
      regular = false;
      exact_rho = 0.0;
  }
  if (!regular) return factor_from_matrix(m, with_vectors, opts);

  FactorSpectralData f;
  f.n = g.order();
  f.rho = exact_rho;
  f.rest = drop_perron(eigenvalues_raw(m, opts), f.rho);
  if (with_vectors) attach_eigvecs(f, m, true, opts);
  return f;
}

// ---------------------------------------------------------------------------

Spectrum spec_box_i(const Spectrum& a, const Spectrum& b, double cluster_tol) {
  std::vector<Complex> values;
  for (const Complex& x : a.expand())
    for (const Complex& y : b.expand()) values.push_back(x + y);
  return cluster_spectrum(std::move(values), cluster_tol);
}

Spectrum spec_direct(const Spectrum& a, const Spectrum& b, double cluster_tol) {
  std::vector<Complex> values;
  for (const Complex& x : a.expand())
    for (const Complex& y : b.expand()) values.push_back(x * y);
  return cluster_spectrum(std::move(values), cluster_tol);
}

Spectrum spec_strong(const Spectrum& a, const Spectrum& b, double cluster_tol) {
  std::vector<Complex> values;
  for (const Complex& x : a.expand())
    for (const Complex& y : b.expand()) values.push_back(x * y + x + y);
  return cluster_spectrum(std::move(values), cluster_tol);
}

Spectrum spec_box_j(const FactorSpectralData& f, const FactorSpectralData& f2, double cluster_tol) {
  if (static_cast<int>(f.rest.size()) + 1 != f.n || static_cast<int>(f2.rest.size()) + 1 != f2.n)
    fail(Errc::OrderMismatch, "factor spectral data does not total the factor order");
  const double n = f.n, n2 = f2.n;
  std::vector<Complex> values;
  values.emplace_back(n * f2.rho + n2 * f.rho, 0.0);
  for (const Complex& l : f.rest) values.push_back(n2 * l);
  for (const Complex& l : f2.rest) values.push_back(n * l);
  for (long long k = 0; k < static_cast<long long>(f.n - 1) * (f2.n - 1); ++k) values.emplace_back(0.0, 0.0);
  return cluster_spectrum(std::move(values), cluster_tol);
}

Spectrum spec_lexp_construction(const FactorSpectralData& f, const FactorSpectralData& f2,
                                double cluster_tol) {
  if (static_cast<int>(f.rest.size()) + 1 != f.n || static_cast<int>(f2.rest.size()) + 1 != f2.n)
    fail(Errc::OrderMismatch, "factor spectral data does not total the factor order");
  const double n2 = f2.n;
  std::vector<Complex> values;
  for (const Complex& l : f.full_spectrum()) values.push_back(n2 * l + f2.rho);
  for (const Complex& l : f2.rest)
    for (int i = 0; i < f.n; ++i) values.push_back(l);
  return cluster_spectrum(std::move(values), cluster_tol);
}

Spectrum spec_cartesian(const Digraph& g, const Digraph& h, MatrixKind kind, const EigenOptions& opts) {
  if (kind == MatrixKind::A) {
    Spectrum sa = eigenvalues(digraph_matrix(g, MatrixKind::A), opts);
    Spectrum sb = eigenvalues(digraph_matrix(h, MatrixKind::A), opts);
    return spec_box_i(sa, sb, 1e-9 * (1.0 + g.order() + h.order()));
  }
  if (kind != MatrixKind::D && kind != MatrixKind::DL && kind != MatrixKind::DQ)
    fail(Errc::InvalidArgument, "spec_cartesian supports kinds A, D, DL, DQ");
  DigraphMetrics mg = metrics(g);
  DigraphMetrics mh = metrics(h);
  if (!mg.is_transmission_regular)
    fail(Errc::NotTransmissionRegular, "first factor is not transmission regular");
  if (!mh.is_transmission_regular)
    fail(Errc::NotTransmissionRegular, "second factor is not transmission regular");
  FactorSpectralData f = factor_from_digraph(g, MatrixKind::D, false, opts);
  FactorSpectralData f2 = factor_from_digraph(h, MatrixKind::D, false, opts);
  double scale = 1e-9 * (1.0 + f.n * f2.rho + f2.n * f.rho);
  Spectrum d = spec_box_j(f, f2, scale);
  if (kind == MatrixKind::D) return d;
  double tbox = f.n * f2.rho + f2.n * f.rho;
  std::vector<Complex> shifted;
  for (const Complex& v : d.expand()) shifted.push_back(kind == MatrixKind::DL ? tbox - v : tbox + v);
  return cluster_spectrum(std::move(shifted), scale);
}

// ---------------------------------------------------------------------------

JordanStructure jordan_box_j(const JordanStructure& jm, double rho, int n, const JordanStructure& jm2,
                             double rho2, int n2, double tol) {
  auto check_factor = [&](const JordanStructure& j, double r, int order) {
    long long total = 0;
    bool perron_simple = false;
    for (const auto& e : j) {
      for (int s : e.sizes) total += s;
      if (std::abs(e.eigenvalue - Complex(r, 0.0)) <= tol)
        perron_simple = e.sizes.size() == 1 && e.sizes[0] == 1;
    }
    if (total != order) fail(Errc::OrderMismatch, "Jordan structure does not total the factor order");
    if (!perron_simple)
      fail(Errc::PerronNotSimple, "row-sum eigenvalue must be a simple 1x1 block");
  };
  check_factor(jm, rho, n);
  check_factor(jm2, rho2, n2);

  std::vector<JordanBlockSet> raw;
  raw.push_back({Complex(n * rho2 + n2 * rho, 0.0), {1}});
  for (const auto& e : jm) {
    if (std::abs(e.eigenvalue - Complex(rho, 0.0)) <= tol) continue;
    raw.push_back({static_cast<double>(n2) * e.eigenvalue, e.sizes});
  }
  for (const auto& e : jm2) {
    if (std::abs(e.eigenvalue - Complex(rho2, 0.0)) <= tol) continue;
    raw.push_back({static_cast<double>(n) * e.eigenvalue, e.sizes});
  }
  {
    JordanBlockSet zeros{Complex(0.0, 0.0), {}};
    zeros.sizes.assign(static_cast<std::size_t>(n - 1) * (n2 - 1), 1);
    if (!zeros.sizes.empty()) raw.push_back(std::move(zeros));
  }

  JordanStructure merged;
  for (auto& e : raw) {
    bool placed = false;
    for (auto& m : merged) {
      if (std::abs(m.eigenvalue - e.eigenvalue) <= tol) {
        m.sizes.insert(m.sizes.end(), e.sizes.begin(), e.sizes.end());
        placed = true;
        break;
      }
    }
    if (!placed) merged.push_back(std::move(e));
  }
  for (auto& m : merged) std::sort(m.sizes.begin(), m.sizes.end(), std::greater<int>());
  std::sort(merged.begin(), merged.end(), [](const JordanBlockSet& a, const JordanBlockSet& b) {
    if (a.eigenvalue.real() != b.eigenvalue.real()) return a.eigenvalue.real() > b.eigenvalue.real();
    return a.eigenvalue.imag() < b.eigenvalue.imag();
  });
  return merged;
}

// ---------------------------------------------------------------------------

namespace {

CVector kron_vec(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

Complex dot_ones(const CVector& v) {
  Complex s{};
  for (const Complex& x : v) s += x;
  return s;
}

void add_scaled(CVector& v, Complex c, const CVector& w) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
}

}  // namespace

EigvecList eigvecs_box_j(const FactorSpectralData& f, const FactorSpectralData& f2) {
  if (!f.has_eigvecs() || !f2.has_eigvecs())
    fail(Errc::InvalidArgument, "factor data lacks eigenvectors");
  const int n = f.n, n2 = f2.n;
  const double rho = f.rho, rho2 = f2.rho;
  const CVector ones_n(n, Complex(1.0, 0.0)), ones_n2(n2, Complex(1.0, 0.0));
  const CVector ones_nn = kron_vec(ones_n, ones_n2);
  const double scale = std::abs(rho) + std::abs(rho2) + 1.0;

  EigvecList out;
  out.vectors.emplace_back(Complex(n * rho2 + n2 * rho, 0.0), ones_nn);

  for (std::size_t i = 1; i < f.eigvecs.size(); ++i) {
    const auto& [lambda, v] = f.eigvecs[i];
    if (std::abs(lambda - Complex(rho, 0.0)) <= 1e-9 * scale) continue;
    Complex den = static_cast<double>(n2) * lambda - Complex(n2 * rho + n * rho2, 0.0);
    if (std::abs(den) <= 1e-12 * scale * n2)
      fail(Errc::DenominatorVanishes, "gamma denominator vanished in family (2)");
    Complex gamma = dot_ones(v) * rho2 / den;
    CVector w = kron_vec(v, ones_n2);
    add_scaled(w, gamma, ones_nn);
    out.vectors.emplace_back(static_cast<double>(n2) * lambda, std::move(w));
  }
  for (std::size_t j = 1; j < f2.eigvecs.size(); ++j) {
    const auto& [lambda2, v2] = f2.eigvecs[j];
    if (std::abs(lambda2 - Complex(rho2, 0.0)) <= 1e-9 * scale) continue;
    Complex den = static_cast<double>(n) * lambda2 - Complex(n * rho2 + n2 * rho, 0.0);
    if (std::abs(den) <= 1e-12 * scale * n)
      fail(Errc::DenominatorVanishes, "gamma denominator vanished in family (3)");
    Complex gamma = dot_ones(v2) * rho / den;
    CVector w = kron_vec(ones_n, v2);
    add_scaled(w, gamma, ones_nn);
    out.vectors.emplace_back(static_cast<double>(n) * lambda2, std::move(w));
  }
  // J-kernel products: (e_0 - e_i) (x) (e_0 - e_j) are null vectors.
  for (int i = 1; i < n; ++i) {
    CVector zi(n, Complex{});
    zi[0] = Complex(1.0, 0.0);
    zi[i] = Complex(-1.0, 0.0);
    for (int j = 1; j < n2; ++j) {
      CVector zj(n2, Complex{});
      zj[0] = Complex(1.0, 0.0);
      zj[j] = Complex(-1.0, 0.0);
      out.vectors.emplace_back(Complex(0.0, 0.0), kron_vec(zi, zj));
    }
  }
  return out;
}

EigvecList eigvecs_lexp(const FactorSpectralData& f, const FactorSpectralData& f2) {
  if (!f.has_eigvecs() || !f2.has_eigvecs())
    fail(Errc::InvalidArgument, "factor data lacks eigenvectors");
  const int n2 = f2.n;
  const double rho2 = f2.rho;
  const CVector ones_n2(n2, Complex(1.0, 0.0));
  const double scale = 1.0 + std::abs(f.rho) * n2 + std::abs(rho2);

  EigvecList out;
  for (const auto& [lambda, v] : f.eigvecs)
    out.vectors.emplace_back(static_cast<double>(n2) * lambda + rho2, kron_vec(v, ones_n2));

  for (std::size_t j = 1; j < f2.eigvecs.size(); ++j) {
    const auto& [lambda2, v2] = f2.eigvecs[j];
    if (std::abs(lambda2 - Complex(rho2, 0.0)) <= 1e-9 * scale) continue;
    for (const auto& [lambda, v] : f.eigvecs) {
      Complex den = Complex(rho2, 0.0) + static_cast<double>(n2) * lambda - lambda2;
      if (std::abs(den) <= 1e-12 * scale) {
        out.warnings.push_back("skipped pair: eigenvalue " + std::to_string(lambda2.real()) +
                               " coincides with n'*lambda + rho'");
        continue;
      }
      Complex gamma = -lambda * dot_ones(v2) / den;
      CVector w = kron_vec(v, v2);
      add_scaled(w, gamma, kron_vec(v, ones_n2));
      out.vectors.emplace_back(lambda2, std::move(w));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The shared gmult kernel: all the lexicographic case tables are affine
// reparameterizations of one rule.

namespace {

struct LexpCaseSetup {
  Matrix F, Fp;
  int n = 0, np = 0;
  double a_shift = 0.0;  // first-family additive constant (rho' analog)
  double s = 1.0;        // z_hat = s*z + b
  double b = 0.0;
  double excluded = 0.0; // value removed from spec(Fp)
};

int gmult_kernel(const LexpCaseSetup& c, Complex z, const EigenOptions& opts) {
  Spectrum specF = eigenvalues(c.F, opts);
  Spectrum specFp = eigenvalues(c.Fp, opts);
  double tolF = cluster_tolerance(c.F, opts);
  double tolFp = cluster_tolerance(c.Fp, opts);
  Complex zt = (z - Complex(c.a_shift, 0.0)) / static_cast<double>(c.np);
  Complex zh = c.s * z + Complex(c.b, 0.0);
  bool in_f = spectrum_has(specF, zt, tolF);
  bool in_fp = spectrum_has_excluding(specFp, zh, c.excluded, tolFp);
  if (!in_fp && in_f) return geometric_multiplicity(c.F, zt, GmultMode::Numeric, opts);
  if (in_fp && !in_f) return c.n * geometric_multiplicity(c.Fp, zh, GmultMode::Numeric, opts);
  if (in_fp && in_f) {
    int gp = geometric_multiplicity(c.Fp, zh, GmultMode::Numeric, opts);
    int g = geometric_multiplicity(c.F, zt, GmultMode::Numeric, opts);
    return eigenspace_perp_ones(c.Fp, zh, opts) ? c.n * gp + g : c.n * gp;
  }
  return 0;
}

Spectrum spectrum_kernel(const LexpCaseSetup& c, const EigenOptions& opts) {
  std::vector<Complex> first = eigenvalues_raw(c.F, opts);
  std::vector<Complex> second = eigenvalues_raw(c.Fp, opts);
  second = drop_perron(std::move(second), c.excluded);
  std::vector<Complex> values;
  for (const Complex& mu : first) values.push_back(static_cast<double>(c.np) * mu + c.a_shift);
  for (const Complex& lp : second)
    for (int i = 0; i < c.n; ++i) values.push_back(c.s * (lp - Complex(c.b, 0.0)));
  double tol = std::max(cluster_tolerance(c.F, opts) * c.np, cluster_tolerance(c.Fp, opts));
  Spectrum out = cluster_spectrum(std::move(values), tol);
  if (out.total_multiplicity() != static_cast<long long>(c.n) * c.np)
    fail(Errc::OrderMismatch, "predicted spectrum does not total n*n'");
  return out;
}

}  // namespace

int gmult_lexp(const Matrix& m, const Matrix& m2, Complex z, const EigenOptions& opts) {
  if (!m.square() || !m2.square()) fail(Errc::NonSquare, "gmult_lexp needs square factors");
  auto rs = constant_row_sum(m2, 1e-9 * (1.0 + m2.inf_norm()));
  if (!rs) fail(Errc::HypothesisViolated, "second factor must have constant row sums");
  LexpCaseSetup c;
  c.F = m;
  c.Fp = m2;
  c.n = m.rows();
  c.np = m2.rows();
  c.a_shift = *rs;
  c.excluded = *rs;
  return gmult_kernel(c, z, opts);
}

const char* lexp_kind_name(LexpKind kind) {
  switch (kind) {
    case LexpKind::A: return "A";
    case LexpKind::L: return "L";
    case LexpKind::Q: return "Q";
    case LexpKind::D: return "D";
    case LexpKind::DL: return "DL";
    case LexpKind::DQ: return "DQ";
  }
  return "?";
}

namespace {

void require_sc(const Digraph& g, const char* which) {
  if (!is_strongly_connected(g))
    fail(Errc::HypothesisViolated, std::string(which) + " factor is not strongly connected");
}

LexpCaseSetup lexp_case_setup(const Digraph& g, const Digraph& h, LexpKind kind, LexpRegime regime) {
  require_sc(g, "first");
  require_sc(h, "second");
  DigraphMetrics mg = metrics(g);
  DigraphMetrics mh = metrics(h);
  const int n = g.order();
  const int n2 = h.order();
  const double rp = mh.is_out_regular ? mh.out_degrees[0] : -1;
  const double r = mg.is_out_regular ? mg.out_degrees[0] : -1;
  const double t = mg.is_transmission_regular ? static_cast<double>(mg.transmissions[0]) : -1;
  const double tp = mh.is_transmission_regular ? static_cast<double>(mh.transmissions[0]) : -1;

  auto need_h_out_regular = [&]() {
    if (!mh.is_out_regular) fail(Errc::HypothesisViolated, "second factor is not out-regular");
  };
  auto need_g_out_regular = [&]() {
    if (!mg.is_out_regular) fail(Errc::HypothesisViolated, "first factor is not out-regular");
  };
  auto need_h_tr = [&]() {
    if (!mh.is_transmission_regular)
      fail(Errc::HypothesisViolated, "second factor is not transmission regular");
  };
  auto need_g_tr = [&]() {
    if (!mg.is_transmission_regular)
      fail(Errc::HypothesisViolated, "first factor is not transmission regular");
  };
  auto need_girth = [&]() {
    if (!(mh.diameter <= mg.girth))
      fail(Errc::HypothesisViolated, "diam(second) = " + std::to_string(mh.diameter) +
                                         " exceeds girth(first) = " + std::to_string(mg.girth));
  };
  auto need_doubly = [&]() {
    if (!mg.every_vertex_on_doubly_directed_arc)
      fail(Errc::HypothesisViolated, "first factor has a vertex on no doubly directed arc");
  };

  LexpCaseSetup c;
  c.n = n;
  c.np = n2;

  switch (kind) {
    case LexpKind::A:
      need_h_out_regular();
      c.F = digraph_matrix(g, MatrixKind::A);
      c.Fp = digraph_matrix(h, MatrixKind::A);
      c.a_shift = rp;
      c.excluded = rp;
      return c;
    case LexpKind::L:
      need_g_out_regular();
      need_h_out_regular();
      c.F = digraph_matrix(g, MatrixKind::L);
      c.Fp = digraph_matrix(h, MatrixKind::L);
      c.a_shift = 0.0;
      c.b = -r * n2;
      c.excluded = 0.0;
      return c;
    case LexpKind::Q:
      need_g_out_regular();
      need_h_out_regular();
      c.F = digraph_matrix(g, MatrixKind::Q);
      c.Fp = digraph_matrix(h, MatrixKind::Q);
      c.a_shift = 2.0 * rp;
      c.b = -r * n2;
      c.excluded = 2.0 * rp;
      return c;
    default:
      break;
  }

  // Distance kinds come in two regimes.
  LexpRegime pick = regime;
  if (pick == LexpRegime::Auto) {
    bool girth_ok = mh.is_transmission_regular && mh.diameter <= mg.girth &&
                    (kind == LexpKind::D || mg.is_transmission_regular);
    pick = girth_ok ? LexpRegime::LongGirth : LexpRegime::DoublyDirected;
  }
  if (pick == LexpRegime::LongGirth) {
    need_h_tr();
    need_girth();
    if (kind == LexpKind::D) {
      c.F = digraph_matrix(g, MatrixKind::D);
      c.Fp = digraph_matrix(h, MatrixKind::D);
      c.a_shift = tp;
      c.excluded = tp;
      return c;
    }
    need_g_tr();
    if (kind == LexpKind::DL) {
      c.F = digraph_matrix(g, MatrixKind::DL);
      c.Fp = digraph_matrix(h, MatrixKind::DL);
      c.a_shift = 0.0;
      c.b = -t * n2;
      c.excluded = 0.0;
      return c;
    }
    c.F = digraph_matrix(g, MatrixKind::DQ);
    c.Fp = digraph_matrix(h, MatrixKind::DQ);
    c.a_shift = 2.0 * tp;
    c.b = -t * n2;
    c.excluded = 2.0 * tp;
    return c;
  }

  // Doubly directed regime.
  need_doubly();
  need_h_out_regular();
  if (kind == LexpKind::D) {
    c.F = digraph_matrix(g, MatrixKind::D);
    c.Fp = digraph_matrix(h, MatrixKind::A);
    c.a_shift = 2.0 * n2 - 2.0 - rp;
    c.s = -1.0;
    c.b = -2.0;
    c.excluded = rp;
    return c;
  }
  need_g_tr();
  if (kind == LexpKind::DL) {
    c.F = digraph_matrix(g, MatrixKind::DL);
    c.Fp = digraph_matrix(h, MatrixKind::A);
    c.a_shift = 0.0;
    c.b = -t * n2 - 2.0 * n2 + rp;
    c.excluded = rp;
    return c;
  }
  c.F = digraph_matrix(g, MatrixKind::DQ);
  c.Fp = digraph_matrix(h, MatrixKind::A);
  c.a_shift = 4.0 * n2 - 4.0 - 2.0 * rp;
  c.s = -1.0;
  c.b = t * n2 + 2.0 * n2 - rp - 4.0;
  c.excluded = rp;
  return c;
}

}  // namespace

LexpRegime lexp_selected_regime(const Digraph& g, const Digraph& h, LexpKind kind, LexpRegime regime) {
  if (kind == LexpKind::A || kind == LexpKind::L || kind == LexpKind::Q) return LexpRegime::Auto;
  if (regime != LexpRegime::Auto) return regime;
  DigraphMetrics mg = metrics(g);
  DigraphMetrics mh = metrics(h);
  bool girth_ok = mh.is_transmission_regular && mh.diameter <= mg.girth &&
                  (kind == LexpKind::D || mg.is_transmission_regular);
  return girth_ok ? LexpRegime::LongGirth : LexpRegime::DoublyDirected;
}

Spectrum spec_lexp_digraph(const Digraph& g, const Digraph& h, LexpKind kind, LexpRegime regime,
                           const EigenOptions& opts) {
  return spectrum_kernel(lexp_case_setup(g, h, kind, regime), opts);
}

int gmult_lexp_digraph(const Digraph& g, const Digraph& h, LexpKind kind, Complex z, LexpRegime regime,
                       const EigenOptions& opts) {
  return gmult_kernel(lexp_case_setup(g, h, kind, regime), z, opts);
}

// ---------------------------------------------------------------------------

FactorSpectralData complement_shift(const FactorSpectralData& adjacency, int r) {
  const int n = adjacency.n;
  if (r >= n) fail(Errc::InvalidArgument, "out-degree must be below the order");
  FactorSpectralData b;
  b.n = n;
  b.rho = 2.0 * n - 2.0 - r;
  for (const Complex& alpha : adjacency.rest) b.rest.push_back(-(alpha + 2.0));
  if (adjacency.has_eigvecs()) {
    const CVector ones(n, Complex(1.0, 0.0));
    b.eigvecs.emplace_back(Complex(b.rho, 0.0), ones);
    for (std::size_t j = 1; j < adjacency.eigvecs.size(); ++j) {
      const auto& [alpha, v] = adjacency.eigvecs[j];
      if (std::abs(alpha - Complex(static_cast<double>(r), 0.0)) <= 1e-9 * (1.0 + r)) continue;
      Complex beta = 2.0 * dot_ones(v) / (Complex(static_cast<double>(r), 0.0) - alpha - 2.0 * n);
      CVector w = v;
      add_scaled(w, beta, ones);
      b.eigvecs.emplace_back(-(alpha + 2.0), std::move(w));
    }
  }
  return b;
}

int complement_shift_gmult(const Matrix& a, int r, Complex z_of_b, const EigenOptions& opts) {
  const int n = a.rows();
  double tol = cluster_tolerance(a, opts);
  // The spectral radius 2n-2-r of B is simple (B is irreducible); |alpha| <= r
  // keeps -z-2 = -2n+r out of spec(A), so the shift rule never covers it.
  if (std::abs(z_of_b - Complex(2.0 * n - 2.0 - r, 0.0)) <= tol) return 1;
  Complex alpha = -z_of_b - 2.0;
  if (std::abs(alpha - Complex(static_cast<double>(r), 0.0)) <= tol)
    return geometric_multiplicity(a, Complex(static_cast<double>(r), 0.0), GmultMode::Numeric, opts) - 1;
  return geometric_multiplicity(a, alpha, GmultMode::Numeric, opts);
}

}  // namespace digspec
