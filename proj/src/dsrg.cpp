#include "digspec/dsrg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "digspec/formulas.hpp"
#include "digspec/matrix.hpp"
#include "digspec/products.hpp"

namespace digspec {

bool validate_dsrg(const Digraph& g, const DsrgParams& p) {
  const int n = g.order();
  if (p.n != n || p.k < 0 || p.k >= n || p.s < 0 || p.s > p.k) return false;

  auto out = g.out_degrees();
  auto in = g.in_degrees();
  for (int v = 0; v < n; ++v)
    if (out[v] != p.k || in[v] != p.k) return false;  // A*J = J*A = k*J

  // A^2 entries counted as two-step walks; all arithmetic on small ints.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      long long walks = 0;
      for (int w : g.out_neighbors(i))
        if (g.has_arc(w, j)) ++walks;
      long long expect;
      if (i == j)
        expect = p.s;
      else if (g.has_arc(i, j))
        expect = p.a;
      else
        expect = p.c;
      if (walks != expect) return false;
    }
  }
  return true;
}

std::optional<DsrgParams> infer_dsrg_params(const Digraph& g) {
  const int n = g.order();
  auto out = g.out_degrees();
  if (out.empty()) return std::nullopt;
  DsrgParams p;
  p.n = n;
  p.k = out[0];
  auto two_step = [&](int i, int j) {
    long long walks = 0;
    for (int w : g.out_neighbors(i))
      if (g.has_arc(w, j)) ++walks;
    return walks;
  };
  p.s = two_step(0, 0);
  p.a = -1;
  p.c = -1;
  for (int j = 1; j < n && (p.a < 0 || p.c < 0); ++j) {
    if (g.has_arc(0, j) && p.a < 0) p.a = two_step(0, j);
    if (!g.has_arc(0, j) && p.c < 0) p.c = two_step(0, j);
  }
  if (p.a < 0) p.a = 0;
  if (p.c < 0) p.c = 0;
  if (!validate_dsrg(g, p)) return std::nullopt;
  return p;
}

Spectrum DuvalSpectrum::to_spectrum() const {
  if (!mults_integral())
    fail(Errc::ShapeViolated, "Duval multiplicities are not integers for these parameters");
  Spectrum s;
  s.items.push_back({Complex(theta1, 0.0), 1});
  s.items.push_back({theta2, mult2.num});
  s.items.push_back({theta3, mult3.num});
  std::sort(s.items.begin(), s.items.end(), [](const SpectrumItem& a, const SpectrumItem& b) {
    if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return s;
}

namespace {

std::optional<long long> perfect_square_root(long long x) {
  if (x < 0) return std::nullopt;
  long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(x))));
  for (long long c = std::max(0LL, r - 2); c <= r + 2; ++c)
    if (c * c == x) return c;
  return std::nullopt;
}

}  // namespace

DuvalSpectrum duval_spectrum(const DsrgParams& p) {
  const long long disc = (p.c - p.a) * (p.c - p.a) + 4 * (p.s - p.c);
  if (disc == 0) fail(Errc::DegenerateDiscriminant, "theta2 == theta3 for these parameters");

  DuvalSpectrum d;
  d.theta1 = static_cast<double>(p.k);
  if (auto root = perfect_square_root(disc)) {
    // theta2,3 = (a - c +- root)/2 are rationals with denominator 2;
    // multiplicities evaluate exactly: mult2 = -(2k + (a-c-root)(n-1)) / (2*root).
    Rational t2(p.a - p.c + *root, 2), t3(p.a - p.c - *root, 2);
    d.theta2 = Complex(t2.value(), 0.0);
    d.theta3 = Complex(t3.value(), 0.0);
    d.mult2 = Rational(-(2 * p.k + (p.a - p.c - *root) * (p.n - 1)), 2 * *root);
    d.mult3 = Rational(2 * p.k + (p.a - p.c + *root) * (p.n - 1), 2 * *root);
    d.nonreal = false;
  } else if (disc > 0) {
    // Irrational conjugate pair over Q: equal multiplicities (n-1)/2.
    double root = std::sqrt(static_cast<double>(disc));
    d.theta2 = Complex((p.a - p.c + root) / 2.0, 0.0);
    d.theta3 = Complex((p.a - p.c - root) / 2.0, 0.0);
    d.mult2 = d.mult3 = Rational(p.n - 1, 2);
    d.nonreal = false;
  } else {
    double root = std::sqrt(static_cast<double>(-disc));
    d.theta2 = Complex((p.a - p.c) / 2.0, root / 2.0);
    d.theta3 = Complex((p.a - p.c) / 2.0, -root / 2.0);
    d.mult2 = d.mult3 = Rational(p.n - 1, 2);
    d.nonreal = true;
  }
  return d;
}

SpectrumWithVectors diam2_distance_spectrum(const Digraph& g, const EigenOptions& opts) {
  const int n = g.order();
  auto out = g.out_degrees();
  auto in = g.in_degrees();
  for (int v = 0; v < n; ++v)
    if (out[v] != out[0] || in[v] != out[0])
      fail(Errc::HypothesisViolated, "digraph is not k-regular (in- and out-degree)");
  const int k = out[0];
  DigraphMetrics met = metrics(g);
  if (met.diameter > 2) fail(Errc::HypothesisViolated, "diameter exceeds 2");

  FactorSpectralData adj = factor_from_digraph(g, MatrixKind::A, true, opts);
  SpectrumWithVectors res;
  std::vector<Complex> values;
  values.emplace_back(2.0 * n - 2.0 - k, 0.0);
  for (const Complex& alpha : adj.rest) values.push_back(-(alpha + 2.0));
  res.spectrum = cluster_spectrum(std::move(values), cluster_tolerance(digraph_matrix(g, MatrixKind::A), opts));

  const CVector ones(n, Complex(1.0, 0.0));
  res.eigvecs.emplace_back(Complex(2.0 * n - 2.0 - k, 0.0), ones);
  for (std::size_t j = 1; j < adj.eigvecs.size(); ++j) {
    const auto& [alpha, v] = adj.eigvecs[j];
    if (std::abs(alpha - Complex(static_cast<double>(k), 0.0)) <= 1e-9 * (1.0 + k)) continue;
    res.eigvecs.emplace_back(-(alpha + 2.0), v);  // carries over unchanged
  }
  return res;
}

Spectrum dsrg_derived_spectrum(const DsrgParams& p, DsrgMatrix kind) {
  DuvalSpectrum d = duval_spectrum(p);
  if (!d.mults_integral())
    fail(Errc::ShapeViolated, "Duval multiplicities are not integers for these parameters");
  const double n = static_cast<double>(p.n);
  const double k = static_cast<double>(p.k);
  auto shift = [&](Complex theta) -> Complex {
    switch (kind) {
      case DsrgMatrix::D: return -(theta + 2.0);
      case DsrgMatrix::DL: return Complex(2.0 * n - k, 0.0) + theta;
      case DsrgMatrix::DQ: return Complex(2.0 * n - k - 4.0, 0.0) - theta;
      case DsrgMatrix::L: return Complex(k, 0.0) - theta;
      case DsrgMatrix::Q: return Complex(k, 0.0) + theta;
    }
    return theta;
  };
  double perron;
  switch (kind) {
    case DsrgMatrix::D: perron = 2.0 * n - 2.0 - k; break;
    case DsrgMatrix::DL: perron = 0.0; break;
    case DsrgMatrix::DQ: perron = 4.0 * n - 4.0 - 2.0 * k; break;
    case DsrgMatrix::L: perron = 0.0; break;
    case DsrgMatrix::Q: perron = 2.0 * k; break;
    default: perron = 0.0;
  }
  std::vector<Complex> values;
  values.emplace_back(perron, 0.0);
  for (long long i = 0; i < d.mult2.num; ++i) values.push_back(shift(d.theta2));
  for (long long i = 0; i < d.mult3.num; ++i) values.push_back(shift(d.theta3));
  return cluster_spectrum(std::move(values), 1e-9 * (1.0 + 4.0 * n));
}

Spectrum cartesian_power_spectrum(double t, Complex partial2, long long m, long long n, int ell) {
  if (ell < 1) fail(Errc::InvalidArgument, "power must be >= 1");
  if (n < 1 || m < 0 || m > n - 1)
    fail(Errc::ShapeViolated, "spectrum shape {t, partial2^(m), 0^(n-1-m)} needs 0 <= m <= n-1");
  double scale = 1.0;
  for (int i = 1; i < ell; ++i) scale *= static_cast<double>(n);
  long long order = 1;
  for (int i = 0; i < ell; ++i) order *= n;

  Spectrum s;
  s.items.push_back({Complex(ell * t * scale, 0.0), 1});
  long long m2 = m * ell;
  if (m2 > 0) s.items.push_back({partial2 * scale, m2});
  long long zeros = order - 1 - m2;
  if (zeros < 0) fail(Errc::ShapeViolated, "multiplicities exceed the power order");
  if (zeros > 0) s.items.push_back({Complex(0.0, 0.0), zeros});
  std::sort(s.items.begin(), s.items.end(), [](const SpectrumItem& a, const SpectrumItem& b) {
    if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return s;
}

RealityClass nonreal_classification(const DsrgParams& p) {
  // Doubly regular tournament form Gamma(2k+1, k, 0, a, a+1). For valid
  // parameter sets this agrees with the discriminant sign.
  bool tournament_form = (p.n == 2 * p.k + 1) && (p.s == 0) && (p.c == p.a + 1);
  return tournament_form ? RealityClass::NonReal : RealityClass::AllRational;
}

// ---------------------------------------------------------------------------
// Generators.

Digraph directed_cycle(int n) {
  if (n < 1) fail(Errc::InvalidArgument, "cycle needs n >= 1");
  std::vector<Arc> arcs;
  if (n > 1)
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return Digraph::from_arc_list(n, arcs);
}

Digraph figure1() {
  std::vector<Arc> arcs = {{0, 1}, {1, 0}, {0, 3}, {3, 0}, {1, 2}, {2, 1}, {2, 0}, {3, 2}};
  return Digraph::from_arc_list(4, arcs);
}

Digraph figure2_dsrg() {
  // 1-based fixture: doubly directed {1,3},{1,6},{1,7},{2,4},{2,5},{2,6},
  // {3,5},{3,8},{4,7},{4,8},{5,7},{6,8}; single 1->2,2->3,3->4,4->1,
  // 5->6,6->7,7->8,8->5.
  static const int doubly[][2] = {{1, 3}, {1, 6}, {1, 7}, {2, 4}, {2, 5}, {2, 6},
                                  {3, 5}, {3, 8}, {4, 7}, {4, 8}, {5, 7}, {6, 8}};
  static const int single[][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7}, {7, 8}, {8, 5}};
  std::vector<Arc> arcs;
  for (const auto& d : doubly) {
    arcs.emplace_back(d[0] - 1, d[1] - 1);
    arcs.emplace_back(d[1] - 1, d[0] - 1);
  }
  for (const auto& s : single) arcs.emplace_back(s[0] - 1, s[1] - 1);
  return Digraph::from_arc_list(8, arcs);
}

Digraph paley_tournament(long long p) {
  if (p < 3) fail(Errc::BadPrime, "need a prime p >= 3");
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) fail(Errc::BadPrime, std::to_string(p) + " is not prime");
  if (p % 4 != 3) fail(Errc::BadPrime, std::to_string(p) + " is not 3 mod 4");

  std::vector<char> residue(p, 0);
  for (long long i = 1; i < p; ++i) residue[(i * i) % p] = 1;
  std::vector<Arc> arcs;
  for (long long i = 0; i < p; ++i)
    for (long long j = 0; j < p; ++j)
      if (i != j && residue[((j - i) % p + p) % p])
        arcs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Digraph::from_arc_list(static_cast<int>(p), arcs);
}

Digraph cartesian_power(const Digraph& g, int ell) {
  if (ell < 1) fail(Errc::InvalidArgument, "power must be >= 1");
  Digraph out = g;
  for (int i = 1; i < ell; ++i) out = product(out, g, ProductKind::Cartesian);
  return out;
}

}  // namespace digspec
