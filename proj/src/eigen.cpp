#include "digspec/eigen.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "digspec/exact.hpp"

namespace digspec {

CMatrix CMatrix::from_real(const Matrix& m) {
  CMatrix c(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) c(i, j) = Complex(m(i, j), 0.0);
  return c;
}

long long Spectrum::total_multiplicity() const {
  long long t = 0;
  for (const auto& it : items) t += it.multiplicity;
  return t;
}

std::vector<Complex> Spectrum::expand() const {
  std::vector<Complex> out;
  for (const auto& it : items)
    for (long long k = 0; k < it.multiplicity; ++k) out.push_back(it.value);
  return out;
}

double cluster_tolerance(const Matrix& m, const EigenOptions& opts) {
  return opts.cluster_tol_factor * (1.0 + m.inf_norm());
}

double rank_tolerance_abs(double inf_norm, const EigenOptions& opts) {
  return opts.rank_tol_factor * (1.0 + inf_norm);
}

// ---------------------------------------------------------------------------
// Balancing (iterative norm equalization by radix powers; a similarity, so
// eigenvalues are unchanged).

namespace {

void balance_in_place(std::vector<double>& aa, int n) {
  auto a = [&](int i, int j) -> double& { return aa[static_cast<std::size_t>(i) * n + j]; };
  const double radix = 2.0;
  const double sqrdx = radix * radix;
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        g = 1.0 / f;
        for (int j = 0; j < n; ++j) a(i, j) *= g;
        for (int j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

// Householder similarity reduction to upper Hessenberg form.
void hessenberg_in_place(std::vector<double>& aa, int n) {
  auto a = [&](int i, int j) -> double& { return aa[static_cast<std::size_t>(i) * n + j]; };
  std::vector<double> u(n);
  for (int k = 0; k + 2 < n; ++k) {
    double xnorm2 = 0.0;
    for (int i = k + 1; i < n; ++i) xnorm2 += a(i, k) * a(i, k);
    double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) continue;
    double alpha = a(k + 1, k) >= 0.0 ? -xnorm : xnorm;
    double unorm2 = 0.0;
    for (int i = k + 1; i < n; ++i) u[i] = a(i, k);
    u[k + 1] -= alpha;
    for (int i = k + 1; i < n; ++i) unorm2 += u[i] * u[i];
    if (unorm2 == 0.0) continue;
    const double beta = 2.0 / unorm2;

    for (int j = k; j < n; ++j) {  // rows k+1.. from the left
      double dot = 0.0;
      for (int i = k + 1; i < n; ++i) dot += u[i] * a(i, j);
      dot *= beta;
      for (int i = k + 1; i < n; ++i) a(i, j) -= dot * u[i];
    }
    for (int i = 0; i < n; ++i) {  // columns k+1.. from the right
      double dot = 0.0;
      for (int j = k + 1; j < n; ++j) dot += a(i, j) * u[j];
      dot *= beta;
      for (int j = k + 1; j < n; ++j) a(i, j) -= dot * u[j];
    }
    a(k + 1, k) = alpha;
    for (int i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

// Francis double-shift QR with deflation on an upper Hessenberg matrix.
// Exceptional shifts kick in every 10 stalled iterations; the total budget
// is max_total_its across all deflation windows.
std::vector<Complex> hqr_eigenvalues(std::vector<double>& aa, int n, int max_total_its) {
  auto a = [&](int i, int j) -> double& { return aa[static_cast<std::size_t>(i) * n + j]; };
  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<Complex> out;
  out.reserve(n);

  double anorm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));

  int nn = n - 1;
  double t = 0.0;
  int total_its = 0;
  while (nn >= 0) {
    int its = 0;
    for (;;) {
      int l;
      for (l = nn; l >= 1; --l) {
        double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) <= eps * s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      if (l < 0) l = 0;
      double x = a(nn, nn);
      if (l == nn) {
        out.emplace_back(x + t, 0.0);
        --nn;
        break;
      }
      double y = a(nn - 1, nn - 1);
      double w = a(nn, nn - 1) * a(nn - 1, nn);
      if (l == nn - 1) {
        double p = 0.5 * (y - x);
        double q = p * p + w;
        double z = std::sqrt(std::abs(q));
        x += t;
        if (q >= 0.0) {
          z = p + std::copysign(z, p);
          double r1 = x + z;
          double r2 = (z != 0.0) ? (x - w / z) : r1;
          out.emplace_back(r1, 0.0);
          out.emplace_back(r2, 0.0);
        } else {
          out.emplace_back(x + p, z);
          out.emplace_back(x + p, -z);
        }
        nn -= 2;
        break;
      }

      if (total_its >= max_total_its)
        fail(Errc::NoConvergence, "QR iteration budget of " + std::to_string(max_total_its) + " exhausted");
      if (its != 0 && its % 10 == 0) {
        t += x;
        for (int i = 0; i <= nn; ++i) a(i, i) -= x;
        double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
        y = x = 0.75 * s;
        w = -0.4375 * s * s;
      }
      ++its;
      ++total_its;

      double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
      int m;
      for (m = nn - 2; m >= l; --m) {
        z = a(m, m);
        r = x - z;
        double s = y - z;
        p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
        q = a(m + 1, m + 1) - z - r - s;
        r = a(m + 2, m + 1);
        double sc = std::abs(p) + std::abs(q) + std::abs(r);
        p /= sc;
        q /= sc;
        r /= sc;
        if (m == l) break;
        double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
        double v = std::abs(z) * (std::abs(p) + std::abs(a(m - 1, m - 1)) + std::abs(a(m + 1, m + 1)));
        if (u <= eps * v) break;
      }
      if (m < l) m = l;
      for (int i = m + 2; i <= nn; ++i) {
        a(i, i - 2) = 0.0;
        if (i != m + 2) a(i, i - 3) = 0.0;
      }
      for (int k = m; k <= nn - 1; ++k) {
        if (k != m) {
          p = a(k, k - 1);
          q = a(k + 1, k - 1);
          r = (k != nn - 1) ? a(k + 2, k - 1) : 0.0;
          x = std::abs(p) + std::abs(q) + std::abs(r);
          if (x != 0.0) {
            p /= x;
            q /= x;
            r /= x;
          }
        }
        double s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
        if (s == 0.0) continue;
        if (k == m) {
          if (l != m) a(k, k - 1) = -a(k, k - 1);
        } else {
          a(k, k - 1) = -s * x;
        }
        p += s;
        x = p / s;
        y = q / s;
        z = r / s;
        q /= p;
        r /= p;
        for (int j = k; j <= nn; ++j) {
          double pp = a(k, j) + q * a(k + 1, j);
          if (k != nn - 1) {
            pp += r * a(k + 2, j);
            a(k + 2, j) -= pp * z;
          }
          a(k + 1, j) -= pp * y;
          a(k, j) -= pp * x;
        }
        int mmin = (nn < k + 3) ? nn : (k + 3);
        for (int i = l; i <= mmin; ++i) {
          double pp = x * a(i, k) + y * a(i, k + 1);
          if (k != nn - 1) {
            pp += z * a(i, k + 2);
            a(i, k + 2) -= pp * r;
          }
          a(i, k + 1) -= pp * q;
          a(i, k) -= pp;
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Complex> eigenvalues_raw(const Matrix& m, const EigenOptions& opts) {
  if (!m.square()) fail(Errc::NonSquare, "eigenvalues of non-square matrix");
  const int n = m.rows();
  if (n > opts.max_order)
    fail(Errc::InvalidArgument,
         "order " + std::to_string(n) + " exceeds the configured cap " + std::to_string(opts.max_order));
  if (n == 0) return {};
  std::vector<double> a = m.data();
  balance_in_place(a, n);
  hessenberg_in_place(a, n);
  return hqr_eigenvalues(a, n, opts.max_iters_per_n * n);
}

Spectrum cluster_spectrum(std::vector<Complex> values, double tol) {
  std::sort(values.begin(), values.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  // Greedy centroid clustering; grows each cluster until stable so that
  // values split across the sort order (conjugate pairs with jittered real
  // parts) still coalesce.
  std::vector<char> used(values.size(), 0);
  Spectrum s;
  for (std::size_t seed = 0; seed < values.size(); ++seed) {
    if (used[seed]) continue;
    used[seed] = 1;
    Complex sum = values[seed];
    long long count = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      Complex mean = sum / static_cast<double>(count);
      for (std::size_t i = seed + 1; i < values.size(); ++i) {
        if (used[i]) continue;
        if (std::abs(values[i] - mean) <= tol) {
          used[i] = 1;
          sum += values[i];
          ++count;
          grew = true;
        }
      }
    }
    s.items.push_back({sum / static_cast<double>(count), count});
  }
  std::sort(s.items.begin(), s.items.end(), [](const SpectrumItem& a, const SpectrumItem& b) {
    if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return s;
}

Spectrum eigenvalues(const Matrix& m, const EigenOptions& opts) {
  return cluster_spectrum(eigenvalues_raw(m, opts), cluster_tolerance(m, opts));
}

// ---------------------------------------------------------------------------
// Rank-revealing complex QR with column pivoting.

namespace {

struct QRP {
  CMatrix r;
  std::vector<int> perm;  // perm[j] = original column index of factored column j
};

QRP qrp_factor(CMatrix m) {
  const int rows = m.rows, cols = m.cols;
  QRP f;
  f.perm.resize(cols);
  std::iota(f.perm.begin(), f.perm.end(), 0);
  std::vector<Complex> u(rows);
  const int steps = std::min(rows, cols);
  for (int k = 0; k < steps; ++k) {
    int best = k;
    double bestn = -1.0;
    for (int j = k; j < cols; ++j) {
      double s = 0.0;
      for (int i = k; i < rows; ++i) s += std::norm(m(i, j));
      if (s > bestn) {
        bestn = s;
        best = j;
      }
    }
    if (best != k) {
      for (int i = 0; i < rows; ++i) std::swap(m(i, best), m(i, k));
      std::swap(f.perm[best], f.perm[k]);
    }
    double xnorm = std::sqrt(std::max(bestn, 0.0));
    if (xnorm == 0.0) break;
    Complex x0 = m(k, k);
    Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0, 0.0);
    Complex alpha = -phase * xnorm;
    double un2 = 0.0;
    for (int i = k; i < rows; ++i) u[i] = m(i, k);
    u[k] -= alpha;
    for (int i = k; i < rows; ++i) un2 += std::norm(u[i]);
    if (un2 > 0.0) {
      const double beta = 2.0 / un2;
      for (int j = k; j < cols; ++j) {
        Complex dot{};
        for (int i = k; i < rows; ++i) dot += std::conj(u[i]) * m(i, j);
        dot *= beta;
        for (int i = k; i < rows; ++i) m(i, j) -= dot * u[i];
      }
    }
    m(k, k) = alpha;
    for (int i = k + 1; i < rows; ++i) m(i, k) = Complex{};
  }
  f.r = std::move(m);
  return f;
}

int qrp_rank(const QRP& f, double tol_abs) {
  int r = 0;
  const int steps = std::min(f.r.rows, f.r.cols);
  for (int k = 0; k < steps; ++k)
    if (std::abs(f.r(k, k)) > tol_abs) ++r;
  return r;
}

void orthonormalize(std::vector<CVector>& basis) {
  std::vector<CVector> kept;
  for (CVector& v : basis) {
    for (const CVector& q : kept) {
      Complex dot{};
      for (std::size_t i = 0; i < v.size(); ++i) dot += std::conj(q[i]) * v[i];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= dot * q[i];
    }
    double nrm = 0.0;
    for (const Complex& x : v) nrm += std::norm(x);
    nrm = std::sqrt(nrm);
    if (nrm > 1e-14) {
      for (Complex& x : v) x /= nrm;
      kept.push_back(std::move(v));
    }
  }
  basis = std::move(kept);
}

double cmatrix_inf_norm(const CMatrix& m) {
  double best = 0.0;
  for (int i = 0; i < m.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols; ++j) s += std::abs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

CMatrix shifted_complex(const Matrix& m, Complex z) {
  if (!m.square()) fail(Errc::NonSquare, "shift of non-square matrix");
  CMatrix s = CMatrix::from_real(m);
  for (int i = 0; i < s.rows; ++i) s(i, i) -= z;
  return s;
}

}  // namespace

int numerical_rank(const CMatrix& m, double tol_abs) { return qrp_rank(qrp_factor(m), tol_abs); }

std::vector<CVector> null_space_basis(const CMatrix& m, double tol_abs) {
  const int n = m.cols;
  QRP f = qrp_factor(m);
  int r = qrp_rank(f, tol_abs);
  std::vector<CVector> basis;
  for (int t = r; t < n; ++t) {
    // solve R11 y = -R12[:,t-r] by back substitution, pad with e_{t}
    CVector permuted(n, Complex{});
    permuted[t] = Complex(1.0, 0.0);
    for (int i = r - 1; i >= 0; --i) {
      Complex s = -f.r(i, t);
      for (int j = i + 1; j < r; ++j) s -= f.r(i, j) * permuted[j];
      permuted[i] = s / f.r(i, i);
    }
    CVector v(n, Complex{});
    for (int j = 0; j < n; ++j) v[f.perm[j]] = permuted[j];
    basis.push_back(std::move(v));
  }
  orthonormalize(basis);
  return basis;
}

int geometric_multiplicity(const Matrix& m, Complex z, GmultMode mode, const EigenOptions& opts) {
  if (!m.square()) fail(Errc::NonSquare, "geometric multiplicity of non-square matrix");
  if (mode == GmultMode::Exact) {
    if (z.imag() != 0.0 || z.real() != std::floor(z.real()))
      fail(Errc::ExactModeUnavailable, "exact mode needs a rational eigenvalue; use the Rational overload");
    return geometric_multiplicity_exact(m, Rational(static_cast<long long>(z.real())));
  }
  CMatrix s = shifted_complex(m, z);
  double tol = rank_tolerance_abs(cmatrix_inf_norm(s), opts);
  return m.rows() - numerical_rank(s, tol);
}

bool eigenspace_perp_ones(const Matrix& m, Complex z, const EigenOptions& opts) {
  CMatrix s = shifted_complex(m, z);
  double tol = rank_tolerance_abs(cmatrix_inf_norm(s), opts);
  std::vector<CVector> basis = null_space_basis(s, tol);
  if (basis.empty()) fail(Errc::NotAnEigenvalue, "kernel of (m - z*I) is empty");
  const double n = static_cast<double>(m.rows());
  for (const CVector& v : basis) {
    Complex dot{};
    double nrm = 0.0;
    for (const Complex& x : v) {
      dot += x;
      nrm += std::norm(x);
    }
    nrm = std::sqrt(nrm);
    if (std::abs(dot) > opts.perp_tol * nrm * std::sqrt(n)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Inverse iteration refinement on top of the kernel estimate.

namespace {

struct CLU {
  CMatrix lu;
  std::vector<int> piv;
};

CLU clu_factor(CMatrix a, double tiny) {
  const int n = a.rows;
  CLU f;
  f.piv.resize(n);
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::abs(a(k, k));
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        p = i;
      }
    f.piv[k] = p;
    if (p != k)
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
    if (std::abs(a(k, k)) < tiny) a(k, k) = Complex(tiny, 0.0);
    for (int i = k + 1; i < n; ++i) {
      a(i, k) /= a(k, k);
      Complex fmul = a(i, k);
      if (fmul == Complex{}) continue;
      for (int j = k + 1; j < n; ++j) a(i, j) -= fmul * a(k, j);
    }
  }
  f.lu = std::move(a);
  return f;
}

CVector clu_solve(const CLU& f, CVector b) {
  const int n = f.lu.rows;
  for (int k = 0; k < n; ++k) {
    if (f.piv[k] != k) std::swap(b[k], b[f.piv[k]]);
    for (int i = k + 1; i < n; ++i) b[i] -= f.lu(i, k) * b[k];
  }
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) b[i] -= f.lu(i, j) * b[j];
    b[i] /= f.lu(i, i);
  }
  return b;
}

}  // namespace

std::vector<CVector> eigenvectors_for(const Matrix& m, Complex z, const EigenOptions& opts) {
  CMatrix s = shifted_complex(m, z);
  double nrm = cmatrix_inf_norm(s);
  double tol = rank_tolerance_abs(nrm, opts);
  std::vector<CVector> basis = null_space_basis(s, tol);
  if (basis.empty()) return basis;
  CLU lu = clu_factor(s, std::numeric_limits<double>::epsilon() * (1.0 + nrm));
  for (int step = 0; step < 3; ++step) {
    for (CVector& v : basis) {
      CVector x = clu_solve(lu, v);
      double xn = 0.0;
      for (const Complex& e : x) xn += std::norm(e);
      xn = std::sqrt(xn);
      if (xn > 0.0)
        for (Complex& e : x) e /= xn;
      v = std::move(x);
    }
    orthonormalize(basis);
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Multiset comparison by minimum-cost assignment (Hungarian algorithm on
// the dense |p - c| cost matrix).

namespace {

std::vector<int> hungarian_assign(const std::vector<double>& cost, int n) {
  const double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = -1;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost[static_cast<std::size_t>(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j] >= 1) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

}  // namespace

MatchReport spectrum_match(const Spectrum& predicted, const Spectrum& computed, double tol) {
  std::vector<Complex> p = predicted.expand();
  std::vector<Complex> c = computed.expand();
  if (p.size() != c.size())
    fail(Errc::CardinalityMismatch, "predicted has " + std::to_string(p.size()) + " eigenvalues, computed has " +
                                        std::to_string(c.size()));
  const int n = static_cast<int>(p.size());
  MatchReport rep;
  if (n == 0) {
    rep.ok = true;
    return rep;
  }
  std::vector<double> cost(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cost[static_cast<std::size_t>(i) * n + j] = std::abs(p[i] - c[j]);
  std::vector<int> match = hungarian_assign(cost, n);
  rep.ok = true;
  for (int i = 0; i < n; ++i) {
    int j = match[i];
    double dev = std::abs(p[i] - c[j]);
    if (dev > rep.worst_deviation) {
      rep.worst_deviation = dev;
      rep.worst_predicted = p[i];
      rep.worst_computed = c[j];
    }
    double scale = 1.0 + std::max(std::abs(p[i]), std::abs(c[j]));
    if (dev > tol * scale) rep.ok = false;
  }
  return rep;
}

int rank_of_vectors(const std::vector<CVector>& vectors, double tol_abs) {
  if (vectors.empty()) return 0;
  const int n = static_cast<int>(vectors[0].size());
  const int k = static_cast<int>(vectors.size());
  CMatrix m(n, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) m(i, j) = vectors[j][i];
  return numerical_rank(m, tol_abs);
}

double residual_norm(const Matrix& m, Complex mu, const CVector& w) {
  const int n = m.rows();
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    Complex acc{};
    for (int j = 0; j < n; ++j) acc += m(i, j) * w[j];
    acc -= mu * w[i];
    s += std::norm(acc);
  }
  return std::sqrt(s);
}

}  // namespace digspec
