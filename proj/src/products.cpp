#include "digspec/products.hpp"

#include <algorithm>

namespace digspec {

const char* product_kind_name(ProductKind kind) {
  switch (kind) {
    case ProductKind::Cartesian: return "cartesian";
    case ProductKind::Lexicographic: return "lexicographic";
    case ProductKind::Direct: return "direct";
    case ProductKind::Strong: return "strong";
  }
  return "?";
}

ProductKind product_kind_from_name(const std::string& name) {
  if (name == "cartesian") return ProductKind::Cartesian;
  if (name == "lexicographic") return ProductKind::Lexicographic;
  if (name == "direct") return ProductKind::Direct;
  if (name == "strong") return ProductKind::Strong;
  fail(Errc::ParseError, "unknown product kind '" + name + "'");
}

Digraph product(const Digraph& g, const Digraph& h, ProductKind kind) {
  const int n = g.order();
  const int n2 = h.order();
  std::vector<Arc> arcs;
  auto idx = [n2](int x, int xp) { return x * n2 + xp; };
  for (int x = 0; x < n; ++x) {
    for (int xp = 0; xp < n2; ++xp) {
      for (int y = 0; y < n; ++y) {
        for (int yp = 0; yp < n2; ++yp) {
          if (x == y && xp == yp) continue;
          bool gxy = g.has_arc(x, y);
          bool hxy = h.has_arc(xp, yp);
          bool present = false;
          switch (kind) {
            case ProductKind::Cartesian:
              present = (xp == yp && gxy) || (x == y && hxy);
              break;
            case ProductKind::Lexicographic:
              present = gxy || (x == y && hxy);
              break;
            case ProductKind::Direct:
              present = gxy && hxy;
              break;
            case ProductKind::Strong:
              present = (xp == yp && gxy) || (x == y && hxy) || (gxy && hxy);
              break;
          }
          if (present) arcs.emplace_back(idx(x, xp), idx(y, yp));
        }
      }
    }
  }
  return Digraph::from_arc_list(n * n2, arcs);
}

Matrix lexicographic_distance_matrix(const Digraph& g, const Digraph& h) {
  if (!is_strongly_connected(g))
    fail(Errc::NotStronglyConnected, "lexicographic distance formula needs a strongly connected first factor");
  const int n = g.order();
  const int n2 = h.order();
  DistanceData dg = distance_data(g);
  DistanceData dh = distance_data(h);
  DigraphMetrics mg = metrics(g);

  Matrix out(n * n2, n * n2);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int xp = 0; xp < n2; ++xp) {
        for (int yp = 0; yp < n2; ++yp) {
          int row = x * n2 + xp;
          int col = y * n2 + yp;
          std::int32_t d;
          if (x != y) {
            d = dg(x, y);
          } else if (xp == yp) {
            d = 0;
          } else {
            d = std::min(mg.xi[x], dh(xp, yp));
          }
          if (d >= kDistInf)
            fail(Errc::NotStronglyConnected, "lexicographic product distance is infinite at a vertex pair");
          out(row, col) = static_cast<double>(d);
        }
      }
    }
  }
  return out;
}

Matrix strong_distance_matrix(const Digraph& g, const Digraph& h) {
  if (!is_strongly_connected(g) || !is_strongly_connected(h))
    fail(Errc::NotStronglyConnected, "strong product distance formula needs strongly connected factors");
  const int n = g.order();
  const int n2 = h.order();
  DistanceData dg = distance_data(g);
  DistanceData dh = distance_data(h);
  Matrix out(n * n2, n * n2);
  for (int x = 0; x < n; ++x)
    for (int xp = 0; xp < n2; ++xp)
      for (int y = 0; y < n; ++y)
        for (int yp = 0; yp < n2; ++yp)
          out(x * n2 + xp, y * n2 + yp) = static_cast<double>(std::max(dg(x, y), dh(xp, yp)));
  return out;
}

}  // namespace digspec
