#include "digspec/digraph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace digspec {

Digraph Digraph::from_arc_list(int n, const std::vector<Arc>& arcs) {
  if (n < 1) fail(Errc::InvalidArgument, "vertex count must be >= 1, got " + std::to_string(n));
  Digraph g;
  g.n_ = n;
  g.words_ = (n + 63) / 64;
  g.out_.assign(static_cast<std::size_t>(n) * g.words_, 0);
  for (const auto& [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Errc::IndexOutOfRange,
           "arc (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," + std::to_string(n) + ")");
    if (u == v) fail(Errc::LoopArc, "loop at vertex " + std::to_string(u));
    std::uint64_t& word = g.out_[static_cast<std::size_t>(u) * g.words_ + (v >> 6)];
    std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (word & bit)
      fail(Errc::DuplicateArc, "arc (" + std::to_string(u) + "," + std::to_string(v) + ") listed twice");
    word |= bit;
  }
  g.arc_count_ = static_cast<int>(arcs.size());
  return g;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : out_neighbors(u)) out.emplace_back(u, v);
  return out;
}

std::vector<int> Digraph::out_neighbors(int u) const {
  std::vector<int> nbrs;
  auto row = out_row(u);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = row[w];
    while (bits) {
      int b = std::countr_zero(bits);
      nbrs.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return nbrs;
}

std::vector<int> Digraph::out_degrees() const {
  std::vector<int> deg(n_, 0);
  for (int u = 0; u < n_; ++u) {
    auto row = out_row(u);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row[w]);
    deg[u] = d;
  }
  return deg;
}

std::vector<int> Digraph::in_degrees() const {
  std::vector<int> deg(n_, 0);
  for (int u = 0; u < n_; ++u)
    for (int v : out_neighbors(u)) ++deg[v];
  return deg;
}

namespace {

// Bitset BFS from a single source; writes one row of the distance matrix.
void bfs_row(const Digraph& g, int source, std::int32_t* dist) {
  const int n = g.order();
  const int words = g.words_per_row();
  std::fill(dist, dist + n, kDistInf);
  dist[source] = 0;

  std::vector<std::uint64_t> frontier(words, 0), visited(words, 0), next(words, 0);
  frontier[source >> 6] |= std::uint64_t{1} << (source & 63);
  visited = frontier;

  std::int32_t depth = 0;
  bool more = true;
  while (more) {
    std::fill(next.begin(), next.end(), 0);
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = frontier[w];
      while (bits) {
        int b = std::countr_zero(bits);
        bits &= bits - 1;
        auto row = g.out_row(w * 64 + b);
        for (int ww = 0; ww < words; ++ww) next[ww] |= row[ww];
      }
    }
    ++depth;
    more = false;
    for (int w = 0; w < words; ++w) {
      next[w] &= ~visited[w];
      visited[w] |= next[w];
      std::uint64_t bits = next[w];
      if (bits) more = true;
      while (bits) {
        int b = std::countr_zero(bits);
        bits &= bits - 1;
        dist[w * 64 + b] = depth;
      }
    }
    frontier.swap(next);
  }
}

DistanceData finish_distance_data(int n, std::vector<std::int32_t> dist) {
  DistanceData d;
  d.n = n;
  d.dist = std::move(dist);
  d.transmissions.assign(n, 0);
  d.all_finite = true;
  for (int u = 0; u < n; ++u) {
    std::int64_t sum = 0;
    bool finite = true;
    for (int v = 0; v < n; ++v) {
      std::int32_t e = d.dist[static_cast<std::size_t>(u) * n + v];
      if (e >= kDistInf) {
        finite = false;
      } else {
        sum += e;
      }
    }
    d.transmissions[u] = finite ? sum : kTransInf;
    if (!finite) d.all_finite = false;
  }
  return d;
}

}  // namespace

DistanceData distance_data(const Digraph& g) {
  const int n = g.order();
  std::vector<std::int32_t> dist(static_cast<std::size_t>(n) * n);
#pragma omp parallel for schedule(dynamic, 8)
  for (int s = 0; s < n; ++s) bfs_row(g, s, dist.data() + static_cast<std::size_t>(s) * n);
  return finish_distance_data(n, std::move(dist));
}

DistanceData distance_data_serial(const Digraph& g) {
  const int n = g.order();
  std::vector<std::int32_t> dist(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) bfs_row(g, s, dist.data() + static_cast<std::size_t>(s) * n);
  return finish_distance_data(n, std::move(dist));
}

bool is_strongly_connected(const Digraph& g) {
  const int n = g.order();
  if (n == 1) return true;
  // Forward reachability from vertex 0 and from 0 in the reverse digraph.
  std::vector<std::int32_t> row(n);
  bfs_row(g, 0, row.data());
  for (int v = 0; v < n; ++v)
    if (row[v] >= kDistInf) return false;
  Digraph r = reverse(g);
  bfs_row(r, 0, row.data());
  for (int v = 0; v < n; ++v)
    if (row[v] >= kDistInf) return false;
  return true;
}

DigraphMetrics metrics(const Digraph& g) {
  const int n = g.order();
  DigraphMetrics m;
  m.out_degrees = g.out_degrees();
  m.is_out_regular = std::all_of(m.out_degrees.begin(), m.out_degrees.end(),
                                 [&](int d) { return d == m.out_degrees[0]; });

  DistanceData d = distance_data(g);
  m.transmissions = d.transmissions;
  m.is_transmission_regular =
      d.all_finite && std::all_of(m.transmissions.begin(), m.transmissions.end(),
                                  [&](std::int64_t t) { return t == m.transmissions[0]; });

  m.diameter = 0;
  for (std::int32_t e : d.dist) m.diameter = std::max(m.diameter, e);
  if (m.diameter >= kDistInf) m.diameter = kDistInf;

  // xi(x) = min over out-neighbors y of 1 + d(y, x); girth = min over x.
  m.xi.assign(n, kDistInf);
  for (int x = 0; x < n; ++x) {
    for (int y : g.out_neighbors(x)) {
      m.xi[x] = std::min(m.xi[x], inf_add(1, d(y, x)));
    }
  }
  m.girth = kDistInf;
  for (std::int32_t v : m.xi) m.girth = std::min(m.girth, v);

  m.every_vertex_on_doubly_directed_arc = true;
  for (int x = 0; x < n && m.every_vertex_on_doubly_directed_arc; ++x) {
    bool covered = false;
    for (int y : g.out_neighbors(x)) {
      if (g.has_arc(y, x)) {
        covered = true;
        break;
      }
    }
    m.every_vertex_on_doubly_directed_arc = covered;
  }
  return m;
}

Digraph complement(const Digraph& g) {
  const int n = g.order();
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !g.has_arc(u, v)) arcs.emplace_back(u, v);
  return Digraph::from_arc_list(n, arcs);
}

Digraph reverse(const Digraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (const auto& [u, v] : g.arcs()) arcs.emplace_back(v, u);
  return Digraph::from_arc_list(g.order(), arcs);
}

}  // namespace digspec
