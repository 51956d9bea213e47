#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "digspec/error.hpp"

namespace digspec {

using Arc = std::pair<int, int>;

// Distance sentinel for unreachable pairs. Strictly larger than any finite
// distance, min-stable, and absorbing under inf_add.
inline constexpr std::int32_t kDistInf = std::numeric_limits<std::int32_t>::max() / 2;
inline constexpr std::int64_t kTransInf = std::numeric_limits<std::int64_t>::max() / 2;

inline std::int32_t inf_add(std::int32_t a, std::int32_t b) {
  if (a >= kDistInf || b >= kDistInf) return kDistInf;
  return a + b;
}

// Loop-free digraph on dense vertex labels 0..n-1. Arcs are kept as
// per-vertex out-neighbor bit rows so BFS sweeps cost O(n^2/w); products
// multiply orders, so this matters well before anything else does.
class Digraph {
 public:
  static Digraph from_arc_list(int n, const std::vector<Arc>& arcs);

  int order() const { return n_; }
  int arc_count() const { return arc_count_; }
  int words_per_row() const { return words_; }

  bool has_arc(int u, int v) const {
    return (out_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  std::span<const std::uint64_t> out_row(int u) const {
    return {out_.data() + static_cast<std::size_t>(u) * words_, static_cast<std::size_t>(words_)};
  }

  // Arcs in (u, v) lexicographic order.
  std::vector<Arc> arcs() const;
  std::vector<int> out_neighbors(int u) const;
  std::vector<int> out_degrees() const;
  std::vector<int> in_degrees() const;

 private:
  Digraph() = default;

  int n_ = 0;
  int words_ = 0;
  int arc_count_ = 0;
  std::vector<std::uint64_t> out_;
};

struct DistanceData {
  int n = 0;
  std::vector<std::int32_t> dist;          // n*n row-major, kDistInf when unreachable
  std::vector<std::int64_t> transmissions; // row sums; kTransInf when the row has an unreachable vertex
  bool all_finite = false;                 // true iff dist is finite everywhere off-diagonal

  std::int32_t operator()(int u, int v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
};

struct DigraphMetrics {
  std::vector<int> out_degrees;
  bool is_out_regular = false;
  std::vector<std::int64_t> transmissions;
  bool is_transmission_regular = false;
  std::int32_t diameter = kDistInf;
  std::int32_t girth = kDistInf;
  std::vector<std::int32_t> xi;  // shortest dicycle through each vertex, kDistInf if none
  bool every_vertex_on_doubly_directed_arc = false;
};

bool is_strongly_connected(const Digraph& g);

// BFS from every source. The OpenMP path and the serial reference compute
// identical results; the serial one is kept for testing and benchmarks.
DistanceData distance_data(const Digraph& g);
DistanceData distance_data_serial(const Digraph& g);

DigraphMetrics metrics(const Digraph& g);

Digraph complement(const Digraph& g);
Digraph reverse(const Digraph& g);

}  // namespace digspec
