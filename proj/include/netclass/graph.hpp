#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace netclass {

/// Hop-count distance sentinel for nodes a BFS did not reach.
inline constexpr std::int32_t kUnreachable = -1;

enum class Direction { Forward, Reverse };

/// Per-source row of the all-pairs hop-distance matrix.
struct DistanceRow {
  int source = 0;
  std::vector<std::int32_t> dist;  // dist[source] == 0, kUnreachable if not reached
};

/// Immutable simple directed graph over dense node indices [0, n).
///
/// Construction collapses duplicate directed edges and drops self-loops so
/// the invariants the metric formulas rely on (binary adjacency, no loops)
/// hold by representation. Adjacency is CSR with neighbor lists sorted
/// ascending, which gives deterministic iteration everywhere and O(log d)
/// arc lookup. Original (file) node ids are retained for reporting.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Builds from an edge list on dense indices. Edges outside [0, n) are
  /// rejected with std::out_of_range. Duplicates and self-loops are removed
  /// silently; callers that need the counts collapse them beforehand.
  /// `lengths`, when present, is aligned with `edges` and the first record
  /// of a collapsed duplicate run wins.
  DirectedGraph(int n, std::span<const std::pair<int, int>> edges,
                std::span<const double> lengths = {});

  static DirectedGraph from_edges(
      int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<std::pair<int, int>> e(edges);
    return DirectedGraph(n, e);
  }

  int node_count() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept { return m_; }

  std::span<const int> out_neighbors(int u) const {
    return {out_targets_.data() + out_offsets_[u],
            out_targets_.data() + out_offsets_[u + 1]};
  }
  std::span<const int> in_neighbors(int u) const {
    return {in_sources_.data() + in_offsets_[u],
            in_sources_.data() + in_offsets_[u + 1]};
  }

  int out_degree(int u) const {
    return static_cast<int>(out_offsets_[u + 1] - out_offsets_[u]);
  }
  int in_degree(int u) const {
    return static_cast<int>(in_offsets_[u + 1] - in_offsets_[u]);
  }

  bool has_edge(int u, int v) const;

  bool has_lengths() const noexcept { return has_lengths_; }
  /// Length of the i-th out-edge of u (aligned with out_neighbors(u)).
  std::span<const double> out_lengths(int u) const {
    return {out_lengths_.data() + out_offsets_[u],
            out_lengths_.data() + out_offsets_[u + 1]};
  }

  /// Original id for a dense index; identity when none were supplied.
  std::int64_t original_id(int u) const {
    return node_ids_.empty() ? u : node_ids_[u];
  }
  void set_original_ids(std::vector<std::int64_t> ids) {
    node_ids_ = std::move(ids);
  }

  /// Subgraph induced by `nodes` (dense indices, need not be sorted).
  /// The result maps its own dense indices onto the originals' ids.
  DirectedGraph induced_subgraph(std::span<const int> nodes) const;

 private:
  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::int64_t> out_offsets_, in_offsets_;
  std::vector<int> out_targets_, in_sources_;
  std::vector<double> out_lengths_;
  bool has_lengths_ = false;
  std::vector<std::int64_t> node_ids_;
};

/// Hop-count shortest distances from `source` following out-edges
/// (Forward) or in-edges (Reverse). Unreached nodes carry kUnreachable.
DistanceRow bfs_distances(const DirectedGraph& g, int source, Direction dir);

/// Maximal strongly connected components (iterative Tarjan). Components are
/// ordered by their smallest member index; members sorted ascending.
std::vector<std::vector<int>> strongly_connected_components(
    const DirectedGraph& g);

/// Connected components of the undirected projection, same ordering
/// contract as strongly_connected_components.
std::vector<std::vector<int>> weakly_connected_components(
    const DirectedGraph& g);

/// Symmetric closure: {u,v} adjacent iff (u,v) or (v,u) is an edge,
/// represented as both directed arcs. Lengths are not carried over.
DirectedGraph undirected_projection(const DirectedGraph& g);

}  // namespace netclass
