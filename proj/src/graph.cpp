#include "netclass/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace netclass {

DirectedGraph::DirectedGraph(int n, std::span<const std::pair<int, int>> edges,
                             std::span<const double> lengths) {
  if (n < 0) throw std::out_of_range("node count must be >= 0");
  n_ = n;
  has_lengths_ = !lengths.empty();
  if (has_lengths_ && lengths.size() != edges.size())
    throw std::out_of_range("lengths must align with edges");

  struct Arc {
    int u, v;
    double len;
  };
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::out_of_range("edge endpoint outside [0, n)");
    if (u == v) continue;  // no self-loops
    arcs.push_back({u, v, has_lengths_ ? lengths[i] : 0.0});
  }
  // first occurrence wins on duplicates
  std::stable_sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  arcs.erase(std::unique(arcs.begin(), arcs.end(),
                         [](const Arc& a, const Arc& b) {
                           return a.u == b.u && a.v == b.v;
                         }),
             arcs.end());
  m_ = static_cast<std::int64_t>(arcs.size());

  out_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  in_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Arc& a : arcs) {
    ++out_offsets_[a.u + 1];
    ++in_offsets_[a.v + 1];
  }
  std::partial_sum(out_offsets_.begin(), out_offsets_.end(),
                   out_offsets_.begin());
  std::partial_sum(in_offsets_.begin(), in_offsets_.end(), in_offsets_.begin());

  out_targets_.resize(arcs.size());
  if (has_lengths_) out_lengths_.resize(arcs.size());
  std::vector<std::int64_t> pos(out_offsets_.begin(), out_offsets_.end() - 1);
  for (const Arc& a : arcs) {
    out_targets_[pos[a.u]] = a.v;
    if (has_lengths_) out_lengths_[pos[a.u]] = a.len;
    ++pos[a.u];
  }
  in_sources_.resize(arcs.size());
  pos.assign(in_offsets_.begin(), in_offsets_.end() - 1);
  for (const Arc& a : arcs) in_sources_[pos[a.v]++] = a.u;
  // arcs are sorted by (u, v), so out lists are ascending; in lists get
  // sources in ascending order as well because arcs are scanned by u.
}

bool DirectedGraph::has_edge(int u, int v) const {
  auto nbrs = out_neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

DirectedGraph DirectedGraph::induced_subgraph(std::span<const int> nodes) const {
  std::vector<int> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<int> local(n_, -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = static_cast<int>(i);

  std::vector<std::pair<int, int>> edges;
  std::vector<double> lengths;
  for (int u : sorted) {
    auto nbrs = out_neighbors(u);
    auto lens = has_lengths_ ? out_lengths(u) : std::span<const double>{};
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      int v = nbrs[i];
      if (local[v] < 0) continue;
      edges.emplace_back(local[u], local[v]);
      if (has_lengths_) lengths.push_back(lens[i]);
    }
  }
  DirectedGraph sub(static_cast<int>(sorted.size()), edges,
                    has_lengths_ ? std::span<const double>(lengths)
                                 : std::span<const double>{});
  std::vector<std::int64_t> ids(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) ids[i] = original_id(sorted[i]);
  sub.set_original_ids(std::move(ids));
  return sub;
}

DistanceRow bfs_distances(const DirectedGraph& g, int source, Direction dir) {
  const int n = g.node_count();
  if (source < 0 || source >= n)
    throw std::out_of_range("bfs source outside graph");
  DistanceRow row;
  row.source = source;
  row.dist.assign(n, kUnreachable);
  row.dist[source] = 0;
  std::vector<int> queue;
  queue.reserve(n);
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    const std::int32_t du = row.dist[u];
    auto nbrs =
        dir == Direction::Forward ? g.out_neighbors(u) : g.in_neighbors(u);
    for (int v : nbrs) {
      if (row.dist[v] == kUnreachable) {
        row.dist[v] = du + 1;
        queue.push_back(v);
      }
    }
  }
  return row;
}

namespace {

void sort_components(std::vector<std::vector<int>>& comps) {
  for (auto& c : comps) std::sort(c.begin(), c.end());
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(
    const DirectedGraph& g) {
  const int n = g.node_count();
  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int next_index = 0;

  // explicit DFS frames; child is the offset into out_neighbors(v)
  struct Frame {
    int v;
    std::size_t child;
  };
  std::vector<Frame> frames;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({root, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const int v = f.v;
      if (f.child == 0) {
        index[v] = lowlink[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      auto nbrs = g.out_neighbors(v);
      bool descended = false;
      while (f.child < nbrs.size()) {
        const int w = nbrs[f.child];
        ++f.child;
        if (index[w] == -1) {
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
      }
      if (descended) continue;
      if (lowlink[v] == index[v]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        comps.push_back(std::move(comp));
      }
      frames.pop_back();
      if (!frames.empty()) {
        const int parent = frames.back().v;
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
      }
    }
  }
  sort_components(comps);
  return comps;
}

std::vector<std::vector<int>> weakly_connected_components(
    const DirectedGraph& g) {
  const int n = g.node_count();
  std::vector<int> comp_of(n, -1);
  std::vector<std::vector<int>> comps;
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (comp_of[s] != -1) continue;
    const int cid = static_cast<int>(comps.size());
    comps.emplace_back();
    comp_of[s] = cid;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      comps[cid].push_back(u);
      for (int v : g.out_neighbors(u))
        if (comp_of[v] == -1) {
          comp_of[v] = cid;
          queue.push_back(v);
        }
      for (int v : g.in_neighbors(u))
        if (comp_of[v] == -1) {
          comp_of[v] = cid;
          queue.push_back(v);
        }
    }
  }
  sort_components(comps);
  return comps;
}

DirectedGraph undirected_projection(const DirectedGraph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(2 * g.edge_count()));
  for (int u = 0; u < g.node_count(); ++u)
    for (int v : g.out_neighbors(u)) {
      edges.emplace_back(u, v);
      edges.emplace_back(v, u);
    }
  DirectedGraph proj(g.node_count(), edges);
  std::vector<std::int64_t> ids(g.node_count());
  for (int u = 0; u < g.node_count(); ++u) ids[u] = g.original_id(u);
  proj.set_original_ids(std::move(ids));
  return proj;
}

}  // namespace netclass
