#include "incompat/graph_ops.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "incompat/error.hpp"

namespace incompat {

FamilyMeta computed_meta(const Graph& g, FamilyTag tag) {
  FamilyMeta meta;
  meta.tag = tag;
  meta.bipartite = is_bipartite(g).has_value();
  meta.regular_degree = g.regular_degree();
  return meta;
}

LineGraph line_graph(const Graph& root) {
  const auto& edges = root.edges();
  int m = root.size();
  std::vector<Edge> line_edges;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const Edge &e = edges[a], &f = edges[b];
      int shared = (e.u == f.u) + (e.u == f.v) + (e.v == f.u) + (e.v == f.v);
      if (shared == 1) line_edges.push_back({a, b});
    }
  Graph g(m, line_edges);
  FamilyMeta meta = computed_meta(g, FamilyTag::line_of);
  if (root.meta() && root.meta()->edge_transitive == true) meta.vertex_transitive = true;
  meta.line_root = std::make_shared<const Graph>(root);
  return {g.with_meta(meta), edges};
}

TwinReduction twin_reduce(const Graph& g) {
  int n = g.order();
  VertexSet alive(n);
  alive.set();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n && !changed; ++u) {
      if (!alive.test(u)) continue;
      VertexSet nu = g.neighbours(u) & alive;
      for (int v = u + 1; v < n; ++v) {
        if (!alive.test(v) || g.adjacent(u, v)) continue;
        if ((g.neighbours(v) & alive) == nu) {
          alive.reset(v);
          parent[v] = u;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<int> kept;
  std::vector<int> new_index(n, -1);
  for (int v = 0; v < n; ++v)
    if (alive.test(v)) {
      new_index[v] = static_cast<int>(kept.size());
      kept.push_back(v);
    }
  std::vector<int> mapping(n);
  for (int v = 0; v < n; ++v) {
    int r = v;
    while (!alive.test(r)) r = parent[r];
    mapping[v] = new_index[r];
  }
  if (static_cast<int>(kept.size()) == n) return {g, mapping};
  Graph reduced = induced_subgraph(g, kept);
  return {reduced, mapping};
}

int f2_rank(const Graph& g) {
  int n = g.order();
  std::vector<VertexSet> rows;
  rows.reserve(n);
  for (int v = 0; v < n; ++v) rows.push_back(g.neighbours(v));
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (rows[r].test(col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < n; ++r)
      if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.push_back({u, v});
  Graph out(g.order(), edges);
  return out.with_meta(computed_meta(out));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  int k = static_cast<int>(vertices.size());
  VertexSet seen(g.order());
  for (int v : vertices) {
    if (v < 0 || v >= g.order()) throw InvalidParameter("induced_subgraph: vertex out of range");
    if (seen.test(v)) throw InvalidParameter("induced_subgraph: repeated vertex");
    seen.set(v);
  }
  std::vector<Edge> edges;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.adjacent(vertices[a], vertices[b])) edges.push_back({a, b});
  Graph out(k, edges);
  return out.with_meta(computed_meta(out));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  int n = g.order(), m = h.order();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (const auto& e : h.edges()) edges.push_back({i * m + e.u, i * m + e.v});
  for (const auto& e : g.edges())
    for (int j = 0; j < m; ++j) edges.push_back({e.u * m + j, e.v * m + j});
  Graph out(n * m, edges);
  return out.with_meta(computed_meta(out));
}

std::optional<std::vector<int>> is_bipartite(const Graph& g) {
  int n = g.order();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      const auto& nb = g.neighbours(u);
      for (auto v = nb.find_first(); v != VertexSet::npos; v = nb.find_next(v)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          queue.push(static_cast<int>(v));
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto& nb = g.neighbours(members[i]);
      for (auto v = nb.find_first(); v != VertexSet::npos; v = nb.find_next(v))
        if (comp[v] < 0) {
          comp[v] = comp[s];
          members.push_back(static_cast<int>(v));
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace incompat
