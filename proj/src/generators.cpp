#include "incompat/generators.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "incompat/error.hpp"
#include "incompat/graph_ops.hpp"

namespace incompat {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParameter(message);
}

Graph with_flags(int n, std::vector<Edge> edges, FamilyTag tag, std::vector<int> params,
                 std::optional<bool> vertex_transitive, std::optional<bool> edge_transitive,
                 std::vector<int> intersections = {}) {
  Graph g(n, std::move(edges));
  FamilyMeta meta = computed_meta(g, tag);
  meta.params = std::move(params);
  meta.intersections = std::move(intersections);
  meta.vertex_transitive = vertex_transitive;
  meta.edge_transitive = edge_transitive;
  return g.with_meta(meta);
}

Graph base_empty(int n) {
  require(n >= 0, "empty graph needs n >= 0");
  return with_flags(n, {}, FamilyTag::empty, {n}, true, true);
}

Graph base_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return with_flags(n, edges, FamilyTag::cycle, {n}, true, true);
}

Graph base_path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return with_flags(n, edges, FamilyTag::path, {n}, n <= 2, n <= 3);
}

Graph base_complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return with_flags(n, edges, FamilyTag::complete, {n}, true, true);
}

Graph base_complete_bipartite(int r, int s) {
  require(r >= 1 && s >= 1, "complete bipartite graph needs r,s >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < r; ++u)
    for (int v = 0; v < s; ++v) edges.push_back({u, r + v});
  return with_flags(r + s, edges, FamilyTag::complete_bipartite, {r, s}, r == s, true);
}

Graph base_hypercube(int d) {
  require(d >= 1 && d <= 20, "hypercube needs 1 <= d <= 20");
  int n = 1 << d;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int b = 0; b < d; ++b)
      if (int v = u ^ (1 << b); u < v) edges.push_back({u, v});
  return with_flags(n, edges, FamilyTag::hypercube, {d}, true, true);
}

Graph base_merged_johnson(int n, int k, std::vector<int> intersections, FamilyTag tag) {
  require(k >= 1 && n >= k, "johnson needs n >= k >= 1");
  require(n <= 63, "johnson needs n <= 63");
  std::sort(intersections.begin(), intersections.end());
  intersections.erase(std::unique(intersections.begin(), intersections.end()), intersections.end());
  for (int l : intersections)
    require(l >= 0 && l <= k - 1, "merged-johnson needs L to be a subset of {0..k-1}");
  auto subsets = colex_subsets(n, k);
  require(subsets.size() <= 200000, "johnson graph too large");
  std::vector<bool> allowed(k + 1, false);
  for (int l : intersections) allowed[l] = true;
  std::vector<Edge> edges;
  int count = static_cast<int>(subsets.size());
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b)
      if (allowed[std::popcount(subsets[a] & subsets[b])]) edges.push_back({a, b});
  std::optional<bool> edge_transitive;
  if (intersections.size() <= 1) edge_transitive = true;
  return with_flags(count, edges, tag, {n, k}, true, edge_transitive, intersections);
}

Graph base_rook(int r, int s) {
  require(r >= 1 && s >= 1, "rook graph needs r,s >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j)
      for (int i2 = 0; i2 < r; ++i2)
        for (int j2 = 0; j2 < s; ++j2) {
          int u = i * s + j, v = i2 * s + j2;
          if (u < v && (i == i2 || j == j2)) edges.push_back({u, v});
        }
  return with_flags(r * s, edges, FamilyTag::rook, {r, s}, true, r == s || r == 1 || s == 1);
}

Graph attach_root(Graph g, Graph root) {
  FamilyMeta meta = *g.meta();
  meta.line_root = std::make_shared<const Graph>(std::move(root));
  return g.with_meta(meta);
}

}  // namespace

std::vector<unsigned long long> colex_subsets(int n, int k) {
  if (k < 0 || n < k || n > 63) throw InvalidParameter("colex_subsets needs 0 <= k <= n <= 63");
  std::vector<unsigned long long> out;
  if (k == 0) return {0ULL};
  unsigned long long x = (1ULL << k) - 1, limit = 1ULL << n;
  while (x < limit) {
    out.push_back(x);
    unsigned long long c = x & (~x + 1), r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

Graph empty_graph(int n) { return base_empty(n); }

Graph cycle_graph(int n) { return attach_root(base_cycle(n), base_cycle(n)); }

Graph path_graph(int n) { return attach_root(base_path(n), base_path(n + 1)); }

Graph complete_graph(int n) {
  return attach_root(base_complete(n), base_complete_bipartite(1, n));
}

Graph complete_bipartite_graph(int r, int s) { return base_complete_bipartite(r, s); }

Graph hypercube_graph(int d) { return base_hypercube(d); }

Graph johnson_graph(int n, int k) {
  require(k >= 1, "johnson needs k >= 1");
  Graph g = base_merged_johnson(n, k, {k - 1}, FamilyTag::johnson);
  if (k == 2 && n >= 2) return attach_root(g, base_complete(n));
  return g;
}

Graph merged_johnson_graph(int n, int k, std::vector<int> intersections) {
  return base_merged_johnson(n, k, std::move(intersections), FamilyTag::merged_johnson);
}

Graph rook_graph(int r, int s) {
  return attach_root(base_rook(r, s), base_complete_bipartite(r, s));
}

Graph gen_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto need = [&](std::size_t count) {
    require(p.size() == count, family_name(spec.tag) + " needs " + std::to_string(count) +
                                   " integer parameter(s)");
  };
  switch (spec.tag) {
    case FamilyTag::empty: need(1); return empty_graph(p[0]);
    case FamilyTag::cycle: need(1); return cycle_graph(p[0]);
    case FamilyTag::path: need(1); return path_graph(p[0]);
    case FamilyTag::complete: need(1); return complete_graph(p[0]);
    case FamilyTag::complete_bipartite: need(2); return complete_bipartite_graph(p[0], p[1]);
    case FamilyTag::hypercube: need(1); return hypercube_graph(p[0]);
    case FamilyTag::johnson: need(2); return johnson_graph(p[0], p[1]);
    case FamilyTag::merged_johnson: need(2); return merged_johnson_graph(p[0], p[1], spec.intersections);
    case FamilyTag::rook: need(2); return rook_graph(p[0], p[1]);
    case FamilyTag::line_of: {
      require(spec.inner != nullptr, "line-of needs an inner family");
      Graph root = gen_family(*spec.inner);
      if (root.meta()) {
        FamilyMeta root_meta = *root.meta();
        root_meta.line_root.reset();
        root = root.with_meta(root_meta);
      }
      return line_graph(root).graph;
    }
    case FamilyTag::custom: break;
  }
  throw InvalidParameter("custom graphs cannot be generated");
}

}  // namespace incompat
