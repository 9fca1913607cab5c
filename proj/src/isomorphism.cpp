#include "incompat/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "incompat/error.hpp"
#include "incompat/graph_ops.hpp"

namespace incompat {

namespace {

// Joint 1-WL refinement so that colours are comparable across both graphs.
std::pair<std::vector<int>, std::vector<int>> refine(const Graph& a, const Graph& b,
                                                     const std::vector<std::pair<int, int>>& fixed) {
  int n = a.order();
  std::vector<int> ca(n), cb(n);
  for (int v = 0; v < n; ++v) {
    ca[v] = a.degree(v);
    cb[v] = b.degree(v);
  }
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    ca[fixed[i].first] = n + 1 + static_cast<int>(i);
    cb[fixed[i].second] = n + 1 + static_cast<int>(i);
  }
  std::size_t classes = 0;
  for (int round = 0; round <= n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> dictionary;
    auto signature = [&](const Graph& g, const std::vector<int>& c, int v) {
      std::vector<int> around;
      const auto& nb = g.neighbours(v);
      for (auto w = nb.find_first(); w != VertexSet::npos; w = nb.find_next(w)) around.push_back(c[w]);
      std::sort(around.begin(), around.end());
      return std::make_pair(c[v], around);
    };
    std::vector<std::pair<int, std::vector<int>>> sa(n), sb(n);
    for (int v = 0; v < n; ++v) {
      sa[v] = signature(a, ca, v);
      sb[v] = signature(b, cb, v);
      dictionary.emplace(sa[v], 0);
      dictionary.emplace(sb[v], 0);
    }
    int next = 0;
    for (auto& entry : dictionary) entry.second = next++;
    for (int v = 0; v < n; ++v) {
      ca[v] = dictionary[sa[v]];
      cb[v] = dictionary[sb[v]];
    }
    if (dictionary.size() == classes) break;
    classes = dictionary.size();
  }
  return {ca, cb};
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, const std::vector<int>& ca, const std::vector<int>& cb,
          const std::vector<std::pair<int, int>>& fixed)
      : a_(a), b_(b), ca_(ca), cb_(cb), n_(a.order()), image_(n_, -1), used_(n_, false) {
    std::vector<bool> placed(n_, false);
    for (const auto& [u, v] : fixed) {
      order_.push_back(u);
      placed[u] = true;
    }
    std::vector<int> links(n_, 0);
    for (int u : order_) {
      const auto& nb = a.neighbours(u);
      for (auto w = nb.find_first(); w != VertexSet::npos; w = nb.find_next(w)) ++links[w];
    }
    while (static_cast<int>(order_.size()) < n_) {
      int best = -1;
      for (int v = 0; v < n_; ++v)
        if (!placed[v] && (best < 0 || links[v] > links[best])) best = v;
      placed[best] = true;
      order_.push_back(best);
      const auto& nb = a.neighbours(best);
      for (auto w = nb.find_first(); w != VertexSet::npos; w = nb.find_next(w)) ++links[w];
    }
    for (const auto& [u, v] : fixed) forced_.emplace(u, v);
  }

  std::optional<std::vector<int>> run() {
    if (search(0)) return image_;
    return std::nullopt;
  }

 private:
  bool consistent(int x, int y, int depth) const {
    if (ca_[x] != cb_[y]) return false;
    for (int j = 0; j < depth; ++j) {
      int w = order_[j];
      if (a_.adjacent(x, w) != b_.adjacent(y, image_[w])) return false;
    }
    return true;
  }

  bool search(int depth) {
    if (depth == n_) return true;
    int x = order_[depth];
    auto forced = forced_.find(x);
    for (int y = 0; y < n_; ++y) {
      if (forced != forced_.end() && y != forced->second) continue;
      if (used_[y] || !consistent(x, y, depth)) continue;
      image_[x] = y;
      used_[y] = true;
      if (search(depth + 1)) return true;
      used_[y] = false;
      image_[x] = -1;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  const std::vector<int>& ca_;
  const std::vector<int>& cb_;
  int n_;
  std::vector<int> order_;
  std::map<int, int> forced_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

std::vector<int> orbit_ids(std::vector<int>& parent) {
  std::vector<int> ids(parent.size());
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < parent.size(); ++i) {
    int r = find_root(parent, static_cast<int>(i));
    ids[i] = relabel.emplace(r, static_cast<int>(relabel.size())).first->second;
  }
  return ids;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b,
                                                 const std::vector<std::pair<int, int>>& prescribed,
                                                 const Limits& limits) {
  if (a.order() > limits.isomorphism_max_vertices || b.order() > limits.isomorphism_max_vertices)
    throw CapExceeded("isomorphism search is limited to " +
                      std::to_string(limits.isomorphism_max_vertices) + " vertices");
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  for (const auto& [u, v] : prescribed)
    if (u < 0 || v < 0 || u >= a.order() || v >= b.order())
      throw InvalidParameter("prescribed vertex out of range");
  auto [ca, cb] = refine(a, b, prescribed);
  std::vector<int> ha = ca, hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return std::nullopt;
  Matcher matcher(a, b, ca, cb, prescribed);
  return matcher.run();
}

bool are_isomorphic(const Graph& a, const Graph& b, const Limits& limits) {
  return find_isomorphism(a, b, {}, limits).has_value();
}

TransitivityReport check_transitivity(const Graph& g, const Limits& limits) {
  int n = g.order(), m = g.size();
  if (n > limits.transitivity_max_vertices)
    throw CapExceeded("transitivity check is limited to " +
                      std::to_string(limits.transitivity_max_vertices) + " vertices");
  std::vector<int> vparent(n), eparent(m);
  std::iota(vparent.begin(), vparent.end(), 0);
  std::iota(eparent.begin(), eparent.end(), 0);
  const auto& edges = g.edges();

  auto absorb = [&](const std::vector<int>& f) {
    for (int v = 0; v < n; ++v) vparent[find_root(vparent, v)] = find_root(vparent, f[v]);
    for (int e = 0; e < m; ++e) {
      int img = g.edge_index(f[edges[e].u], f[edges[e].v]);
      eparent[find_root(eparent, e)] = find_root(eparent, img);
    }
  };

  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (find_root(vparent, u) == find_root(vparent, v)) continue;
      if (auto f = find_isomorphism(g, g, {{u, v}}, limits)) absorb(*f);
    }
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      if (find_root(eparent, e) == find_root(eparent, f)) continue;
      auto attempt = find_isomorphism(g, g, {{edges[e].u, edges[f].u}, {edges[e].v, edges[f].v}}, limits);
      if (!attempt)
        attempt = find_isomorphism(g, g, {{edges[e].u, edges[f].v}, {edges[e].v, edges[f].u}}, limits);
      if (attempt) absorb(*attempt);
    }

  TransitivityReport report;
  report.vertex_orbit = orbit_ids(vparent);
  report.edge_orbit = orbit_ids(eparent);
  report.vertex_transitive = std::all_of(report.vertex_orbit.begin(), report.vertex_orbit.end(),
                                         [](int id) { return id == 0; });
  report.edge_transitive = std::all_of(report.edge_orbit.begin(), report.edge_orbit.end(),
                                       [](int id) { return id == 0; });
  return report;
}

Graph annotate_transitivity(const Graph& g, const Limits& limits) {
  auto report = check_transitivity(g, limits);
  FamilyMeta meta = g.meta() ? *g.meta() : computed_meta(g);
  meta.vertex_transitive = report.vertex_transitive;
  meta.edge_transitive = report.edge_transitive;
  return g.with_meta(meta);
}

}  // namespace incompat
