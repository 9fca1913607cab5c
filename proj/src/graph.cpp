#include "incompat/graph.hpp"

#include <algorithm>
#include <map>

#include "incompat/error.hpp"

namespace incompat {

namespace {

const std::map<FamilyTag, std::string>& family_names() {
  static const std::map<FamilyTag, std::string> names = {
      {FamilyTag::custom, "custom"},
      {FamilyTag::empty, "empty"},
      {FamilyTag::cycle, "cycle"},
      {FamilyTag::path, "path"},
      {FamilyTag::complete, "complete"},
      {FamilyTag::complete_bipartite, "complete-bipartite"},
      {FamilyTag::hypercube, "hypercube"},
      {FamilyTag::johnson, "johnson"},
      {FamilyTag::merged_johnson, "merged-johnson"},
      {FamilyTag::rook, "rook"},
      {FamilyTag::line_of, "line-of"},
  };
  return names;
}

}  // namespace

std::string family_name(FamilyTag tag) { return family_names().at(tag); }

FamilyTag parse_family(const std::string& name) {
  for (const auto& [tag, text] : family_names())
    if (text == name) return tag;
  throw InvalidParameter("unknown family '" + name + "'");
}

bool FamilyMeta::operator==(const FamilyMeta& other) const {
  bool roots_equal = (line_root == nullptr) == (other.line_root == nullptr) &&
                     (line_root == nullptr || *line_root == *other.line_root);
  return tag == other.tag && params == other.params && intersections == other.intersections &&
         vertex_transitive == other.vertex_transitive && edge_transitive == other.edge_transitive &&
         bipartite == other.bipartite && regular_degree == other.regular_degree && roots_equal;
}

Graph::Graph(int n, std::vector<Edge> edges, std::optional<FamilyMeta> meta)
    : n_(n), meta_(std::move(meta)) {
  if (n < 0) throw InvalidParameter("vertex count must be non-negative");
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw InvalidParameter("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") has an endpoint outside 0.." + std::to_string(n - 1));
    if (e.u == e.v) throw InvalidParameter("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    throw InvalidParameter("duplicate edge (" + std::to_string(dup->u) + "," +
                           std::to_string(dup->v) + ")");
  edges_ = std::move(edges);
  adjacency_.assign(n, VertexSet(n));
  for (const auto& e : edges_) {
    adjacency_[e.u].set(e.v);
    adjacency_[e.v].set(e.u);
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::optional<int> Graph::regular_degree() const {
  if (n_ == 0) return 0;
  int d = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

Graph Graph::with_meta(std::optional<FamilyMeta> meta) const {
  Graph copy = *this;
  copy.meta_ = std::move(meta);
  return copy;
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

}  // namespace incompat
