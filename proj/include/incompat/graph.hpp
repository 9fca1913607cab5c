#pragma once

#include <boost/dynamic_bitset.hpp>
#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace incompat {

using VertexSet = boost::dynamic_bitset<>;

struct Edge {
  int u;
  int v;
  auto operator<=>(const Edge&) const = default;
};

enum class FamilyTag {
  custom,
  empty,
  cycle,
  path,
  complete,
  complete_bipartite,
  hypercube,
  johnson,
  merged_johnson,
  rook,
  line_of,
};

std::string family_name(FamilyTag tag);
FamilyTag parse_family(const std::string& name);

class Graph;

/**
 * Structural facts about a graph. Flags are only set when they are
 * guaranteed, either by a generator or by an exhaustive check.
 */
struct FamilyMeta {
  FamilyTag tag = FamilyTag::custom;
  std::vector<int> params;
  std::vector<int> intersections;
  std::optional<bool> vertex_transitive;
  std::optional<bool> edge_transitive;
  std::optional<bool> bipartite;
  std::optional<int> regular_degree;
  /** Root graph when this graph is known to be its line graph. */
  std::shared_ptr<const class Graph> line_root;

  bool operator==(const FamilyMeta& other) const;
};

/** Immutable undirected simple graph on vertices 0..n-1. */
class Graph {
 public:
  Graph() = default;

  /** Validates and normalises the edge list; throws InvalidParameter. */
  Graph(int n, std::vector<Edge> edges, std::optional<FamilyMeta> meta = std::nullopt);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const VertexSet& neighbours(int v) const { return adjacency_.at(v); }
  bool adjacent(int u, int v) const { return adjacency_.at(u).test(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).count()); }
  int max_degree() const;
  std::optional<int> regular_degree() const;

  const std::optional<FamilyMeta>& meta() const { return meta_; }
  Graph with_meta(std::optional<FamilyMeta> meta) const;

  /** Index of edge {u,v} in edges(), or -1. */
  int edge_index(int u, int v) const;

  /** Equality of vertex count and edge set; metadata is ignored. */
  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adjacency_;
  std::optional<FamilyMeta> meta_;
};

}  // namespace incompat
