#pragma once

#include <optional>
#include <vector>

#include "incompat/graph.hpp"

namespace incompat {

/** Line graph vertex i stands for root edge labeling[i]. */
struct LineGraph {
  Graph graph;
  std::vector<Edge> labeling;
};

LineGraph line_graph(const Graph& root);

/** Reduced graph plus, for every original vertex, its vertex in the reduced graph. */
struct TwinReduction {
  Graph graph;
  std::vector<int> mapping;
};

/** Repeatedly removes one vertex of a non-adjacent pair with equal neighbourhoods. */
TwinReduction twin_reduce(const Graph& g);

/** Rank of the adjacency matrix over GF(2). */
int f2_rank(const Graph& g);

Graph complement(const Graph& g);

/** Subgraph induced on vertices (relabelled 0.. in the given order). */
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/** Vertex (i,j) becomes i*|V(h)|+j. */
Graph cartesian_product(const Graph& g, const Graph& h);

/** Side (0/1) for every vertex, or nullopt when an odd cycle exists. */
std::optional<std::vector<int>> is_bipartite(const Graph& g);

/** Vertex lists of connected components, each sorted, ordered by smallest vertex. */
std::vector<std::vector<int>> connected_components(const Graph& g);

/** Metadata with exactly computable flags (bipartite, regularity) filled in. */
FamilyMeta computed_meta(const Graph& g, FamilyTag tag = FamilyTag::custom);

}  // namespace incompat
