#pragma once

#include <memory>
#include <vector>

#include "incompat/graph.hpp"

namespace incompat {

/** Family tag plus integer parameters; line_of wraps an inner spec. */
struct FamilySpec {
  FamilyTag tag = FamilyTag::custom;
  std::vector<int> params;
  std::vector<int> intersections;
  std::shared_ptr<FamilySpec> inner;
};

/** Builds a family member with metadata. Throws InvalidParameter. */
Graph gen_family(const FamilySpec& spec);

// Labelings: cycle/path in order; K_{r,s} has sides 0..r-1 and r..r+s-1;
// hypercube vertices are bit strings read as integers; Johnson vertices are
// colex ranks of k-subsets of {0..n-1}; rook vertex (i,j) is i*s+j.
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int r, int s);
Graph hypercube_graph(int d);
Graph johnson_graph(int n, int k);
Graph merged_johnson_graph(int n, int k, std::vector<int> intersections);
Graph rook_graph(int r, int s);

/** k-subsets of {0..n-1} as bitmasks, in colex order. */
std::vector<unsigned long long> colex_subsets(int n, int k);

}  // namespace incompat
