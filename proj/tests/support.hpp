#pragma once

#include <random>
#include <vector>

#include "incompat/graph.hpp"

namespace incompat::testing {

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

// Triangle 0-1-2 with a pendant 3 on vertex 2.
inline Graph paw() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

// Two adjacent hubs, each with two pendant leaves.
inline Graph double_star() { return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }

}  // namespace incompat::testing
