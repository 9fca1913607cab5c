#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "incompat/graph.hpp"
#include "incompat/limits.hpp"

namespace incompat {

/**
 * Finds a vertex bijection f with a.adjacent(u,v) == b.adjacent(f(u),f(v)),
 * honouring the prescribed (u, f(u)) pairs. Backtracking with colour refinement.
 */
std::optional<std::vector<int>> find_isomorphism(
    const Graph& a, const Graph& b, const std::vector<std::pair<int, int>>& prescribed = {},
    const Limits& limits = {});

bool are_isomorphic(const Graph& a, const Graph& b, const Limits& limits = {});

struct TransitivityReport {
  bool vertex_transitive = false;
  bool edge_transitive = false;
  std::vector<int> vertex_orbit;  // orbit id per vertex
  std::vector<int> edge_orbit;    // orbit id per edge index
};

/** Exact orbit computation by automorphism search; throws CapExceeded above the cap. */
TransitivityReport check_transitivity(const Graph& g, const Limits& limits = {});

/** Copy of g whose metadata transitivity flags come from check_transitivity. */
Graph annotate_transitivity(const Graph& g, const Limits& limits = {});

}  // namespace incompat
