#pragma once

#include <json.hpp>
#include <optional>
#include <vector>

#include "incompat/graph.hpp"
#include "incompat/limits.hpp"

namespace incompat {

/** Maximum clique by branch and bound with greedy-colouring pruning. */
std::vector<int> maximum_clique(const Graph& g, const Limits& limits = {});
int clique_number(const Graph& g, const Limits& limits = {});
int independence_number(const Graph& g, const Limits& limits = {});

/** Exact chromatic number and an optimal colouring (colour per vertex). */
struct Coloring {
  int colors = 0;
  std::vector<int> color;
};
Coloring chromatic_number(const Graph& g, const Limits& limits = {});

/** All maximal independent sets as vertex bitmasks (pivoting Bron-Kerbosch). */
std::vector<std::uint64_t> maximal_independent_sets(const Graph& g, const Limits& limits = {});

/** a:b colouring with a/b = chi_f; numerator/denominator hold the reduced value. */
struct FractionalColoring {
  long long numerator = 0;
  long long denominator = 1;
  long long palette = 0;         // a
  long long per_vertex = 0;      // b
  std::vector<std::vector<long long>> colors;  // b colours per vertex; empty when too large to list
  bool verified = false;         // colouring checked exhaustively
  bool vertex_transitive_formula = false;

  double value() const { return double(numerator) / double(denominator); }
};

/**
 * Exact fractional chromatic number. The covering LP over maximal independent
 * sets is solved in rational arithmetic; vertex-transitive graphs above the
 * enumeration cap use |V|/alpha.
 */
FractionalColoring fractional_chromatic(const Graph& g, const Limits& limits = {});

/** True when every vertex has b colours from 0..a-1 and adjacent vertices share none. */
bool verify_fractional_coloring(const Graph& g, const FractionalColoring& c);

struct InvariantReport {
  int alpha = 0;
  int omega = 0;
  int chi = 0;
  FractionalColoring chi_f;
  double theta = 0;
  double theta_gap = 0;
};

InvariantReport invariant_report(const Graph& g, const Limits& limits = {});
nlohmann::json invariants_to_json(const InvariantReport& report);

}  // namespace incompat
