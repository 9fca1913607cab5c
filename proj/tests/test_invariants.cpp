#include <doctest.h>

#include "incompat/error.hpp"
#include "incompat/generators.hpp"
#include "incompat/graph_ops.hpp"
#include "incompat/invariants.hpp"
#include "support.hpp"

using namespace incompat;

namespace {

Graph petersen() { return merged_johnson_graph(5, 2, {0}); }

bool proper(const Graph& g, const Coloring& c) {
  for (const auto& e : g.edges())
    if (c.color[e.u] == c.color[e.v]) return false;
  return true;
}

}  // namespace

TEST_CASE("clique, independence and chromatic numbers") {
  struct Row {
    Graph g;
    int omega, alpha, chi;
  };
  std::vector<Row> rows = {{cycle_graph(5), 2, 2, 3},  {testing::paw(), 3, 2, 3},    {complete_graph(6), 6, 1, 6},
                           {petersen(), 2, 4, 3},      {empty_graph(4), 1, 4, 1},    {hypercube_graph(4), 2, 8, 2},
                           {johnson_graph(6, 2), 5, 3, 5}, {cycle_graph(8), 2, 4, 2}};
  for (const auto& row : rows) {
    CHECK(clique_number(row.g) == row.omega);
    CHECK(independence_number(row.g) == row.alpha);
    auto coloring = chromatic_number(row.g);
    CHECK(coloring.colors == row.chi);
    CHECK(proper(row.g, coloring));
  }
  auto clique = maximum_clique(testing::paw());
  CHECK(clique.size() == 3);
}

TEST_CASE("maximal independent sets") {
  CHECK(maximal_independent_sets(cycle_graph(5)).size() == 5);
  CHECK(maximal_independent_sets(complete_graph(4)).size() == 4);
  CHECK(maximal_independent_sets(empty_graph(3)).size() == 1);
}

TEST_CASE("exact fractional chromatic numbers") {
  auto c5 = fractional_chromatic(cycle_graph(5));
  CHECK(c5.numerator == 5);
  CHECK(c5.denominator == 2);
  CHECK(c5.verified);
  CHECK(c5.palette == 5);
  CHECK(c5.per_vertex == 2);
  CHECK(verify_fractional_coloring(cycle_graph(5), c5));

  auto c7 = fractional_chromatic(cycle_graph(7));
  CHECK(c7.numerator == 7);
  CHECK(c7.denominator == 3);
  CHECK(fractional_chromatic(complete_graph(5)).value() == 5);
  CHECK(fractional_chromatic(empty_graph(3)).value() == 1);
  CHECK(fractional_chromatic(hypercube_graph(3)).value() == 2);
  auto p = fractional_chromatic(petersen());
  CHECK(p.numerator == 5);
  CHECK(p.denominator == 2);
  auto j62 = fractional_chromatic(johnson_graph(6, 2));
  CHECK(j62.value() == 5);
  auto paw = fractional_chromatic(testing::paw());
  CHECK(paw.value() == 3);
}

TEST_CASE("a corrupted fractional colouring fails verification") {
  auto c5 = fractional_chromatic(cycle_graph(5));
  auto broken = c5;
  broken.colors[1] = broken.colors[0];
  CHECK_FALSE(verify_fractional_coloring(cycle_graph(5), broken));
}

TEST_CASE("fractional chromatic number sits between clique and chromatic numbers") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    Graph g = testing::random_graph(10, 0.4, rng);
    auto f = fractional_chromatic(g);
    CHECK(f.verified);
    CHECK(f.value() >= clique_number(g) - 1e-12);
    CHECK(f.value() <= chromatic_number(g).colors + 1e-12);
    CHECK(f.value() >= double(g.order()) / independence_number(g) - 1e-12);
  }
}

TEST_CASE("caps on the fractional chromatic number") {
  Limits small;
  small.independent_sets_max_vertices = 10;
  auto big_cycle = fractional_chromatic(cycle_graph(11), small);
  CHECK(big_cycle.vertex_transitive_formula);
  CHECK(big_cycle.numerator == 11);
  CHECK(big_cycle.denominator == 5);
  CHECK_FALSE(big_cycle.verified);
  CHECK_THROWS_AS(fractional_chromatic(path_graph(11), small), CapExceeded);
}

TEST_CASE("invariant report JSON") {
  auto report = invariant_report(cycle_graph(5));
  auto j = invariants_to_json(report);
  CHECK(j["alpha"] == 2);
  CHECK(j["omega"] == 2);
  CHECK(j["chi"] == 3);
  CHECK(j["chi_f"]["p"] == 5);
  CHECK(j["chi_f"]["q"] == 2);
  CHECK(j["chi_f"]["verified"] == true);
  CHECK(j["theta"]["value"].get<double>() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-7));
}
