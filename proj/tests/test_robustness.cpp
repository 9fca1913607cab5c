#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <numbers>

#include "incompat/bounds.hpp"
#include "incompat/closed_form.hpp"
#include "incompat/error.hpp"
#include "incompat/generators.hpp"
#include "incompat/graph_ops.hpp"
#include "incompat/orientation.hpp"
#include "incompat/joint_measurability.hpp"
#include "incompat/realization.hpp"
#include "incompat/report.hpp"
#include "support.hpp"

using namespace incompat;
using doctest::Approx;

namespace {

const double pi = std::numbers::pi;

double signing_of(const Graph& g) { return eta_upper_signing(realize_minimal(g)).bound; }

FamilySpec family(FamilyTag tag, std::vector<int> params) { return {tag, std::move(params), {}, nullptr}; }

FamilySpec line_of(FamilySpec inner) {
  return {FamilyTag::line_of, {}, {}, std::make_shared<FamilySpec>(std::move(inner))};
}

void check_sound(const BoundsReport& r) {
  CHECK(r.consistent);
  for (const auto& c : r.components) {
    for (const auto& lo : c.bounds)
      for (const auto& hi : c.bounds)
        if (lo.kind != BoundKind::upper && hi.kind != BoundKind::lower) CHECK(lo.value <= hi.value + 1e-6);
  }
}

}  // namespace

TEST_CASE("Lovasz upper bound") {
  for (int n = 2; n <= 6; ++n) CHECK(eta_upper_lovasz(complete_graph(n)).value == Approx(1 / std::sqrt(n)).epsilon(1e-7));
  CHECK(eta_upper_lovasz(testing::paw()).value == Approx(1 / std::sqrt(2.0)).epsilon(1e-7));
  CHECK(eta_upper_lovasz(cycle_graph(5)).value == Approx(std::sqrt(std::sqrt(5.0) / 5)).epsilon(1e-7));
  CHECK(eta_upper_lovasz(testing::paw()).kind == BoundKind::upper);
}

TEST_CASE("subgraph bounds") {
  auto paw = eta_upper_subgraph(testing::paw(), SubgraphStrategy::clique);
  CHECK(paw.value == Approx(1 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(paw.certificate["vertices"].size() == 3);
  CHECK(eta_upper_subgraph(johnson_graph(5, 2), SubgraphStrategy::clique).value == Approx(0.5));
  CHECK(eta_upper_subgraph(empty_graph(3), SubgraphStrategy::clique).value == Approx(1));
  auto search = eta_upper_subgraph(cycle_graph(5), SubgraphStrategy::search);
  CHECK(search.heuristic);
  CHECK(search.value <= 1 / std::sqrt(2.0) + 1e-12);
  CHECK(search.value == Approx(std::sqrt(std::sqrt(5.0) / 5)).epsilon(1e-7));
  CHECK_THROWS_AS(eta_upper_subgraph(cycle_graph(17), SubgraphStrategy::search), CapExceeded);
}

TEST_CASE("colouring lower bounds") {
  CHECK(eta_lower_fractional(cycle_graph(5)).value == Approx(0.4));
  CHECK(eta_lower_fractional(cycle_graph(7)).value == Approx(3.0 / 7));
  CHECK(eta_lower_fractional(complete_graph(6)).value == Approx(1.0 / 6));
  CHECK(eta_lower_fractional(cycle_graph(5)).certificate["verified"] == true);
  CHECK(eta_lower_chromatic(cycle_graph(5)).value == Approx(1.0 / 3));
}

TEST_CASE("signing bound") {
  CHECK(signing_of(complete_graph(2)) == Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(signing_of(complete_graph(3)) == Approx(1 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(signing_of(path_graph(4)) == Approx((1 + std::sqrt(3.0)) / 4).epsilon(1e-12));
  CHECK(signing_of(empty_graph(3)) == Approx(1));
  auto result = eta_upper_signing(realize_minimal(cycle_graph(5)));
  CHECK(result.signs.size() == 5);
  CHECK(result.signs[0] == 1);
  CHECK(result.bound == Approx(result.max_norm / 5));
  Limits tight;
  tight.signing_max_vertices = 4;
  CHECK_THROWS_AS(eta_upper_signing(realize_minimal(cycle_graph(5)), tight), CapExceeded);
}

TEST_CASE("signing agrees with the maximum skew energy on line graphs") {
  std::vector<Graph> roots = {path_graph(5), cycle_graph(5), complete_graph(4), complete_bipartite_graph(2, 3),
                              testing::paw(), cycle_graph(6)};
  std::mt19937_64 rng(23);
  while (roots.size() < 14) {
    Graph g = testing::random_graph(6, 0.45, rng);
    if (g.size() == 0 || g.size() > 10) continue;
    int spanning = 0;
    for (const auto& part : connected_components(g)) spanning += part.size() > 1;
    if (spanning != 1) continue;
    roots.push_back(g);
  }
  for (const auto& root : roots) {
    double skew = max_skew_energy(root).value / (2.0 * root.size());
    CHECK(eta_upper_signing(realize_quadratic_line(root)).bound == Approx(skew).epsilon(1e-10));
    CHECK(signing_of(line_graph(root).graph) == Approx(skew).epsilon(1e-10));
  }
}

TEST_CASE("signing does not depend on the realisation") {
  for (const Graph& g : {path_graph(4), cycle_graph(5), complete_graph(4), testing::paw()}) {
    double a = eta_upper_signing(realize_majorana(g)).bound;
    double b = eta_upper_signing(realize_minimal(g)).bound;
    CHECK(a == Approx(b).epsilon(1e-12));
  }
}

TEST_CASE("psi estimates") {
  for (int n = 2; n <= 5; ++n) CHECK(psi_estimate(realize_minimal(complete_graph(n))).value == Approx(1).epsilon(1e-9));
  CHECK(psi_estimate(realize_minimal(empty_graph(3))).value == Approx(3).epsilon(1e-9));
  auto c5 = psi_estimate(realize_minimal(cycle_graph(5)));
  CHECK(c5.value >= 2 - 1e-9);
  CHECK(c5.value <= std::sqrt(5.0) + 1e-6);
  double norm = 0;
  for (double b : c5.coefficients) norm += b * b;
  CHECK(norm == Approx(1).epsilon(1e-9));
  auto obs = realize_minimal(path_graph(5));
  auto signing = eta_upper_signing(obs);
  CHECK(psi_estimate(obs).value >= signing.max_norm * signing.max_norm / 5 - 1e-9);
  CHECK(psi_estimate(obs, 4, 99).value == psi_estimate(obs, 4, 99).value);
}

TEST_CASE("line-graph skew bound") {
  auto c5 = eta_line_skew(cycle_graph(5));
  CHECK(c5.kind == BoundKind::exact);
  CHECK(c5.value == Approx(std::cos(pi / 10) / std::sin(pi / 10) / 5).epsilon(1e-12));
  auto k4 = eta_line_skew(complete_graph(4));
  CHECK(k4.kind == BoundKind::exact);
  CHECK(k4.value == Approx(1 / std::sqrt(3.0)).epsilon(1e-12));
  auto k23 = eta_line_skew(complete_bipartite_graph(2, 3));
  CHECK(k23.kind == BoundKind::exact);
  CHECK(k23.value == Approx((2 + std::sqrt(2.0)) / 6).epsilon(1e-12));
  CHECK(k23.value < 1 / std::sqrt(3.0));
  auto p5 = eta_line_skew(path_graph(5));
  CHECK(p5.kind == BoundKind::upper);
  Graph unknown(14, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11},
                     {11, 12}, {12, 13}, {13, 0}});
  CHECK(eta_line_skew(unknown).kind == BoundKind::upper);
  CHECK(eta_line_skew(cycle_graph(14)).kind == BoundKind::exact);
  CHECK_THROWS_AS(eta_line_skew(empty_graph(3)), InvalidParameter);
}

TEST_CASE("bipartite energy and degree bounds") {
  CHECK(eta_lower_bipartite_energy(hypercube_graph(3)).value == Approx(0.5).epsilon(1e-12));
  CHECK(eta_lower_bipartite_energy(hypercube_graph(3)).value < eta_line_skew(hypercube_graph(3)).value);
  CHECK(eta_lower_bipartite_energy(cycle_graph(4)).value == Approx(0.5).epsilon(1e-12));
  CHECK(eta_lower_bipartite_energy(complete_graph(2)).value == Approx(1).epsilon(1e-12));
  CHECK_THROWS_AS(eta_lower_bipartite_energy(cycle_graph(5)), InvalidParameter);
  CHECK_THROWS_AS(eta_lower_bipartite_energy(path_graph(4)), InvalidParameter);
  CHECK(eta_upper_degree(hypercube_graph(3)).value == Approx(1 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(eta_upper_degree(cycle_graph(5)).value == Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("optimal incompatibility") {
  auto q3 = optimal_incompatibility_check(hypercube_graph(3));
  CHECK(q3.verdict == Verdict::optimal);
  CHECK(q3.regular);
  CHECK(q3.certificate.contains("cotree_signs"));
  CHECK(q3.degree_bound == Approx(1 / std::sqrt(3.0)).epsilon(1e-12));
  auto k4 = optimal_incompatibility_check(complete_graph(4));
  CHECK(k4.verdict == Verdict::optimal);
  auto c5 = optimal_incompatibility_check(cycle_graph(5));
  CHECK(c5.verdict == Verdict::not_optimal);
  REQUIRE(c5.gap);
  CHECK(*c5.gap == Approx(1 / std::sqrt(2.0) - 0.6155367074350508).epsilon(1e-9));
  auto k23 = optimal_incompatibility_check(complete_bipartite_graph(2, 3));
  CHECK(k23.verdict == Verdict::not_optimal);
  CHECK_FALSE(k23.regular);
  Limits tight;
  tight.max_switching_classes = 4;
  CHECK(optimal_incompatibility_check(complete_graph(4), tight).verdict == Verdict::inconclusive);
}

TEST_CASE("closed forms") {
  auto c4 = closed_form(family(FamilyTag::cycle, {4}));
  CHECK(*c4.exact == Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
  auto p4 = closed_form(family(FamilyTag::path, {4}));
  CHECK_FALSE(p4.exact);
  CHECK(*p4.lower == Approx(2.0 / 3).epsilon(1e-12));
  CHECK(*p4.upper == Approx((1 + std::sqrt(3.0)) / 4).epsilon(1e-12));
  auto r22 = closed_form(family(FamilyTag::rook, {2, 2}));
  CHECK(r22.condition == true);
  CHECK(*r22.exact == Approx(1 / std::sqrt(2.0)));
  auto r23 = closed_form(family(FamilyTag::rook, {3, 2}));
  CHECK(r23.condition == false);
  CHECK_FALSE(r23.exact);
  CHECK(*r23.upper == Approx(1 / std::sqrt(3.0)));
  auto r24 = closed_form(family(FamilyTag::rook, {2, 4}));
  CHECK(r24.condition == true);
  auto j4 = closed_form(family(FamilyTag::johnson, {4, 2}));
  CHECK(j4.condition == true);
  CHECK(*j4.exact == Approx(1 / std::sqrt(3.0)));
  auto j5 = closed_form(family(FamilyTag::johnson, {5, 2}));
  CHECK(j5.condition == false);
  CHECK(*j5.upper == Approx(0.5));
  CHECK(closed_form(family(FamilyTag::johnson, {6, 2})).condition == false);
  CHECK(closed_form(family(FamilyTag::johnson, {8, 2})).condition == true);
  CHECK(*closed_form(line_of(family(FamilyTag::hypercube, {3}))).exact == Approx(1 / std::sqrt(3.0)));
  CHECK(*closed_form(family(FamilyTag::complete, {5})).exact == Approx(1 / std::sqrt(5.0)));
  CHECK(*closed_form(family(FamilyTag::empty, {3})).exact == 1);
  CHECK(*closed_form(line_of(family(FamilyTag::complete_bipartite, {2, 2}))).exact == Approx(1 / std::sqrt(2.0)));
  CHECK_THROWS_AS(closed_form(family(FamilyTag::merged_johnson, {6, 3})), InvalidParameter);
  CHECK_THROWS_AS(closed_form(family(FamilyTag::cycle, {2})), InvalidParameter);
}

TEST_CASE("cycle formula matches enumeration and approaches 2/pi") {
  for (int n = 3; n <= 12; ++n) {
    double formula = cycle_value(n);
    CHECK(eta_line_skew(cycle_graph(n)).value == Approx(formula).epsilon(1e-12));
    double n2 = double(n) * n;
    if (n % 2)
      CHECK(std::abs(formula - 2 / pi) <= pi / (3 * n2) + 1e-9);
    else
      CHECK(std::abs(formula - 2 / pi - pi / (3 * n2)) <= pi * pi * pi / (4 * n2 * n2));
    if (n >= 5) {
      double previous = cycle_value(n - 2);
      if (n % 2)
        CHECK(formula > previous);
      else
        CHECK(formula < previous);
    }
  }
}

TEST_CASE("path intervals nest inside the colouring and energy bounds") {
  for (int n = 2; n <= 9; ++n) {
    auto [lower, upper] = path_interval(n);
    double skew = eta_line_skew(path_graph(n + 1)).value;
    CHECK(upper == Approx(skew).epsilon(1e-12));
    CHECK(lower <= upper + 1e-12);
    CHECK(eta_lower_fractional(path_graph(n)).value <= lower);
    CHECK(signing_of(path_graph(n)) == Approx(skew).epsilon(1e-10));
  }
}

TEST_CASE("exact SDP on small graphs") {
  auto k2 = eta_exact_sdp(realize_minimal(complete_graph(2)));
  CHECK(k2.value == Approx(1 / std::sqrt(2.0)).epsilon(1e-6));
  auto obs = realize_minimal(complete_graph(3));
  auto k3 = eta_exact_sdp(obs);
  CHECK(k3.value == Approx(1 / std::sqrt(3.0)).epsilon(1e-6));
  auto mats = observable_matrices(obs);
  CHECK(check_parent(k3.parent, mats).valid());
  auto explicit_parent = uniform_parent(mats, 1 / std::sqrt(3.0));
  CHECK(check_parent(explicit_parent, mats).valid(1e-12, 1e-12, 1e-12));
  double distance = 0;
  for (std::size_t o = 0; o < mats.size(); ++o)
    distance = std::max(distance, (k3.parent.effects[o] - explicit_parent.effects[o]).cwiseAbs().maxCoeff());
  CHECK(distance < 1e-6);
  CHECK(eta_exact_sdp(realize_minimal(path_graph(3))).value == Approx(1 / std::sqrt(2.0)).epsilon(1e-6));
  CHECK(eta_exact_sdp(realize_minimal(empty_graph(2))).value == Approx(1).epsilon(1e-6));
}

TEST_CASE("exact SDP does not depend on the realisation") {
  for (const Graph& g : {path_graph(3), complete_graph(3), testing::paw()}) {
    double a = eta_exact_sdp(realize_majorana(g)).value;
    double b = eta_exact_sdp(realize_minimal(g)).value;
    CHECK(a == Approx(b).epsilon(1e-6));
  }
}

TEST_CASE("deleting a vertex never lowers the exact value") {
  for (const Graph& g : {testing::paw(), path_graph(4), cycle_graph(4), complete_graph(4)}) {
    double full = eta_exact_sdp(realize_minimal(g)).value;
    for (int v = 0; v < g.order(); ++v) {
      std::vector<int> keep;
      for (int u = 0; u < g.order(); ++u)
        if (u != v) keep.push_back(u);
      double smaller = eta_exact_sdp(realize_minimal(induced_subgraph(g, keep))).value;
      CHECK(full <= smaller + 1e-4);
    }
  }
}

TEST_CASE("parent POVM export round trip") {
  auto result = eta_exact_sdp(realize_minimal(complete_graph(2)));
  std::string path = "parent_roundtrip.bin";
  write_parent_binary(path, result.parent);
  auto back = read_parent_binary(path);
  std::remove(path.c_str());
  CHECK(back.observables == result.parent.observables);
  CHECK(back.dimension == result.parent.dimension);
  REQUIRE(back.effects.size() == result.parent.effects.size());
  for (std::size_t o = 0; o < back.effects.size(); ++o) CHECK((back.effects[o] - result.parent.effects[o]).norm() == 0);
}

TEST_CASE("exact SDP caps") {
  CHECK_THROWS_AS(eta_exact_sdp(realize_minimal(path_graph(7))), CapExceeded);
}

TEST_CASE("bounds report collapses for complete graphs") {
  auto r = bounds_report(complete_graph(4));
  REQUIRE(r.exact);
  CHECK(*r.exact == Approx(0.5).epsilon(1e-12));
  CHECK(r.exact_method == "closed-form");
  CHECK(r.upper - r.lower < 1e-6);
  check_sound(r);
}

TEST_CASE("bounds report for the six-cycle") {
  auto r = bounds_report(cycle_graph(6));
  REQUIRE(r.exact);
  CHECK(*r.exact == Approx(2.0 / 3).epsilon(1e-12));
  CHECK(*r.value_of("fractional", BoundKind::lower) == Approx(0.5));
  CHECK(*r.value_of("lovasz", BoundKind::upper) == Approx(1 / std::sqrt(2.0)).epsilon(1e-7));
  check_sound(r);
}

TEST_CASE("twins do not change the report") {
  auto star = bounds_report(testing::double_star());
  auto p4 = bounds_report(path_graph(4));
  REQUIRE(star.components.size() == 1);
  REQUIRE(p4.components.size() == 1);
  const auto& a = star.components[0].bounds;
  const auto& b = p4.components[0].bounds;
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].method == b[i].method);
    CHECK(a[i].kind == b[i].kind);
    CHECK(a[i].value == Approx(b[i].value).epsilon(1e-9));
  }
  CHECK(star.lower == Approx(p4.lower).epsilon(1e-9));
  CHECK(star.upper == Approx(p4.upper).epsilon(1e-9));
}

TEST_CASE("disconnected graphs take the smallest component value") {
  Graph g(7, {{0, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}});
  auto r = bounds_report(g);
  CHECK(r.components.size() == 2);
  REQUIRE(r.exact);
  CHECK(*r.exact == Approx(cycle_value(5)).epsilon(1e-12));
  check_sound(r);
}

TEST_CASE("line graphs with several components use their own roots") {
  Graph root(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto r = bounds_report(line_graph(root).graph);
  CHECK(r.components.size() == 2);
  for (const auto& c : r.components) {
    bool has_skew = false;
    for (const auto& b : c.bounds)
      if (b.method == "line-skew") {
        has_skew = true;
        CHECK(b.value == Approx(1 / std::sqrt(3.0)).epsilon(1e-12));
      }
    CHECK(has_skew);
  }
  check_sound(r);
}

TEST_CASE("method failures are recorded, not thrown") {
  ReportOptions options;
  options.limits.signing_max_vertices = 3;
  auto r = bounds_report(cycle_graph(5), options);
  bool recorded = false;
  for (const auto& f : r.components[0].failures) recorded = recorded || f.method == "signing";
  CHECK(recorded);
  auto j = report_to_json(r);
  CHECK(j["failures"].size() >= 1);
  CHECK(j["records"][0].contains("method"));
  CHECK(j["records"][0].contains("kind"));
  CHECK(j["records"][0].contains("certificate"));
}

TEST_CASE("single vertices and the exact SDP option") {
  auto one = bounds_report(Graph(1, {}));
  CHECK(*one.exact == 1);
  ReportOptions options;
  options.exact_sdp = true;
  auto p3 = bounds_report(path_graph(3), options);
  CHECK(*p3.value_of("exact-sdp", BoundKind::exact) == Approx(1 / std::sqrt(2.0)).epsilon(1e-6));
  check_sound(p3);
}

TEST_CASE("reports are sound across generated families") {
  std::vector<FamilySpec> specs = {
      family(FamilyTag::cycle, {7}),       family(FamilyTag::path, {6}),
      family(FamilyTag::complete, {5}),    family(FamilyTag::complete_bipartite, {2, 3}),
      family(FamilyTag::hypercube, {3}),   family(FamilyTag::johnson, {5, 2}),
      family(FamilyTag::rook, {2, 3}),     family(FamilyTag::rook, {2, 4}),
      line_of(family(FamilyTag::hypercube, {3})), line_of(family(FamilyTag::complete, {4})),
      line_of(family(FamilyTag::path, {5})), {FamilyTag::merged_johnson, {6, 2}, {0}, nullptr}};
  for (const auto& spec : specs) {
    CAPTURE(family_name(spec.tag));
    check_sound(bounds_report(gen_family(spec)));
  }
  std::mt19937_64 rng(41);
  for (int t = 0; t < 10; ++t) check_sound(bounds_report(testing::random_graph(7, 0.5, rng)));
}
