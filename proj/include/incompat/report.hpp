#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "incompat/bounds.hpp"
#include "incompat/graph.hpp"
#include "incompat/limits.hpp"

namespace incompat {

struct ReportOptions {
  Limits limits;
  std::string graph_id = "graph";
  bool exact_sdp = false;
  bool subgraph_search = true;
  /** Upper limit on 2^(n-1) * d^3 for the signing enumeration. */
  double signing_budget = 4e9;
};

struct MethodFailure {
  std::string method;
  std::string error;
};

/** Bounds for one connected component of the twin-reduced graph. */
struct ComponentReport {
  std::vector<int> vertices;  // reduced-graph vertices
  Graph graph;
  std::vector<Bound> bounds;
  std::vector<MethodFailure> failures;
  double lower = 0;
  double upper = 1;
  std::optional<double> exact;
  std::string exact_method;
};

/**
 * Certified interval for the robustness. Twins are removed first and the
 * value of a disconnected graph is the minimum over its components.
 */
struct BoundsReport {
  std::string graph_id;
  int order = 0;
  Graph reduced;
  std::vector<int> twin_mapping;
  std::vector<ComponentReport> components;
  double lower = 0;
  double upper = 1;
  std::optional<double> exact;
  std::string exact_method;
  bool consistent = true;

  /** Best bound of a method and kind across components, if recorded. */
  std::optional<double> value_of(const std::string& method, BoundKind kind) const;
};

BoundsReport bounds_report(const Graph& g, const ReportOptions& options = {});

nlohmann::json report_to_json(const BoundsReport& report);

/** Generator metadata for graphs that are complete, cycles or paths up to relabelling. */
std::optional<FamilyMeta> recognise_family(const Graph& g);

}  // namespace incompat
