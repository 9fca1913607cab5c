#include "incompat/report.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <map>

#include "incompat/closed_form.hpp"
#include "incompat/error.hpp"
#include "incompat/generators.hpp"
#include "incompat/graph_ops.hpp"
#include "incompat/joint_measurability.hpp"
#include "incompat/realization.hpp"

namespace incompat {

namespace {

constexpr double kConsistencySlack = 1e-6;

struct Task {
  std::string method;
  std::function<std::vector<Bound>()> run;
};

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

// Root of a component of a graph generated as a line graph: vertex i is root edge i.
std::optional<Graph> component_root(const Graph& whole, const std::vector<int>& vertices) {
  if (!whole.meta() || whole.meta()->tag != FamilyTag::line_of || !whole.meta()->line_root) return std::nullopt;
  const Graph& root = *whole.meta()->line_root;
  if (static_cast<int>(vertices.size()) == root.size()) return root;
  std::map<int, int> relabel;
  std::vector<Edge> edges;
  for (int v : vertices) {
    Edge e = root.edges().at(v);
    for (int* end : {&e.u, &e.v}) {
      auto [it, inserted] = relabel.emplace(*end, static_cast<int>(relabel.size()));
      *end = it->second;
    }
    edges.push_back(e);
  }
  Graph sub(static_cast<int>(relabel.size()), edges);
  return sub.with_meta(computed_meta(sub));
}

std::vector<Bound> closed_form_bounds(const FamilySpec& spec, const Limits& limits) {
  ClosedForm c = closed_form(spec, limits);
  nlohmann::json cert = closed_form_to_json(c);
  if (c.exact) return {{"closed-form", BoundKind::exact, *c.exact, cert}};
  std::vector<Bound> out;
  if (c.lower) out.push_back({"closed-form", BoundKind::lower, *c.lower, cert});
  if (c.upper) out.push_back({"closed-form", BoundKind::upper, *c.upper, cert});
  return out;
}

std::vector<Task> component_tasks(const Graph& h, const std::optional<Graph>& root, const ReportOptions& options) {
  const Limits& limits = options.limits;
  int n = h.order();
  std::vector<Task> tasks;
  if (auto spec = family_of(h); spec && has_closed_form(*spec))
    tasks.push_back({"closed-form", [spec, &limits] { return closed_form_bounds(*spec, limits); }});
  tasks.push_back({"lovasz", [&h, &limits] { return std::vector<Bound>{eta_upper_lovasz(h, limits)}; }});
  tasks.push_back({"clique", [&h, &limits] {
                     return std::vector<Bound>{eta_upper_subgraph(h, SubgraphStrategy::clique, limits)};
                   }});
  if (options.subgraph_search && n <= limits.subgraph_search_max_vertices)
    tasks.push_back({"subgraph-search", [&h, &limits] {
                       return std::vector<Bound>{eta_upper_subgraph(h, SubgraphStrategy::search, limits)};
                     }});
  tasks.push_back({"fractional", [&h, &limits] { return std::vector<Bound>{eta_lower_fractional(h, limits)}; }});
  tasks.push_back({"chromatic", [&h, &limits] { return std::vector<Bound>{eta_lower_chromatic(h, limits)}; }});
  tasks.push_back({"signing", [&h, &options] {
                     const Limits& limits = options.limits;
                     if (h.order() > limits.signing_max_vertices)
                       throw CapExceeded("signing enumeration is limited to " +
                                         std::to_string(limits.signing_max_vertices) + " observables");
                     ObservableSet obs = realize_minimal(h, limits);
                     double d = static_cast<double>(obs.dimension());
                     if (std::ldexp(d * d * d, h.order() - 1) > options.signing_budget)
                       throw CapExceeded("signing enumeration exceeds the work budget");
                     SigningResult s = eta_upper_signing(obs, limits);
                     return std::vector<Bound>{{"signing", BoundKind::upper, s.bound,
                                                {{"max_norm", s.max_norm}, {"signs", s.signs},
                                                 {"qubits", obs.qubit_count()}}}};
                   }});
  if (root) {
    tasks.push_back({"line-skew", [root, &limits] { return std::vector<Bound>{eta_line_skew(*root, limits)}; }});
    tasks.push_back({"bipartite-energy", [root, &limits] {
                       if (!is_bipartite(*root) || known_edge_transitive(*root, limits) != true)
                         return std::vector<Bound>{};
                       return std::vector<Bound>{eta_lower_bipartite_energy(*root, limits)};
                     }});
    tasks.push_back({"degree", [root] { return std::vector<Bound>{eta_upper_degree(*root)}; }});
  }
  if (options.exact_sdp)
    tasks.push_back({"exact-sdp", [&h, &limits] {
                       ObservableSet obs = realize_minimal(h, limits);
                       ExactEta e = eta_exact_sdp(obs, limits);
                       if (e.status != sdp::Status::optimal)
                         throw SolverFailure("exact SDP ended with status " + sdp::status_name(e.status));
                       return std::vector<Bound>{{"exact-sdp", BoundKind::exact, e.value,
                                                  {{"upper", e.upper}, {"gap", e.gap},
                                                   {"iterations", e.iterations},
                                                   {"dimension", obs.dimension()}}}};
                     }});
  return tasks;
}

using Outcome = std::pair<std::vector<Bound>, std::optional<MethodFailure>>;

Outcome run_task(const Task& task) {
  try {
    return {task.run(), std::nullopt};
  } catch (const std::exception& e) {
    return {{}, MethodFailure{task.method, e.what()}};
  }
}

std::vector<Outcome> run_all(const std::vector<Task>& tasks, int threads) {
  std::vector<Outcome> outcomes(tasks.size());
  std::size_t width = static_cast<std::size_t>(std::max(1, threads));
  for (std::size_t start = 0; start < tasks.size(); start += width) {
    std::size_t stop = std::min(tasks.size(), start + width);
    if (width == 1) {
      outcomes[start] = run_task(tasks[start]);
      continue;
    }
    std::vector<std::future<Outcome>> running;
    for (std::size_t i = start; i < stop; ++i)
      running.push_back(std::async(std::launch::async, run_task, std::cref(tasks[i])));
    for (std::size_t i = start; i < stop; ++i) outcomes[i] = running[i - start].get();
  }
  return outcomes;
}

int exact_priority(const std::string& method) {
  if (method == "trivial") return 0;
  if (method == "closed-form") return 1;
  if (method == "line-skew") return 2;
  return 3;
}

void summarise(ComponentReport& c, bool& consistent) {
  c.lower = 0;
  c.upper = 1;
  for (const Bound& b : c.bounds) {
    if (b.kind != BoundKind::upper) c.lower = std::max(c.lower, b.value);
    if (b.kind != BoundKind::lower) c.upper = std::min(c.upper, b.value);
    if (b.kind == BoundKind::exact && (!c.exact || exact_priority(b.method) < exact_priority(c.exact_method))) {
      c.exact = b.value;
      c.exact_method = b.method;
    }
  }
  if (c.lower > c.upper + kConsistencySlack) consistent = false;
  if (c.exact && (*c.exact < c.lower - kConsistencySlack || *c.exact > c.upper + kConsistencySlack))
    consistent = false;
}

}  // namespace

std::optional<FamilyMeta> recognise_family(const Graph& g) {
  int n = g.order();
  long long m = g.size();
  if (n == 0) return std::nullopt;
  std::optional<FamilySpec> spec;
  if (m == 0)
    spec = FamilySpec{FamilyTag::empty, {n}, {}, nullptr};
  else if (m == 1LL * n * (n - 1) / 2)
    spec = FamilySpec{FamilyTag::complete, {n}, {}, nullptr};
  else if (is_connected(g) && g.max_degree() <= 2) {
    if (m == n && n >= 3)
      spec = FamilySpec{FamilyTag::cycle, {n}, {}, nullptr};
    else if (m == n - 1)
      spec = FamilySpec{FamilyTag::path, {n}, {}, nullptr};
  }
  if (!spec) return std::nullopt;
  return gen_family(*spec).meta();
}

std::optional<double> BoundsReport::value_of(const std::string& method, BoundKind kind) const {
  std::optional<double> best;
  for (const auto& c : components)
    for (const auto& b : c.bounds)
      if (b.method == method && b.kind == kind) best = best ? std::min(*best, b.value) : b.value;
  return best;
}

BoundsReport bounds_report(const Graph& g, const ReportOptions& options) {
  if (g.order() == 0) throw InvalidParameter("bounds report needs at least one vertex");
  BoundsReport report;
  report.graph_id = options.graph_id;
  report.order = g.order();
  TwinReduction reduction = twin_reduce(g);
  report.reduced = reduction.graph;
  report.twin_mapping = reduction.mapping;
  bool untouched = reduction.graph.order() == g.order();
  auto parts = connected_components(report.reduced);
  bool single = parts.size() == 1;

  for (const auto& part : parts) {
    ComponentReport c;
    c.vertices = part;
    Graph h = single ? report.reduced : induced_subgraph(report.reduced, part);
    bool keep_meta = single && untouched && g.meta() && g.meta()->tag != FamilyTag::custom;
    if (!keep_meta) {
      if (auto meta = recognise_family(h)) h = h.with_meta(*meta);
    }
    c.graph = h;
    if (h.order() == 1) {
      c.bounds.push_back({"trivial", BoundKind::exact, 1.0, {{"reason", "single observable"}}});
      report.components.push_back(std::move(c));
      continue;
    }
    std::optional<Graph> root;
    if (untouched) root = component_root(g, part);
    if (!root && h.meta() && h.meta()->line_root) root = *h.meta()->line_root;
    auto tasks = component_tasks(c.graph, root, options);
    auto outcomes = run_all(tasks, options.limits.threads);
    for (auto& [bounds, failure] : outcomes) {
      for (auto& b : bounds) c.bounds.push_back(std::move(b));
      if (failure) c.failures.push_back(*failure);
    }
    report.components.push_back(std::move(c));
  }

  bool all_exact = true;
  report.lower = 1;
  report.upper = 1;
  for (auto& c : report.components) {
    summarise(c, report.consistent);
    report.lower = std::min(report.lower, c.lower);
    report.upper = std::min(report.upper, c.upper);
    all_exact = all_exact && c.exact.has_value();
  }
  if (all_exact) {
    for (const auto& c : report.components)
      if (!report.exact || *c.exact < *report.exact) {
        report.exact = c.exact;
        report.exact_method = c.exact_method;
      }
  }
  if (report.lower > report.upper + kConsistencySlack) report.consistent = false;
  return report;
}

nlohmann::json report_to_json(const BoundsReport& report) {
  nlohmann::json records = nlohmann::json::array();
  nlohmann::json failures = nlohmann::json::array();
  nlohmann::json components = nlohmann::json::array();
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    const auto& c = report.components[i];
    for (const auto& b : c.bounds) {
      nlohmann::json r = bound_to_json(b);
      r["component"] = i;
      records.push_back(r);
    }
    for (const auto& f : c.failures) failures.push_back({{"component", i}, {"method", f.method}, {"error", f.error}});
    nlohmann::json entry = {{"vertices", c.vertices}, {"order", c.graph.order()}, {"size", c.graph.size()},
                            {"lower", c.lower}, {"upper", c.upper}};
    entry["exact"] = c.exact ? nlohmann::json(*c.exact) : nlohmann::json(nullptr);
    if (c.exact) entry["exact_method"] = c.exact_method;
    components.push_back(entry);
  }
  nlohmann::json j = {{"graph_id", report.graph_id},
                      {"order", report.order},
                      {"reduced_order", report.reduced.order()},
                      {"twin_mapping", report.twin_mapping},
                      {"components", components},
                      {"records", records},
                      {"failures", failures},
                      {"lower", report.lower},
                      {"upper", report.upper},
                      {"consistent", report.consistent}};
  j["exact"] = report.exact ? nlohmann::json(*report.exact) : nlohmann::json(nullptr);
  if (report.exact) j["exact_method"] = report.exact_method;
  return j;
}

}  // namespace incompat
