#include "incompat/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "incompat/error.hpp"

namespace incompat {

namespace {

nlohmann::json meta_to_json(const FamilyMeta& meta) {
  nlohmann::json j;
  j["family"] = family_name(meta.tag);
  j["params"] = meta.params;
  if (!meta.intersections.empty()) j["L"] = meta.intersections;
  if (meta.vertex_transitive) j["vertex_transitive"] = *meta.vertex_transitive;
  if (meta.edge_transitive) j["edge_transitive"] = *meta.edge_transitive;
  if (meta.bipartite) j["bipartite"] = *meta.bipartite;
  if (meta.regular_degree) j["regular_degree"] = *meta.regular_degree;
  if (meta.line_root) j["line_root"] = graph_to_json(*meta.line_root);
  return j;
}

FamilyMeta meta_from_json(const nlohmann::json& j) {
  FamilyMeta meta;
  meta.tag = parse_family(j.at("family").get<std::string>());
  if (j.contains("params")) meta.params = j.at("params").get<std::vector<int>>();
  if (j.contains("L")) meta.intersections = j.at("L").get<std::vector<int>>();
  if (j.contains("vertex_transitive")) meta.vertex_transitive = j.at("vertex_transitive").get<bool>();
  if (j.contains("edge_transitive")) meta.edge_transitive = j.at("edge_transitive").get<bool>();
  if (j.contains("bipartite")) meta.bipartite = j.at("bipartite").get<bool>();
  if (j.contains("regular_degree")) meta.regular_degree = j.at("regular_degree").get<int>();
  if (j.contains("line_root"))
    meta.line_root = std::make_shared<const Graph>(graph_from_json(j.at("line_root")));
  return meta;
}

}  // namespace

Graph read_graph_text(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0)
    throw InvalidParameter("graph text: first line must be \"n m\" with non-negative integers");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v))
      throw InvalidParameter("graph text: expected " + std::to_string(m) + " edges, read " +
                             std::to_string(i));
    edges.push_back({u, v});
  }
  std::string rest;
  if (in >> rest) throw InvalidParameter("graph text: trailing content after edge list");
  return Graph(static_cast<int>(n), std::move(edges));
}

void write_graph_text(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({e.u, e.v});
  if (g.meta()) j["meta"] = meta_to_json(*g.meta());
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidParameter("graph JSON: edges must be pairs");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    std::optional<FamilyMeta> meta;
    if (j.contains("meta") && !j.at("meta").is_null()) meta = meta_from_json(j.at("meta"));
    return Graph(n, std::move(edges), std::move(meta));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("graph JSON: ") + e.what());
  }
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidParameter("graph JSON: " + std::string(e.what()));
    }
    return graph_from_json(j);
  }
  std::istringstream stream(text);
  return read_graph_text(stream);
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InvalidParameter("cannot write graph file '" + path + "'");
  bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  if (json) {
    out << graph_to_json(g).dump(2) << '\n';
  } else {
    write_graph_text(out, g);
  }
}

}  // namespace incompat
