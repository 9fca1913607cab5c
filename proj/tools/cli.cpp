#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "incompat/bounds.hpp"
#include "incompat/certificates.hpp"
#include "incompat/closed_form.hpp"
#include "incompat/error.hpp"
#include "incompat/generators.hpp"
#include "incompat/graph_io.hpp"
#include "incompat/invariants.hpp"
#include "incompat/isomorphism.hpp"
#include "incompat/joint_measurability.hpp"
#include "incompat/lovasz.hpp"
#include "incompat/orientation.hpp"
#include "incompat/realization.hpp"
#include "incompat/report.hpp"

namespace incompat::cli {

namespace {

struct GraphSource {
  std::string path;
  std::string family;
  std::vector<int> params;
  int n = -1;
  std::vector<int> intersections;
  bool line = false;

  void attach(CLI::App* app) {
    app->add_option("--graph", path, "graph file (text or .json)");
    app->add_option("--family", family, "generator family name");
    app->add_option("--params", params, "generator parameters")->delimiter(',');
    app->add_option("--n", n, "single generator parameter");
    app->add_option("--intersections", intersections, "merged Johnson intersection sizes")->delimiter(',');
    app->add_flag("--line", line, "take the line graph of the generated family");
  }

  FamilySpec spec() const {
    FamilySpec inner{parse_family(family), params, intersections, nullptr};
    if (inner.params.empty() && n >= 0) inner.params = {n};
    if (!line) return inner;
    return FamilySpec{FamilyTag::line_of, {}, {}, std::make_shared<FamilySpec>(inner)};
  }

  Graph resolve() const {
    if (!path.empty() && !family.empty()) throw InvalidParameter("give either --graph or --family, not both");
    if (!path.empty()) return load_graph(path);
    if (family.empty()) throw InvalidParameter("give --graph or --family");
    return gen_family(spec());
  }
};

std::string format_number(double v) {
  std::ostringstream s;
  s << std::setprecision(15) << v;
  return s.str();
}

std::string csv_value(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InvalidParameter("cannot write " + path);
  file << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::optional<double> try_value(const std::function<double()>& f) {
  try {
    return f();
  } catch (const CapExceeded&) {
    return std::nullopt;
  } catch (const SolverFailure&) {
    return std::nullopt;
  }
}

ObservableSet realize(const Graph& g, const std::string& kind, const Limits& limits) {
  if (kind == "minimal") return realize_minimal(g, limits);
  if (kind == "majorana") return realize_majorana(g);
  if (kind == "quadratic-line") return realize_quadratic_line(g);
  throw InvalidParameter("unknown realization '" + kind + "'");
}

// Path-cycle conjecture: eta(P_2k) = eta(P_2k+1) = eta(C_2k+2).
nlohmann::json conjecture_note(const Graph& g, double eta) {
  auto meta = recognise_family(g);
  if (!meta || meta->tag != FamilyTag::path || g.order() < 2) return nullptr;
  int cycle = 2 * (g.order() / 2) + 2;
  double predicted = cycle_value(cycle);
  return {{"statement", "eta(P_2k) = eta(P_2k+1) = eta(C_2k+2)"},
          {"cycle", cycle},
          {"predicted", predicted},
          {"difference", eta - predicted},
          {"consistent", std::abs(eta - predicted) <= 1e-3}};
}

std::string sweep_cycles(int from, int to, const Limits& limits) {
  if (from < 3 || from > to) throw InvalidParameter("cycle sweep needs 3 <= from <= to");
  std::ostringstream csv;
  csv << "schema,n,parity,eta,line_skew,lovasz_upper,fractional_lower,asymptotic\n";
  for (int n = from; n <= to; ++n) {
    Graph c = cycle_graph(n);
    double two_over_pi = 2 / std::numbers::pi;
    double asymptotic = n % 2 ? two_over_pi - std::numbers::pi / (6.0 * n * n)
                              : two_over_pi + std::numbers::pi / (3.0 * n * n);
    auto skew = try_value([&] { return eta_line_skew(c, limits).value; });
    auto lovasz = try_value([&] { return eta_upper_lovasz(c, limits).value; });
    auto fractional = try_value([&] { return eta_lower_fractional(c, limits).value; });
    csv << "cycles.v1," << n << ',' << (n % 2 ? "odd" : "even") << ',' << format_number(cycle_value(n)) << ','
        << csv_value(skew) << ',' << csv_value(lovasz) << ',' << csv_value(fractional) << ','
        << format_number(asymptotic) << '\n';
  }
  return csv.str();
}

std::string sweep_paths(int from, int to, bool exact, const Limits& limits) {
  if (from < 1 || from > to) throw InvalidParameter("path sweep needs 1 <= from <= to");
  std::ostringstream csv;
  csv << "schema,n,parity,lower,upper,fractional_lower,line_skew_upper,lovasz_upper,conjecture,exact_sdp\n";
  for (int n = from; n <= to; ++n) {
    Graph p = path_graph(n);
    auto [lower, upper] = path_interval(n);
    auto skew = try_value([&] { return eta_line_skew(path_graph(n + 1), limits).value; });
    auto lovasz = try_value([&] { return eta_upper_lovasz(p, limits).value; });
    auto fractional = try_value([&] { return eta_lower_fractional(p, limits).value; });
    std::optional<double> conjecture;
    if (n >= 2) conjecture = cycle_value(2 * (n / 2) + 2);
    std::optional<double> sdp_value;
    if (exact && n <= limits.exact_sdp_max_observables)
      sdp_value = try_value([&] {
        ExactEta e = eta_exact_sdp(realize_minimal(p, limits), limits);
        if (e.status != sdp::Status::optimal) throw SolverFailure("exact SDP did not converge");
        return e.value;
      });
    csv << "paths.v1," << n << ',' << (n % 2 ? "odd" : "even") << ',' << format_number(lower) << ','
        << format_number(upper) << ',' << csv_value(fractional) << ',' << csv_value(skew) << ','
        << csv_value(lovasz) << ',' << csv_value(conjecture) << ',' << csv_value(sdp_value) << '\n';
  }
  return csv.str();
}

nlohmann::json optimality_to_json(const OptimalityCheck& c) {
  nlohmann::json j = {{"verdict", verdict_name(c.verdict)},
                      {"degree_bound", c.degree_bound},
                      {"regular", c.regular},
                      {"reason", c.reason}};
  j["line_skew"] = c.line_skew_value ? nlohmann::json(*c.line_skew_value) : nlohmann::json(nullptr);
  j["gap"] = c.gap ? nlohmann::json(*c.gap) : nlohmann::json(nullptr);
  if (!c.certificate.is_null()) j["certificate"] = c.certificate;
  return j;
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw InvalidParameter("matrix must be a JSON array of rows");
  IntMatrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != j[0].size()) throw InvalidParameter("matrix rows differ in length");
    for (std::size_t k = 0; k < j[i].size(); ++k) m(i, k) = j[i][k].get<long long>();
  }
  return m;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Incompatibility robustness of binary observables from their anti-commutativity graph"};
  app.require_subcommand(1);
  app.fallthrough();

  Limits limits = Limits::from_environment();
  app.add_option("--threads", limits.threads, "worker threads");
  app.add_option("--max-classes", limits.max_switching_classes, "switching-class enumeration cap");
  app.add_option("--max-sdp-dim", limits.sdp_max_variable_dim, "SDP variable dimension cap");
  app.add_option("--max-signing", limits.signing_max_vertices, "signing enumeration cap (observables)");
  app.add_option("--max-qubits", limits.max_qubits, "qubit cap for explicit matrices");
  app.add_option("--max-exact-observables", limits.exact_sdp_max_observables, "exact SDP observable cap");
  app.add_option("--max-exact-dim", limits.exact_sdp_max_dimension, "exact SDP Hilbert-space dimension cap");

  std::string out_path;

  GraphSource gen_source;
  auto* gen = app.add_subcommand("gen", "generate a family member");
  gen_source.attach(gen);
  gen->add_option("--out", out_path, "output path (.json for JSON, text otherwise)");

  GraphSource inv_source;
  auto* invariants = app.add_subcommand("invariants", "alpha, omega, chi, chi_f and theta");
  inv_source.attach(invariants);
  invariants->add_option("--out", out_path);

  GraphSource bounds_source;
  ReportOptions report_options;
  bool no_search = false;
  auto* bounds = app.add_subcommand("bounds", "certified bounds report");
  bounds_source.attach(bounds);
  bounds->add_flag("--exact-sdp", report_options.exact_sdp, "include the joint-measurability SDP");
  bounds->add_flag("--no-search", no_search, "skip the induced-subgraph search");
  bounds->add_option("--id", report_options.graph_id, "graph identifier in the report");
  bounds->add_option("--out", out_path);

  GraphSource exact_source;
  std::string realization = "minimal";
  std::string povm_path;
  auto* exact = app.add_subcommand("eta-exact", "robustness by the joint-measurability SDP");
  exact_source.attach(exact);
  exact->add_option("--realization", realization, "minimal | majorana");
  exact->add_option("--povm-out", povm_path, "binary export of the parent POVM");
  exact->add_option("--out", out_path);

  GraphSource skew_source;
  std::string orientation_path;
  auto* skew = app.add_subcommand("skew", "maximum skew energy over switching classes");
  skew_source.attach(skew);
  skew->add_option("--orientation-out", orientation_path, "witness orientation as JSON");
  skew->add_option("--out", out_path);

  GraphSource realize_source;
  std::string realize_kind = "minimal";
  auto* realize_cmd = app.add_subcommand("realize", "observables realising the graph");
  realize_source.attach(realize_cmd);
  realize_cmd->add_option("--kind", realize_kind, "minimal | majorana | quadratic-line (graph is the root)");
  realize_cmd->add_option("--out", out_path);

  GraphSource certify_source;
  std::string matrix_path;
  bool optimal = false;
  std::vector<int> hadamard_size;
  auto* certify = app.add_subcommand("certify", "matrix certificates and optimal incompatibility");
  certify_source.attach(certify);
  certify->add_option("--matrix", matrix_path, "JSON integer matrix to classify");
  certify->add_flag("--optimal", optimal, "check whether the line graph of the given root is optimal");
  certify->add_option("--partial-hadamard", hadamard_size, "search r,s")->delimiter(',')->expected(2);
  certify->add_option("--out", out_path);

  std::string sweep_family;
  int from = 3, to = 12;
  bool sweep_exact = false;
  auto* sweep = app.add_subcommand("sweep", "CSV sweeps over cycles or paths");
  sweep->add_option("family", sweep_family, "cycles | paths")->required();
  sweep->add_option("--from", from);
  sweep->add_option("--to", to);
  sweep->add_flag("--exact-sdp", sweep_exact, "exact SDP column for paths");
  sweep->add_option("--out", out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (gen->parsed()) {
    Graph g = gen_source.resolve();
    if (out_path.empty())
      out << dump(graph_to_json(g));
    else
      save_graph(out_path, g);
  } else if (invariants->parsed()) {
    emit(dump(invariants_to_json(invariant_report(inv_source.resolve(), limits))), out_path, out);
  } else if (bounds->parsed()) {
    report_options.limits = limits;
    report_options.subgraph_search = !no_search;
    emit(dump(report_to_json(bounds_report(bounds_source.resolve(), report_options))), out_path, out);
  } else if (exact->parsed()) {
    Graph g = exact_source.resolve();
    ObservableSet obs = realize(g, realization, limits);
    ExactEta result = eta_exact_sdp(obs, limits);
    auto matrices = observable_matrices(obs, limits);
    ParentCheck check = check_parent(result.parent, matrices);
    nlohmann::json j = {{"eta", result.value},
                        {"upper", result.upper},
                        {"gap", result.gap},
                        {"status", sdp::status_name(result.status)},
                        {"iterations", result.iterations},
                        {"observables", obs.size()},
                        {"dimension", obs.dimension()},
                        {"parent", {{"min_eigenvalue", check.min_eigenvalue},
                                    {"completeness_residual", check.completeness_residual},
                                    {"marginal_residual", check.marginal_residual},
                                    {"valid", check.valid()}}}};
    j["conjecture"] = conjecture_note(g, result.value);
    emit(dump(j), out_path, out);
    if (!povm_path.empty()) write_parent_binary(povm_path, result.parent);
    if (result.status != sdp::Status::optimal)
      throw SolverFailure("exact SDP ended with status " + sdp::status_name(result.status));
  } else if (skew->parsed()) {
    Graph g = skew_source.resolve();
    SwitchingClasses classes(g, limits);
    MaxSkewEnergy best = max_skew_energy(g, limits);
    nlohmann::json orientation = orientation_to_json(classes, best.pattern);
    auto spectrum = skew_spectrum(best.witness);
    nlohmann::json j = {{"max_skew_energy", best.value},
                        {"classes", best.classes},
                        {"pattern", classes.pattern_bits(best.pattern)},
                        {"singular_values", spectrum.magnitudes},
                        {"eta_line", best.value / (2.0 * g.size())},
                        {"orientation", orientation}};
    auto transitive = known_edge_transitive(g, limits);
    j["edge_transitive"] = transitive ? nlohmann::json(*transitive) : nlohmann::json(nullptr);
    emit(dump(j), out_path, out);
    if (!orientation_path.empty()) emit(dump(orientation), orientation_path, out);
  } else if (realize_cmd->parsed()) {
    emit(dump(observables_to_json(realize(realize_source.resolve(), realize_kind, limits))), out_path, out);
  } else if (certify->parsed()) {
    int modes = !matrix_path.empty() + optimal + !hadamard_size.empty();
    if (modes != 1) throw InvalidParameter("certify needs exactly one of --matrix, --optimal, --partial-hadamard");
    if (!matrix_path.empty()) {
      std::ifstream in(matrix_path);
      if (!in) throw InvalidParameter("cannot read " + matrix_path);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw InvalidParameter(std::string("malformed matrix JSON: ") + e.what());
      }
      emit(dump(certificates_to_json(matrix_certificates(matrix_from_json(j)))), out_path, out);
    } else if (optimal) {
      emit(dump(optimality_to_json(optimal_incompatibility_check(certify_source.resolve(), limits))), out_path,
           out);
    } else {
      int r = hadamard_size[0], s = hadamard_size[1];
      if (r < 1 || s < 1 || r > s) throw InvalidParameter("partial Hadamard search needs 1 <= r <= s");
      auto search = search_partial_hadamard(r, s);
      nlohmann::json j = {{"rows", r}, {"cols", s}, {"examined", search.examined},
                          {"normalised", search.normalised}, {"found", search.found.has_value()}};
      if (search.found) {
        std::vector<std::vector<long long>> rows(r);
        for (int i = 0; i < r; ++i)
          for (int k = 0; k < s; ++k) rows[i].push_back((*search.found)(i, k));
        j["matrix"] = rows;
      }
      emit(dump(j), out_path, out);
    }
  } else if (sweep->parsed()) {
    if (sweep_family == "cycles")
      emit(sweep_cycles(from, to, limits), out_path, out);
    else if (sweep_family == "paths")
      emit(sweep_paths(from, to, sweep_exact, limits), out_path, out);
    else
      throw InvalidParameter("unknown sweep family '" + sweep_family + "'");
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    err << "limit: " << e.what() << '\n';
    return 3;
  } catch (const SolverFailure& e) {
    err << "solver: " << e.what() << '\n';
    return 4;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return 1;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace incompat::cli
