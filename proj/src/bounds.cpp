#include "incompat/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "incompat/certificates.hpp"
#include "incompat/error.hpp"
#include "incompat/graph_ops.hpp"
#include "incompat/invariants.hpp"
#include "incompat/isomorphism.hpp"
#include "incompat/lovasz.hpp"
#include "incompat/orientation.hpp"
#include "incompat/spectral.hpp"

namespace incompat {

namespace {

double spectral_norm(const Eigen::MatrixXcd& h) {
  Eigen::VectorXd values = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h, Eigen::EigenvaluesOnly).eigenvalues();
  return std::max(std::abs(values(0)), std::abs(values(values.size() - 1)));
}

int non_isolated(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += g.degree(v) > 0;
  return count;
}

void require_edges(const Graph& root) {
  if (root.size() == 0) throw InvalidParameter("line-graph bounds need a root with at least one edge");
}

}  // namespace

std::string kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::exact: return "exact";
  }
  return "unknown";
}

std::string verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::optimal: return "optimal";
    case Verdict::not_optimal: return "not-optimal";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

nlohmann::json bound_to_json(const Bound& b) {
  nlohmann::json j = {{"method", b.method}, {"kind", kind_name(b.kind)}, {"value", b.value},
                      {"certificate", b.certificate}};
  if (b.heuristic) j["heuristic"] = true;
  return j;
}

Bound eta_upper_lovasz(const Graph& g, const Limits& limits) {
  if (g.order() == 0) throw InvalidParameter("robustness needs at least one vertex");
  auto theta = lovasz_theta(g, limits);
  double top = std::max(theta.value, theta.upper);
  return {"lovasz", BoundKind::upper, std::sqrt(top / g.order()),
          {{"theta", theta.value}, {"theta_dual", theta.upper}, {"gap", theta.gap}}};
}

Bound eta_upper_subgraph(const Graph& g, SubgraphStrategy strategy, const Limits& limits) {
  if (g.order() == 0) throw InvalidParameter("robustness needs at least one vertex");
  auto clique = maximum_clique(g, limits);
  Bound best{"clique", BoundKind::upper, 1.0 / std::sqrt(static_cast<double>(clique.size())),
             {{"vertices", clique}}};
  if (strategy == SubgraphStrategy::clique) return best;
  if (g.order() > limits.subgraph_search_max_vertices)
    throw CapExceeded("subgraph search is limited to " + std::to_string(limits.subgraph_search_max_vertices) +
                      " vertices");
  best.method = "subgraph-search";
  best.heuristic = true;
  int n = g.order();
  auto consider = [&](const std::vector<int>& keep) {
    if (keep.empty()) return;
    Graph sub = induced_subgraph(g, keep);
    auto theta = lovasz_theta(sub, limits);
    double value = std::sqrt(std::max(theta.value, theta.upper) / keep.size());
    if (value < best.value - 1e-12) {
      best.value = value;
      best.certificate = {{"vertices", keep}, {"theta", theta.upper}};
    }
  };
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  consider(all);
  for (int a = 0; a < n; ++a) {
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
      if (v != a) keep.push_back(v);
    consider(keep);
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> keep2;
      for (int v = 0; v < n; ++v)
        if (v != a && v != b) keep2.push_back(v);
      consider(keep2);
    }
  }
  return best;
}

Bound eta_lower_fractional(const Graph& g, const Limits& limits) {
  if (g.order() == 0) throw InvalidParameter("robustness needs at least one vertex");
  auto chi_f = fractional_chromatic(g, limits);
  nlohmann::json cert = {{"p", chi_f.numerator}, {"q", chi_f.denominator}, {"verified", chi_f.verified}};
  if (chi_f.verified) {
    cert["a"] = chi_f.palette;
    cert["b"] = chi_f.per_vertex;
  }
  return {"fractional", BoundKind::lower, double(chi_f.denominator) / double(chi_f.numerator), cert};
}

Bound eta_lower_chromatic(const Graph& g, const Limits& limits) {
  if (g.order() == 0) throw InvalidParameter("robustness needs at least one vertex");
  auto coloring = chromatic_number(g, limits);
  return {"chromatic", BoundKind::lower, 1.0 / coloring.colors,
          {{"chi", coloring.colors}, {"coloring", coloring.color}}};
}

SigningResult eta_upper_signing(const std::vector<Eigen::MatrixXcd>& observables) {
  int n = static_cast<int>(observables.size());
  if (n == 0) throw InvalidParameter("signing bound needs at least one observable");
  if (n > 40) throw CapExceeded("signing enumeration is limited to 40 observables");
  std::vector<int> signs(n, 1);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(observables[0].rows(), observables[0].cols());
  for (const auto& a : observables) sum += a;
  SigningResult result;
  result.max_norm = spectral_norm(sum);
  result.signs = signs;
  std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t k = 1; k < total; ++k) {
    int v = std::countr_zero(k) + 1;
    sum -= 2.0 * signs[v] * observables[v];
    signs[v] = -signs[v];
    double norm = spectral_norm(sum);
    if (norm > result.max_norm + 1e-12) {
      result.max_norm = norm;
      result.signs = signs;
    }
  }
  result.bound = result.max_norm / n;
  return result;
}

SigningResult eta_upper_signing(const ObservableSet& obs, const Limits& limits) {
  if (obs.size() > limits.signing_max_vertices)
    throw CapExceeded("signing enumeration is limited to " + std::to_string(limits.signing_max_vertices) +
                      " observables");
  return eta_upper_signing(observable_matrices(obs, limits));
}

PsiEstimate psi_estimate(const ObservableSet& obs, int restarts, std::uint64_t seed, const Limits& limits) {
  auto mats = observable_matrices(obs, limits);
  int n = static_cast<int>(mats.size());
  if (n == 0) throw InvalidParameter("psi estimate needs at least one observable");
  auto ascend = [&](Eigen::VectorXd b) {
    double previous = -1;
    for (int iter = 0; iter < 1000; ++iter) {
      Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(mats[0].rows(), mats[0].cols());
      for (int v = 0; v < n; ++v) h += b(v) * mats[v];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
      const auto& values = solver.eigenvalues();
      bool top = std::abs(values(values.size() - 1)) >= std::abs(values(0));
      double lambda = top ? values(values.size() - 1) : values(0);
      Eigen::VectorXcd psi = solver.eigenvectors().col(top ? values.size() - 1 : 0);
      double value = lambda * lambda;
      if (value <= previous + 1e-14) return std::make_pair(std::max(value, previous), b);
      previous = value;
      Eigen::VectorXd g(n);
      for (int v = 0; v < n; ++v) g(v) = (psi.adjoint() * mats[v] * psi)(0, 0).real();
      if (lambda < 0) g = -g;
      if (g.norm() < 1e-15) return std::make_pair(value, b);
      b = g / g.norm();
    }
    return std::make_pair(previous, b);
  };
  std::vector<Eigen::VectorXd> starts;
  if (n <= limits.signing_max_vertices) {
    auto signing = eta_upper_signing(mats);
    Eigen::VectorXd b(n);
    for (int v = 0; v < n; ++v) b(v) = signing.signs[v] / std::sqrt(double(n));
    starts.push_back(b);
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (int r = 0; r < restarts; ++r) {
    Eigen::VectorXd b(n);
    for (int v = 0; v < n; ++v) b(v) = normal(rng);
    if (b.norm() < 1e-12) b(0) = 1;
    starts.push_back(b / b.norm());
  }
  PsiEstimate best;
  best.value = -1;
  for (const auto& start : starts) {
    auto [value, b] = ascend(start);
    if (value > best.value + 1e-12) {
      best.value = value;
      best.coefficients.assign(b.data(), b.data() + n);
    }
  }
  return best;
}

std::optional<bool> known_edge_transitive(const Graph& g, const Limits& limits) {
  if (g.meta() && g.meta()->edge_transitive) return g.meta()->edge_transitive;
  if (g.order() <= limits.transitivity_max_vertices) return check_transitivity(g, limits).edge_transitive;
  return std::nullopt;
}

Bound eta_line_skew(const Graph& root, const Limits& limits) {
  require_edges(root);
  auto best = max_skew_energy(root, limits);
  SwitchingClasses classes(root, limits);
  auto transitive = known_edge_transitive(root, limits);
  double value = best.value / (2.0 * root.size());
  nlohmann::json cert = {{"max_skew_energy", best.value},
                         {"classes", best.classes},
                         {"orientation", orientation_to_json(classes, best.pattern)}};
  cert["edge_transitive"] = transitive ? nlohmann::json(*transitive) : nlohmann::json(nullptr);
  return {"line-skew", transitive == true ? BoundKind::exact : BoundKind::upper, value, cert};
}

Bound eta_lower_bipartite_energy(const Graph& root, const Limits& limits) {
  require_edges(root);
  if (!is_bipartite(root)) throw InvalidParameter("bipartite energy bound needs a bipartite root");
  if (known_edge_transitive(root, limits) != true)
    throw InvalidParameter("bipartite energy bound needs an edge-transitive root");
  double energy = graph_energy(root);
  return {"bipartite-energy", BoundKind::lower, energy / (2.0 * root.size()), {{"energy", energy}}};
}

Bound eta_upper_degree(const Graph& root) {
  require_edges(root);
  int n = non_isolated(root);
  double value = n * std::sqrt(double(root.max_degree())) / (2.0 * root.size());
  return {"degree", BoundKind::upper, std::min(1.0, value),
          {{"vertices", n}, {"edges", root.size()}, {"max_degree", root.max_degree()}}};
}

OptimalityCheck optimal_incompatibility_check(const Graph& root, const Limits& limits) {
  require_edges(root);
  OptimalityCheck check;
  int n = non_isolated(root);
  int delta = root.max_degree();
  check.degree_bound = n * std::sqrt(double(delta)) / (2.0 * root.size());
  bool regular = true;
  for (int v = 0; v < root.order(); ++v)
    if (root.degree(v) != 0 && root.degree(v) != delta) regular = false;
  check.regular = regular;
  if (!regular) {
    check.verdict = Verdict::not_optimal;
    check.reason = "root is not regular";
    return check;
  }
  std::optional<SwitchingClasses> classes;
  try {
    classes.emplace(root, limits);
  } catch (const CapExceeded& e) {
    check.verdict = Verdict::inconclusive;
    check.reason = e.what();
    return check;
  }
  std::optional<std::uint64_t> weighing;
  any_class(*classes, [&](std::uint64_t pattern, const Orientation& o) {
    IntMatrix s = to_integer_matrix(o.skew_matrix());
    IntMatrix gram = s.transpose() * s;
    for (int v = 0; v < root.order(); ++v)
      if (root.degree(v) == 0) gram(v, v) = delta;
    if (gram == IntMatrix::Identity(gram.rows(), gram.cols()) * delta) {
      weighing = pattern;
      return true;
    }
    return false;
  });
  auto best = max_skew_energy(root, limits);
  check.line_skew_value = best.value / (2.0 * root.size());
  if (!weighing) {
    check.verdict = Verdict::not_optimal;
    check.gap = check.degree_bound - *check.line_skew_value;
    check.reason = "no switching class gives a weighing matrix";
    return check;
  }
  check.certificate = orientation_to_json(*classes, *weighing);
  auto transitive = known_edge_transitive(root, limits);
  if (transitive == true) {
    check.verdict = Verdict::optimal;
    check.gap = 0.0;
    check.reason = "weighing orientation on an edge-transitive root";
  } else {
    check.verdict = Verdict::inconclusive;
    check.reason = transitive ? "weighing orientation found but the root is not edge-transitive"
                              : "weighing orientation found; edge-transitivity unknown";
  }
  return check;
}

}  // namespace incompat
