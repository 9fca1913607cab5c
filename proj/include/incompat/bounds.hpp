#pragma once

#include <Eigen/Dense>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "incompat/graph.hpp"
#include "incompat/limits.hpp"
#include "incompat/majorana.hpp"
#include "incompat/sdp.hpp"

namespace incompat {

enum class BoundKind { lower, upper, exact };

std::string kind_name(BoundKind kind);

/** One named bound on the robustness with an inline certificate. */
struct Bound {
  std::string method;
  BoundKind kind = BoundKind::upper;
  double value = 0;
  nlohmann::json certificate = nlohmann::json::object();
  bool heuristic = false;
};

/** sqrt(theta/|V|), using the dual objective of the Lovasz SDP. */
Bound eta_upper_lovasz(const Graph& g, const Limits& limits = {});

enum class SubgraphStrategy { clique, search };

/**
 * Clique strategy: omega^-1/2. Search strategy: minimum of sqrt(theta(G[S])/|S|)
 * over a maximum clique, G itself and all graphs with one or two vertices deleted.
 */
Bound eta_upper_subgraph(const Graph& g, SubgraphStrategy strategy, const Limits& limits = {});

/** 1/chi_f from the exact fractional colouring. */
Bound eta_lower_fractional(const Graph& g, const Limits& limits = {});

/** 1/chi, never better than the fractional bound. */
Bound eta_lower_chromatic(const Graph& g, const Limits& limits = {});

struct SigningResult {
  double bound = 0;  // max norm / n
  double max_norm = 0;
  std::vector<int> signs;
};

/** Exact maximum over all sign vectors (first sign fixed) of ||sum a_v A_v|| / n. */
SigningResult eta_upper_signing(const std::vector<Eigen::MatrixXcd>& observables);
SigningResult eta_upper_signing(const ObservableSet& obs, const Limits& limits = {});

struct PsiEstimate {
  double value = 0;                   // ||sum b_v A_v||^2 for the best unit vector found
  std::vector<double> coefficients;  // that unit vector
};

/** Projected ascent from seeded random unit vectors and the best signing vector / sqrt(n). */
PsiEstimate psi_estimate(const ObservableSet& obs, int restarts = 32, std::uint64_t seed = 1,
                         const Limits& limits = {});

/** E_s^max(root)/(2m); exact when the root is edge-transitive, otherwise an upper bound. */
Bound eta_line_skew(const Graph& root, const Limits& limits = {});

/** E(root)/(2m); requires a bipartite, edge-transitive root. */
Bound eta_lower_bipartite_energy(const Graph& root, const Limits& limits = {});

/** (n/2m) sqrt(Delta) for the line graph of root. */
Bound eta_upper_degree(const Graph& root);

enum class Verdict { optimal, not_optimal, inconclusive };

std::string verdict_name(Verdict verdict);

struct OptimalityCheck {
  Verdict verdict = Verdict::inconclusive;
  double degree_bound = 0;
  bool regular = false;
  std::optional<double> line_skew_value;
  std::optional<double> gap;
  nlohmann::json certificate;  // weighing orientation, when found
  std::string reason;
};

/** Decides whether L(root) saturates the degree bound, with a weighing-matrix certificate. */
OptimalityCheck optimal_incompatibility_check(const Graph& root, const Limits& limits = {});

/** Edge-transitivity from metadata, falling back to the exhaustive check when small. */
std::optional<bool> known_edge_transitive(const Graph& g, const Limits& limits = {});

nlohmann::json bound_to_json(const Bound& b);

}  // namespace incompat
