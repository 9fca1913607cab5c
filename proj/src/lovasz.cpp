#include "incompat/lovasz.hpp"

#include <string>

#include "incompat/error.hpp"

namespace incompat {

sdp::Problem lovasz_problem(const Graph& g) {
  int n = g.order();
  sdp::Problem p;
  int blk = p.add_block(sdp::BlockKind::psd, n);
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) p.add_objective(blk, u, v, 1.0);
  int trace = p.add_constraint(1.0);
  for (int v = 0; v < n; ++v) p.add_entry(trace, blk, v, v, 1.0);
  for (const auto& e : g.edges()) {
    int c = p.add_constraint(0.0);
    p.add_entry(c, blk, e.u, e.v, 0.5);
  }
  sdp::StartPoint start;
  start.x = {Eigen::MatrixXd::Identity(n, n) / n};
  start.y = Eigen::VectorXd::Zero(1 + g.size());
  start.y(0) = n + 1;
  start.free_values = Eigen::VectorXd::Zero(0);
  start.z = {(n + 1.0) * Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Ones(n, n)};
  p.set_start(start);
  return p;
}

LovaszTheta lovasz_theta(const Graph& g, const Limits& limits, const sdp::Options& options) {
  int n = g.order();
  if (n > limits.lovasz_max_vertices)
    throw CapExceeded("Lovasz number is limited to " + std::to_string(limits.lovasz_max_vertices) +
                      " vertices");
  LovaszTheta result;
  if (n <= 1) {
    result.value = result.upper = n;
    result.certificate = Eigen::MatrixXd::Identity(n, n);
    return result;
  }
  sdp::Options opts = options;
  opts.max_variable_dimension = std::min(opts.max_variable_dimension, limits.sdp_max_variable_dim);
  sdp::Solution sol = sdp::solve(lovasz_problem(g), opts);
  result.value = sol.primal_value;
  result.upper = sol.dual_value;
  result.gap = sol.gap;
  result.status = sol.status;
  result.certificate = sol.x.front();
  result.iterations = sol.iterations;
  if (sol.status != sdp::Status::optimal)
    throw SolverFailure("Lovasz SDP ended with status " + sdp::status_name(sol.status) + " (bounds " +
                        std::to_string(sol.primal_value) + ", " + std::to_string(sol.dual_value) + ")");
  return result;
}

}  // namespace incompat
