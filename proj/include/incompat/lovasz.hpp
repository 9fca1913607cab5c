#pragma once

#include "incompat/graph.hpp"
#include "incompat/limits.hpp"
#include "incompat/sdp.hpp"

namespace incompat {

struct LovaszTheta {
  double value = 0;   // primal objective
  double upper = 0;   // dual objective, a certified upper bound up to solver tolerance
  double gap = 0;     // upper - value
  sdp::Status status = sdp::Status::optimal;
  Eigen::MatrixXd certificate;  // primal matrix X
  int iterations = 0;
};

/** max <J,X> s.t. tr X = 1, X_uv = 0 on edges, X PSD. Starts from a strictly feasible pair. */
sdp::Problem lovasz_problem(const Graph& g);

LovaszTheta lovasz_theta(const Graph& g, const Limits& limits = {}, const sdp::Options& options = {});

}  // namespace incompat
