#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "incompat/limits.hpp"
#include "incompat/majorana.hpp"
#include "incompat/sdp.hpp"

namespace incompat {

/**
 * Effects E(a) indexed by outcome o, where a_v = +1 when bit v of o is clear.
 */
struct ParentPovm {
  int observables = 0;
  int dimension = 0;
  double eta = 0;
  std::vector<Eigen::MatrixXcd> effects;
};

struct ParentCheck {
  double min_eigenvalue = 0;
  double completeness_residual = 0;
  double marginal_residual = 0;

  bool valid(double positivity = 1e-8, double completeness = 1e-8, double marginal = 1e-7) const {
    return min_eigenvalue >= -positivity && completeness_residual <= completeness &&
           marginal_residual <= marginal;
  }
};

/** Max-norm residuals of positivity, completeness and the (1 +- eta A_v)/2 marginals. */
ParentCheck check_parent(const ParentPovm& povm, const std::vector<Eigen::MatrixXcd>& observables);

/** E(a) = 2^-n (1 + eta sum_v a_v A_v), a parent for pairwise anti-commuting A_v at eta <= n^-1/2. */
ParentPovm uniform_parent(const std::vector<Eigen::MatrixXcd>& observables, double eta);

struct ExactEta {
  double value = 0;  // primal eta
  double upper = 0;  // dual objective
  double gap = 0;
  sdp::Status status = sdp::Status::optimal;
  int iterations = 0;
  ParentPovm parent;
};

/** Largest eta for which the noisy observables have a parent POVM, by SDP. */
ExactEta eta_exact_sdp(const std::vector<Eigen::MatrixXcd>& observables, const Limits& limits = {},
                       const sdp::Options& options = {});
ExactEta eta_exact_sdp(const ObservableSet& obs, const Limits& limits = {}, const sdp::Options& options = {});

/** Binary export: int64 n, int64 d, then 2^n row-major d x d complex doubles. */
void write_parent_binary(const std::string& path, const ParentPovm& povm);
ParentPovm read_parent_binary(const std::string& path);

}  // namespace incompat
