#include "incompat/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace incompat {

Eigen::VectorXd eigenvalues_symmetric(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Eigen::VectorXd singular_values(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return {};
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues();
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (const auto& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1;
  return a;
}

SpectralSummary adjacency_spectrum(const Graph& g) {
  SpectralSummary summary;
  Eigen::VectorXd values = eigenvalues_symmetric(adjacency_matrix(g));
  for (double v : values) summary.magnitudes.push_back(std::abs(v));
  std::sort(summary.magnitudes.rbegin(), summary.magnitudes.rend());
  for (double v : summary.magnitudes) summary.energy += v;
  return summary;
}

double graph_energy(const Graph& g) { return adjacency_spectrum(g).energy; }

}  // namespace incompat
