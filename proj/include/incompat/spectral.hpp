#pragma once

#include <Eigen/Dense>
#include <vector>

#include "incompat/graph.hpp"

namespace incompat {

Eigen::VectorXd eigenvalues_symmetric(const Eigen::MatrixXd& m);
Eigen::VectorXd singular_values(const Eigen::MatrixXd& m);

Eigen::MatrixXd adjacency_matrix(const Graph& g);

enum class MatrixKind { adjacency, skew };

struct SpectralSummary {
  std::vector<double> magnitudes;  // descending
  double energy = 0;
  MatrixKind kind = MatrixKind::adjacency;
};

SpectralSummary adjacency_spectrum(const Graph& g);

/** Sum of absolute adjacency eigenvalues. */
double graph_energy(const Graph& g);

}  // namespace incompat
