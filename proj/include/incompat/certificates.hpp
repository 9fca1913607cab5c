#pragma once

#include <Eigen/Dense>
#include <json.hpp>
#include <optional>

namespace incompat {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

struct CertificateReport {
  int rows = 0;
  int cols = 0;
  bool weighing = false;      // square, W^T W = weight * I
  int weight = 0;
  bool conference = false;    // square, zero diagonal, +-1 elsewhere, C C^T = (n-1) I
  bool skew_conference = false;
  bool hadamard = false;      // square, +-1 entries, H H^T = n I
  bool partial_hadamard = false;  // r <= s, +-1 entries, C C^T = s I_r
  IntMatrix gram;             // M^T M
};

/** Exact integer checks; throws InvalidParameter unless all entries are in {0, +-1}. */
CertificateReport matrix_certificates(const IntMatrix& m);

/** Rounds a matrix with entries in {0,+-1} up to 1e-9. */
IntMatrix to_integer_matrix(const Eigen::MatrixXd& m);

struct PartialHadamardSearch {
  std::optional<IntMatrix> found;
  unsigned long long examined = 0;
  bool normalised = false;
};

/**
 * Looks for an r x s partial Hadamard matrix. All 2^(rs) sign matrices are
 * examined when rs <= 24; otherwise first row and column are normalised to +1.
 */
PartialHadamardSearch search_partial_hadamard(int r, int s);

nlohmann::json certificates_to_json(const CertificateReport& report);

}  // namespace incompat
