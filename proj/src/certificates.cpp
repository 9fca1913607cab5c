#include "incompat/certificates.hpp"

#include <cmath>
#include <string>

#include "incompat/error.hpp"

namespace incompat {

namespace {

bool is_scaled_identity(const IntMatrix& g, long long scale) {
  return g == IntMatrix::Identity(g.rows(), g.cols()) * scale;
}

bool all_signs(const IntMatrix& m) {
  return (m.array().abs() == 1).all();
}

}  // namespace

IntMatrix to_integer_matrix(const Eigen::MatrixXd& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      double r = std::round(m(i, j));
      if (std::abs(m(i, j) - r) > 1e-9 || std::abs(r) > 1)
        throw InvalidParameter("matrix entry is not in {0,+1,-1}");
      out(i, j) = static_cast<long long>(r);
    }
  return out;
}

CertificateReport matrix_certificates(const IntMatrix& m) {
  if ((m.array().abs() > 1).any()) throw InvalidParameter("certificate matrices need entries in {0,+1,-1}");
  CertificateReport report;
  report.rows = static_cast<int>(m.rows());
  report.cols = static_cast<int>(m.cols());
  report.gram = m.transpose() * m;
  IntMatrix row_gram = m * m.transpose();
  bool square = m.rows() == m.cols();
  long long n = m.rows();
  if (square && n > 0) {
    long long k = report.gram(0, 0);
    if (is_scaled_identity(report.gram, k)) {
      report.weighing = true;
      report.weight = static_cast<int>(k);
    }
    bool zero_diagonal = (m.diagonal().array() == 0).all();
    IntMatrix off = m;
    off.diagonal().setOnes();
    report.conference = zero_diagonal && all_signs(off) && is_scaled_identity(row_gram, n - 1);
    report.skew_conference = report.conference && m.transpose() == -m;
    report.hadamard = all_signs(m) && is_scaled_identity(row_gram, n);
  }
  if (m.rows() > 0 && m.rows() <= m.cols())
    report.partial_hadamard = all_signs(m) && is_scaled_identity(row_gram, m.cols());
  return report;
}

PartialHadamardSearch search_partial_hadamard(int r, int s) {
  if (r < 1 || s < 1) throw InvalidParameter("partial Hadamard search needs r,s >= 1");
  PartialHadamardSearch result;
  result.normalised = r * s > 24;
  int free_bits = result.normalised ? (r - 1) * (s - 1) : r * s;
  if (free_bits > 40) throw CapExceeded("partial Hadamard search space exceeds 2^40");
  IntMatrix m = IntMatrix::Ones(r, s);
  for (unsigned long long pattern = 0; pattern < (1ULL << free_bits); ++pattern) {
    int bit = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < s; ++j) {
        if (result.normalised && (i == 0 || j == 0)) continue;
        m(i, j) = ((pattern >> bit++) & 1ULL) ? -1 : 1;
      }
    ++result.examined;
    IntMatrix g = m * m.transpose();
    if (is_scaled_identity(g, s)) {
      result.found = m;
      break;
    }
  }
  return result;
}

nlohmann::json certificates_to_json(const CertificateReport& report) {
  nlohmann::json j;
  j["rows"] = report.rows;
  j["cols"] = report.cols;
  j["weighing"] = report.weighing;
  j["weight"] = report.weight;
  j["conference"] = report.conference;
  j["skew_conference"] = report.skew_conference;
  j["hadamard"] = report.hadamard;
  j["partial_hadamard"] = report.partial_hadamard;
  nlohmann::json gram = nlohmann::json::array();
  for (Eigen::Index i = 0; i < report.gram.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < report.gram.cols(); ++c) row.push_back(report.gram(i, c));
    gram.push_back(row);
  }
  j["gram"] = gram;
  return j;
}

}  // namespace incompat
