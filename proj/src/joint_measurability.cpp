#include "incompat/joint_measurability.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>

#include "incompat/error.hpp"

namespace incompat {

namespace {

using cd = std::complex<double>;

bool plus_outcome(int outcome, int v) { return ((outcome >> v) & 1) == 0; }

struct HermitianBasisElement {
  int p;
  int q;
  cd value;  // entry at (p,q); (q,p) holds the conjugate
};

std::vector<HermitianBasisElement> hermitian_basis(int d) {
  std::vector<HermitianBasisElement> basis;
  for (int p = 0; p < d; ++p) basis.push_back({p, p, 1.0});
  for (int p = 0; p < d; ++p)
    for (int q = p + 1; q < d; ++q) {
      basis.push_back({p, q, 1.0});
      basis.push_back({p, q, cd(0, 1)});
    }
  return basis;
}

// trace(B M) for the basis element B.
double trace_with(const HermitianBasisElement& b, const Eigen::MatrixXcd& m) {
  if (b.p == b.q) return (b.value * m(b.p, b.p)).real();
  return 2.0 * (b.value * m(b.q, b.p)).real();
}

}  // namespace

ParentCheck check_parent(const ParentPovm& povm, const std::vector<Eigen::MatrixXcd>& observables) {
  int n = povm.observables, d = povm.dimension;
  if (static_cast<int>(observables.size()) != n || static_cast<int>(povm.effects.size()) != (1 << n))
    throw InvalidParameter("parent POVM does not match the observables");
  ParentCheck check;
  check.min_eigenvalue = std::numeric_limits<double>::infinity();
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& e : povm.effects) {
    Eigen::MatrixXcd h = 0.5 * (e + e.adjoint());
    double lowest = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h, Eigen::EigenvaluesOnly).eigenvalues()(0);
    check.min_eigenvalue = std::min(check.min_eigenvalue, lowest);
    check.min_eigenvalue = std::min(check.min_eigenvalue, -(e - e.adjoint()).cwiseAbs().maxCoeff());
    total += e;
  }
  Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(d, d);
  check.completeness_residual = (total - identity).cwiseAbs().maxCoeff();
  for (int v = 0; v < n; ++v) {
    Eigen::MatrixXcd plus = Eigen::MatrixXcd::Zero(d, d);
    for (int o = 0; o < (1 << n); ++o)
      if (plus_outcome(o, v)) plus += povm.effects[o];
    Eigen::MatrixXcd target = 0.5 * (identity + povm.eta * observables[v]);
    check.marginal_residual = std::max(check.marginal_residual, (plus - target).cwiseAbs().maxCoeff());
  }
  return check;
}

ParentPovm uniform_parent(const std::vector<Eigen::MatrixXcd>& observables, double eta) {
  ParentPovm povm;
  povm.observables = static_cast<int>(observables.size());
  povm.dimension = observables.empty() ? 1 : static_cast<int>(observables.front().rows());
  povm.eta = eta;
  int n = povm.observables;
  for (int o = 0; o < (1 << n); ++o) {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Identity(povm.dimension, povm.dimension);
    for (int v = 0; v < n; ++v) e += (plus_outcome(o, v) ? eta : -eta) * observables[v];
    povm.effects.push_back(e / static_cast<double>(1 << n));
  }
  return povm;
}

ExactEta eta_exact_sdp(const std::vector<Eigen::MatrixXcd>& observables, const Limits& limits,
                       const sdp::Options& options) {
  int n = static_cast<int>(observables.size());
  if (n == 0) throw InvalidParameter("eta_exact_sdp needs at least one observable");
  int d = static_cast<int>(observables.front().rows());
  if (n > limits.exact_sdp_max_observables || d > limits.exact_sdp_max_dimension)
    throw CapExceeded("exact SDP is limited to " + std::to_string(limits.exact_sdp_max_observables) +
                      " observables of dimension <= " + std::to_string(limits.exact_sdp_max_dimension));
  for (const auto& a : observables) {
    if (a.rows() != d || a.cols() != d) throw InvalidParameter("observables must share one square dimension");
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-9 || (a * a - id).cwiseAbs().maxCoeff() > 1e-9)
      throw InvalidParameter("observables must be Hermitian involutions");
  }
  int outcomes = 1 << n;
  double size = double(outcomes) * (2.0 * d) * (2.0 * d);
  if (size > limits.sdp_max_variable_dim) throw CapExceeded("exact SDP exceeds the variable dimension cap");

  sdp::Problem p;
  std::vector<int> block(outcomes);
  for (int o = 0; o < outcomes; ++o) block[o] = p.add_complex_block(d);
  int eta = p.add_free(1.0);
  auto basis = hermitian_basis(d);
  Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(d, d);
  for (const auto& b : basis) {
    int c = p.add_constraint(trace_with(b, identity));
    for (int o = 0; o < outcomes; ++o) p.add_hermitian_entry(c, block[o], b.p, b.q, b.value);
  }
  for (int v = 0; v < n; ++v)
    for (const auto& b : basis) {
      int c = p.add_constraint(0.5 * trace_with(b, identity));
      for (int o = 0; o < outcomes; ++o)
        if (plus_outcome(o, v)) p.add_hermitian_entry(c, block[o], b.p, b.q, b.value);
      double coupling = 0.5 * trace_with(b, observables[v]);
      if (coupling != 0) p.add_free_term(c, eta, -coupling);
    }

  // The start E(a) = 2^-n 1, eta = 0 is feasible and invariant under a -> -a.
  sdp::StartPoint start;
  for (int o = 0; o < outcomes; ++o)
    start.x.push_back(Eigen::MatrixXd::Identity(2 * d, 2 * d) / static_cast<double>(outcomes));
  start.free_values = Eigen::VectorXd::Zero(1);
  p.set_start(start);

  sdp::Options opts = options;
  opts.max_variable_dimension = std::min(opts.max_variable_dimension, limits.sdp_max_variable_dim);
  sdp::Solution sol = sdp::solve(p, opts);

  ExactEta result;
  result.value = sol.free_values(0);
  result.upper = sol.dual_value;
  result.gap = sol.gap;
  result.status = sol.status;
  result.iterations = sol.iterations;
  result.parent.observables = n;
  result.parent.dimension = d;
  result.parent.eta = result.value;
  for (int o = 0; o < outcomes; ++o) result.parent.effects.push_back(sol.complex_block(block[o]));
  if (sol.status != sdp::Status::optimal)
    throw SolverFailure("joint measurability SDP ended with status " + sdp::status_name(sol.status) +
                        " (bounds " + std::to_string(sol.primal_value) + ", " +
                        std::to_string(sol.dual_value) + ")");
  return result;
}

ExactEta eta_exact_sdp(const ObservableSet& obs, const Limits& limits, const sdp::Options& options) {
  if (obs.qubit_count() > 20 || (std::uint64_t{1} << obs.qubit_count()) > std::uint64_t(limits.exact_sdp_max_dimension))
    throw CapExceeded("exact SDP is limited to dimension " + std::to_string(limits.exact_sdp_max_dimension));
  return eta_exact_sdp(observable_matrices(obs, limits), limits, options);
}

void write_parent_binary(const std::string& path, const ParentPovm& povm) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParameter("cannot write '" + path + "'");
  std::int64_t header[2] = {povm.observables, povm.dimension};
  out.write(reinterpret_cast<const char*>(header), sizeof(header));
  for (const auto& e : povm.effects)
    for (int r = 0; r < povm.dimension; ++r)
      for (int c = 0; c < povm.dimension; ++c) {
        double parts[2] = {e(r, c).real(), e(r, c).imag()};
        out.write(reinterpret_cast<const char*>(parts), sizeof(parts));
      }
}

ParentPovm read_parent_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameter("cannot read '" + path + "'");
  std::int64_t header[2] = {0, 0};
  in.read(reinterpret_cast<char*>(header), sizeof(header));
  if (!in || header[0] < 0 || header[0] > 30 || header[1] < 1 || header[1] > (1 << 20))
    throw InvalidParameter("malformed parent POVM header");
  ParentPovm povm;
  povm.observables = static_cast<int>(header[0]);
  povm.dimension = static_cast<int>(header[1]);
  for (std::int64_t o = 0; o < (std::int64_t{1} << header[0]); ++o) {
    Eigen::MatrixXcd e(povm.dimension, povm.dimension);
    for (int r = 0; r < povm.dimension; ++r)
      for (int c = 0; c < povm.dimension; ++c) {
        double parts[2];
        in.read(reinterpret_cast<char*>(parts), sizeof(parts));
        e(r, c) = cd(parts[0], parts[1]);
      }
    if (!in) throw InvalidParameter("truncated parent POVM file");
    povm.effects.push_back(e);
  }
  return povm;
}

}  // namespace incompat
