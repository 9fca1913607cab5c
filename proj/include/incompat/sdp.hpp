#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace incompat::sdp {

enum class BlockKind { psd, diagonal };

struct Block {
  BlockKind kind = BlockKind::psd;
  int size = 0;
  /** Real embedding [[Re,-Im],[Im,Re]] of a complex Hermitian block of half this size. */
  bool complex = false;
};

/** Block-diagonal symmetric matrix; (row,col) and (col,row) share one stored value. */
class SymmetricSparse {
 public:
  struct Entry {
    int block;
    int row;
    int col;
    double value;
  };

  void add(int block, int row, int col, double value);
  std::vector<Entry> entries() const;
  bool empty() const { return values_.empty(); }

 private:
  std::map<std::tuple<int, int, int>, double> values_;
};

struct Constraint {
  SymmetricSparse matrix;
  std::vector<std::pair<int, double>> free_terms;
  double rhs = 0;
};

/** Starting iterate; diagonal blocks are column vectors. Empty z selects a default dual start. */
struct StartPoint {
  std::vector<Eigen::MatrixXd> x;
  Eigen::VectorXd y;
  Eigen::VectorXd free_values;
  std::vector<Eigen::MatrixXd> z;
};

/**
 * maximise <C,X> + c^T t  subject to  <A_i,X> + (F t)_i = b_i,  X PSD,
 * with t free. The dual is  minimise b^T y  s.t.  sum y_i A_i - Z = C,  F^T y = c.
 */
class Problem {
 public:
  int add_block(BlockKind kind, int size);
  /** Complex Hermitian d x d block, stored as its 2d x 2d real embedding. */
  int add_complex_block(int dimension);
  int add_free(double objective_coefficient);
  int add_constraint(double rhs);

  void add_objective(int block, int row, int col, double value);
  void add_entry(int constraint, int block, int row, int col, double value);
  void add_free_term(int constraint, int free_index, double coefficient);

  /** Adds trace(H X) for the Hermitian H with value at (p,q) and its conjugate at (q,p). */
  void add_hermitian_entry(int constraint, int block, int p, int q, std::complex<double> value);
  void add_hermitian_objective(int block, int p, int q, std::complex<double> value);

  void set_start(StartPoint start) { start_ = std::move(start); }

  const std::vector<Block>& blocks() const { return blocks_; }
  const SymmetricSparse& objective() const { return objective_; }
  const std::vector<double>& free_objective() const { return free_objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::optional<StartPoint>& start() const { return start_; }
  double variable_dimension() const;

 private:
  const Block& checked_block(int block, int row, int col) const;
  void hermitian_terms(int block, int p, int q, std::complex<double> value,
                       const std::function<void(int, int, double)>& put) const;

  std::vector<Block> blocks_;
  SymmetricSparse objective_;
  std::vector<double> free_objective_;
  std::vector<Constraint> constraints_;
  std::optional<StartPoint> start_;
};

enum class Status { optimal, max_iterations, infeasible_detected, numerical_breakdown };

std::string status_name(Status status);

struct Options {
  double gap_tolerance = 1e-9;
  double feasibility_tolerance = 1e-9;
  int max_iterations = 150;
  double step_fraction = 0.98;
  bool predictor_corrector = true;
  double fixed_centering = 0.1;
  bool record_history = false;
  double max_variable_dimension = 4e6;
};

struct IterateRecord {
  double primal_value;
  double dual_value;
  double primal_infeasibility;
  double dual_infeasibility;
  double mu;
};

struct Solution {
  Status status = Status::numerical_breakdown;
  double primal_value = 0;
  double dual_value = 0;
  double gap = 0;  // dual - primal
  std::vector<Eigen::MatrixXd> x;
  std::vector<Eigen::MatrixXd> z;
  Eigen::VectorXd y;
  Eigen::VectorXd free_values;
  double primal_infeasibility = 0;
  double dual_infeasibility = 0;
  int iterations = 0;
  std::vector<IterateRecord> history;

  /** Complex block recovered from its real embedding. */
  Eigen::MatrixXcd complex_block(int block) const;
};

/** Throws CapExceeded above the dimension cap, InvalidParameter on malformed problems. */
Solution solve(const Problem& problem, const Options& options = {});

}  // namespace incompat::sdp
