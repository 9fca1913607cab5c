#include "incompat/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "incompat/error.hpp"

namespace incompat::sdp {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void SymmetricSparse::add(int block, int row, int col, double value) {
  if (row > col) std::swap(row, col);
  values_[{block, row, col}] += value;
}

std::vector<SymmetricSparse::Entry> SymmetricSparse::entries() const {
  std::vector<Entry> out;
  out.reserve(values_.size());
  for (const auto& [key, value] : values_)
    if (value != 0) out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), value});
  return out;
}

int Problem::add_block(BlockKind kind, int size) {
  if (size < 1) throw InvalidParameter("SDP blocks need positive size");
  blocks_.push_back({kind, size, false});
  return static_cast<int>(blocks_.size()) - 1;
}

int Problem::add_complex_block(int dimension) {
  int id = add_block(BlockKind::psd, 2 * dimension);
  blocks_[id].complex = true;
  return id;
}

int Problem::add_free(double objective_coefficient) {
  free_objective_.push_back(objective_coefficient);
  return static_cast<int>(free_objective_.size()) - 1;
}

int Problem::add_constraint(double rhs) {
  constraints_.push_back({});
  constraints_.back().rhs = rhs;
  return static_cast<int>(constraints_.size()) - 1;
}

const Block& Problem::checked_block(int block, int row, int col) const {
  if (block < 0 || block >= static_cast<int>(blocks_.size())) throw InvalidParameter("unknown SDP block");
  const Block& b = blocks_[block];
  if (row < 0 || col < 0 || row >= b.size || col >= b.size)
    throw InvalidParameter("SDP entry outside its block");
  if (b.kind == BlockKind::diagonal && row != col)
    throw InvalidParameter("diagonal blocks accept diagonal entries only");
  return b;
}

void Problem::add_objective(int block, int row, int col, double value) {
  checked_block(block, row, col);
  objective_.add(block, row, col, value);
}

void Problem::add_entry(int constraint, int block, int row, int col, double value) {
  checked_block(block, row, col);
  if (constraint < 0 || constraint >= static_cast<int>(constraints_.size()))
    throw InvalidParameter("unknown SDP constraint");
  constraints_[constraint].matrix.add(block, row, col, value);
}

void Problem::add_free_term(int constraint, int free_index, double coefficient) {
  if (free_index < 0 || free_index >= static_cast<int>(free_objective_.size()))
    throw InvalidParameter("unknown free variable");
  constraints_.at(constraint).free_terms.emplace_back(free_index, coefficient);
}

void Problem::hermitian_terms(int block, int p, int q, std::complex<double> value,
                              const std::function<void(int, int, double)>& put) const {
  const Block& b = checked_block(block, 0, 0);
  if (!b.complex) throw InvalidParameter("Hermitian entries need a complex block");
  int d = b.size / 2;
  if (p < 0 || q < 0 || p >= d || q >= d) throw InvalidParameter("Hermitian entry outside its block");
  double re = 0.5 * value.real(), im = 0.5 * value.imag();
  if (p == q) {
    put(p, p, re);
    put(p + d, p + d, re);
    return;
  }
  put(p, q, re);
  put(p + d, q + d, re);
  put(p, q + d, -im);
  put(q, p + d, im);
}

void Problem::add_hermitian_entry(int constraint, int block, int p, int q, std::complex<double> value) {
  hermitian_terms(block, p, q, value, [&](int r, int c, double v) { add_entry(constraint, block, r, c, v); });
}

void Problem::add_hermitian_objective(int block, int p, int q, std::complex<double> value) {
  hermitian_terms(block, p, q, value, [&](int r, int c, double v) { add_objective(block, r, c, v); });
}

double Problem::variable_dimension() const {
  double total = 0;
  for (const auto& b : blocks_) total += b.kind == BlockKind::psd ? double(b.size) * b.size : b.size;
  return total;
}

std::string status_name(Status status) {
  switch (status) {
    case Status::optimal: return "optimal";
    case Status::max_iterations: return "max-iter";
    case Status::infeasible_detected: return "infeasible-detected";
    case Status::numerical_breakdown: return "numerical-breakdown";
  }
  return "unknown";
}

Eigen::MatrixXcd Solution::complex_block(int block) const {
  const MatrixXd& y = x.at(block);
  int d = static_cast<int>(y.rows()) / 2;
  MatrixXd re = 0.5 * (y.topLeftCorner(d, d) + y.bottomRightCorner(d, d));
  MatrixXd im = 0.5 * (y.bottomLeftCorner(d, d) - y.topRightCorner(d, d));
  Eigen::MatrixXcd out(d, d);
  out.real() = re;
  out.imag() = im;
  return out;
}

namespace {

struct FullEntry {
  int row;
  int col;
  double value;
};

// Block-diagonal matrices; diagonal blocks are column vectors.
using Blocks = std::vector<MatrixXd>;

class Solver {
 public:
  Solver(const Problem& p, const Options& o) : problem_(p), options_(o) {
    const auto& blocks = p.blocks();
    nb_ = static_cast<int>(blocks.size());
    m_ = static_cast<int>(p.constraints().size());
    f_ = static_cast<int>(p.free_objective().size());
    for (const auto& b : blocks) order_ += b.size;
    b_.resize(m_);
    f_matrix_ = MatrixXd::Zero(m_, f_);
    c_free_ = VectorXd::Zero(f_);
    for (int k = 0; k < f_; ++k) c_free_(k) = p.free_objective()[k];
    per_block_.assign(nb_, {});
    for (int i = 0; i < m_; ++i) {
      const auto& con = p.constraints()[i];
      b_(i) = con.rhs;
      for (const auto& [k, coeff] : con.free_terms) f_matrix_(i, k) += coeff;
      std::map<int, std::vector<FullEntry>> by_block;
      for (const auto& e : con.matrix.entries()) {
        by_block[e.block].push_back({e.row, e.col, e.value});
        if (e.row != e.col) by_block[e.block].push_back({e.col, e.row, e.value});
      }
      for (auto& [blk, list] : by_block) per_block_[blk].push_back({i, std::move(list)});
    }
    c_ = zeros();
    for (const auto& e : p.objective().entries()) {
      if (blocks[e.block].kind == BlockKind::diagonal) {
        c_[e.block](e.row) += e.value;
      } else {
        c_[e.block](e.row, e.col) += e.value;
        if (e.row != e.col) c_[e.block](e.col, e.row) += e.value;
      }
    }
  }

  Solution run();

 private:
  bool psd(int blk) const { return problem_.blocks()[blk].kind == BlockKind::psd; }

  Blocks zeros() const {
    Blocks out;
    for (const auto& b : problem_.blocks())
      out.push_back(b.kind == BlockKind::psd ? MatrixXd::Zero(b.size, b.size) : MatrixXd::Zero(b.size, 1));
    return out;
  }

  static double inner(const Blocks& a, const Blocks& b) {
    double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += (a[k].array() * b[k].array()).sum();
    return s;
  }

  static double norm(const Blocks& a) { return std::sqrt(inner(a, a)); }

  // <A_i, K> for every constraint; K need not be symmetric.
  VectorXd apply(const Blocks& k) const {
    VectorXd out = VectorXd::Zero(m_);
    for (int blk = 0; blk < nb_; ++blk)
      for (const auto& [i, list] : per_block_[blk])
        for (const auto& e : list) out(i) += e.value * (psd(blk) ? k[blk](e.row, e.col) : k[blk](e.row));
    return out;
  }

  Blocks adjoint(const VectorXd& y) const {
    Blocks out = zeros();
    for (int blk = 0; blk < nb_; ++blk)
      for (const auto& [i, list] : per_block_[blk])
        for (const auto& e : list) {
          if (psd(blk)) {
            out[blk](e.row, e.col) += y(i) * e.value;
          } else {
            out[blk](e.row) += y(i) * e.value;
          }
        }
    return out;
  }

  // Largest step keeping x + alpha*dx positive (semi)definite.
  double max_step(int blk, const MatrixXd& x, const MatrixXd& dx) const {
    if (!psd(blk)) {
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index k = 0; k < x.rows(); ++k)
        if (dx(k) < 0) best = std::min(best, -x(k) / dx(k));
      return best;
    }
    Eigen::LLT<MatrixXd> llt(x);
    if (llt.info() != Eigen::Success) return 0;
    MatrixXd l = llt.matrixL();
    MatrixXd w = l.triangularView<Eigen::Lower>().solve(dx);
    w = l.triangularView<Eigen::Lower>().solve(w.transpose()).transpose();
    w = 0.5 * (w + w.transpose());
    double lowest = Eigen::SelfAdjointEigenSolver<MatrixXd>(w, Eigen::EigenvaluesOnly).eigenvalues()(0);
    return lowest >= 0 ? std::numeric_limits<double>::infinity() : -1.0 / lowest;
  }

  double step(const Blocks& x, const Blocks& dx) const {
    double alpha = std::numeric_limits<double>::infinity();
    for (int blk = 0; blk < nb_; ++blk) alpha = std::min(alpha, max_step(blk, x[blk], dx[blk]));
    return std::min(1.0, options_.step_fraction * alpha);
  }

  struct Direction {
    Blocks dx;
    VectorXd dy;
    VectorXd dt;
    Blocks dz;
  };

  Direction direction(const Blocks& rc) const;
  bool factor();

  const Problem& problem_;
  const Options& options_;
  int nb_ = 0, m_ = 0, f_ = 0, order_ = 0;
  VectorXd b_, c_free_;
  MatrixXd f_matrix_;
  Blocks c_;
  std::vector<std::vector<std::pair<int, std::vector<FullEntry>>>> per_block_;

  Blocks x_, z_, zinv_, rd_;
  VectorXd y_, t_, rp_, rf_;
  Eigen::LLT<MatrixXd> schur_;
  Eigen::PartialPivLU<MatrixXd> schur_lu_;
  bool use_lu_ = false;
  MatrixXd minv_f_;
  Eigen::PartialPivLU<MatrixXd> free_system_;
};

bool Solver::factor() {
  MatrixXd schur = MatrixXd::Zero(m_, m_);
  for (int blk = 0; blk < nb_; ++blk) {
    const auto& list = per_block_[blk];
    const MatrixXd& x = x_[blk];
    const MatrixXd& zi = zinv_[blk];
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t c = a; c < list.size(); ++c) {
        double s = 0;
        for (const auto& e : list[a].second)
          for (const auto& g : list[c].second)
            s += psd(blk) ? e.value * g.value * x(e.col, g.row) * zi(g.col, e.row)
                          : (e.row == g.row ? e.value * g.value * x(e.row) * zi(e.row) : 0.0);
        int i = list[a].first, j = list[c].first;
        schur(i, j) += s;
        if (i != j) schur(j, i) += s;
      }
  }
  schur = 0.5 * (schur + schur.transpose());
  schur_.compute(schur);
  double scale = schur.diagonal().cwiseAbs().maxCoeff();
  for (double shift = 1e-15; schur_.info() != Eigen::Success && shift <= 1e-9; shift *= 100) {
    MatrixXd shifted = schur;
    shifted.diagonal().array() += shift * scale;
    schur_.compute(shifted);
  }
  use_lu_ = schur_.info() != Eigen::Success;
  if (use_lu_) {
    schur_lu_.compute(schur);
    if (!schur_lu_.matrixLU().allFinite()) return false;
  }
  if (f_ > 0) {
    minv_f_ = use_lu_ ? MatrixXd(schur_lu_.solve(f_matrix_)) : MatrixXd(schur_.solve(f_matrix_));
    free_system_.compute(f_matrix_.transpose() * minv_f_);
  }
  return true;
}

Solver::Direction Solver::direction(const Blocks& rc) const {
  Blocks g(nb_);
  for (int blk = 0; blk < nb_; ++blk) {
    if (psd(blk)) {
      g[blk] = rc[blk] + x_[blk] * rd_[blk] * zinv_[blk];
    } else {
      g[blk] = rc[blk] + (x_[blk].array() * rd_[blk].array() * zinv_[blk].array()).matrix();
    }
  }
  VectorXd h = apply(g) - rp_;
  Direction d;
  VectorXd minv_h = use_lu_ ? VectorXd(schur_lu_.solve(h)) : VectorXd(schur_.solve(h));
  if (f_ > 0) {
    d.dt = free_system_.solve(rf_ - f_matrix_.transpose() * minv_h);
    d.dy = minv_h + minv_f_ * d.dt;
  } else {
    d.dt = VectorXd::Zero(0);
    d.dy = minv_h;
  }
  Blocks ady = adjoint(d.dy);
  d.dz.resize(nb_);
  d.dx.resize(nb_);
  for (int blk = 0; blk < nb_; ++blk) {
    d.dz[blk] = ady[blk] - rd_[blk];
    if (psd(blk)) {
      MatrixXd dx = rc[blk] - x_[blk] * d.dz[blk] * zinv_[blk];
      d.dx[blk] = 0.5 * (dx + dx.transpose());
    } else {
      d.dx[blk] = rc[blk] - (x_[blk].array() * d.dz[blk].array() * zinv_[blk].array()).matrix();
    }
  }
  return d;
}

Solution Solver::run() {
  Solution sol;
  const auto& start = problem_.start();
  bool dual_given = start && !start->z.empty();
  if (start) {
    x_ = start->x;
    t_ = start->free_values;
    if (static_cast<int>(x_.size()) != nb_ || t_.size() != f_)
      throw InvalidParameter("SDP start point does not conform to the problem");
  }
  if (dual_given) {
    z_ = start->z;
    y_ = start->y;
    if (static_cast<int>(z_.size()) != nb_ || y_.size() != m_)
      throw InvalidParameter("SDP start point does not conform to the problem");
  } else {
    Blocks given_x = x_;
    x_ = zeros();
    z_ = zeros();
    std::vector<double> a_norm(nb_, 0.0);
    std::vector<double> rhs_ratio(nb_, 0.0);
    for (int blk = 0; blk < nb_; ++blk)
      for (const auto& [i, list] : per_block_[blk]) {
        double s = 0;
        for (const auto& e : list) s += e.value * e.value;
        a_norm[blk] = std::max(a_norm[blk], std::sqrt(s));
        rhs_ratio[blk] = std::max(rhs_ratio[blk], (1 + std::abs(b_(i))) / (1 + std::sqrt(s)));
      }
    for (int blk = 0; blk < nb_; ++blk) {
      double n = problem_.blocks()[blk].size;
      double xi = std::max({10.0, std::sqrt(n), n * rhs_ratio[blk]});
      double zeta = std::max({10.0, std::sqrt(n), a_norm[blk], c_[blk].norm(), c_free_.norm()});
      if (psd(blk)) {
        x_[blk] = xi * MatrixXd::Identity(x_[blk].rows(), x_[blk].cols());
        z_[blk] = zeta * MatrixXd::Identity(z_[blk].rows(), z_[blk].cols());
      } else {
        x_[blk].setConstant(xi);
        z_[blk].setConstant(zeta);
      }
    }
    y_ = VectorXd::Zero(m_);
    if (start) {
      x_ = given_x;
    } else {
      t_ = VectorXd::Zero(f_);
    }
  }

  double b_scale = 1 + b_.norm();
  double c_scale = 1 + norm(c_) + c_free_.norm();
  zinv_.assign(nb_, MatrixXd());
  sol.status = Status::max_iterations;

  for (int iter = 0;; ++iter) {
    rp_ = b_ - apply(x_) - f_matrix_ * t_;
    Blocks aty = adjoint(y_);
    rd_.assign(nb_, MatrixXd());
    for (int blk = 0; blk < nb_; ++blk) rd_[blk] = c_[blk] - aty[blk] + z_[blk];
    rf_ = c_free_ - f_matrix_.transpose() * y_;
    double pobj = inner(c_, x_) + c_free_.dot(t_);
    double dobj = b_.dot(y_);
    double pinf = rp_.norm() / b_scale;
    double dinf = std::sqrt(inner(rd_, rd_) + rf_.squaredNorm()) / c_scale;
    double mu = inner(x_, z_) / order_;
    if (options_.record_history) sol.history.push_back({pobj, dobj, pinf, dinf, mu});
    double rel_gap = std::abs(dobj - pobj) / std::max(1.0, 0.5 * (std::abs(pobj) + std::abs(dobj)));

    sol.primal_value = pobj;
    sol.dual_value = dobj;
    sol.gap = dobj - pobj;
    sol.primal_infeasibility = pinf;
    sol.dual_infeasibility = dinf;
    sol.iterations = iter;
    sol.x = x_;
    sol.z = z_;
    sol.y = y_;
    sol.free_values = t_;

    if (rel_gap <= options_.gap_tolerance && pinf <= options_.feasibility_tolerance &&
        dinf <= options_.feasibility_tolerance) {
      sol.status = Status::optimal;
      break;
    }
    if (iter >= options_.max_iterations) {
      sol.status = Status::max_iterations;
      break;
    }
    double x_size = norm(x_), y_size = y_.lpNorm<Eigen::Infinity>();
    if (!std::isfinite(pobj) || !std::isfinite(dobj) || y_size > 1e12 * c_scale || x_size > 1e12 * b_scale) {
      sol.status = Status::infeasible_detected;
      break;
    }

    bool ok = true;
    for (int blk = 0; blk < nb_ && ok; ++blk) {
      if (psd(blk)) {
        Eigen::LLT<MatrixXd> llt(z_[blk]);
        if (llt.info() != Eigen::Success) {
          ok = false;
          break;
        }
        MatrixXd zi = llt.solve(MatrixXd::Identity(z_[blk].rows(), z_[blk].cols()));
        zinv_[blk] = 0.5 * (zi + zi.transpose());
      } else {
        if ((z_[blk].array() <= 0).any()) ok = false;
        zinv_[blk] = z_[blk].cwiseInverse();
      }
    }
    if (!ok || !factor()) {
      sol.status = Status::numerical_breakdown;
      break;
    }

    Blocks rc(nb_);
    double sigma = options_.fixed_centering;
    Direction predictor;
    if (options_.predictor_corrector) {
      for (int blk = 0; blk < nb_; ++blk) rc[blk] = -x_[blk];
      predictor = direction(rc);
      double ap = step(x_, predictor.dx), ad = step(z_, predictor.dz);
      Blocks xa = x_, za = z_;
      for (int blk = 0; blk < nb_; ++blk) {
        xa[blk] += ap * predictor.dx[blk];
        za[blk] += ad * predictor.dz[blk];
      }
      sigma = std::clamp(std::pow(inner(xa, za) / order_ / mu, 3), 0.0, 1.0);
    }
    for (int blk = 0; blk < nb_; ++blk) {
      if (psd(blk)) {
        rc[blk] = sigma * mu * zinv_[blk] - x_[blk];
        if (options_.predictor_corrector) rc[blk] -= predictor.dx[blk] * predictor.dz[blk] * zinv_[blk];
      } else {
        rc[blk] = (sigma * mu * zinv_[blk].array() - x_[blk].array()).matrix();
        if (options_.predictor_corrector)
          rc[blk].array() -= predictor.dx[blk].array() * predictor.dz[blk].array() * zinv_[blk].array();
      }
    }
    Direction d = direction(rc);
    double ap = step(x_, d.dx), ad = step(z_, d.dz);
    if (ap < 1e-12 && ad < 1e-12) {
      sol.status = Status::numerical_breakdown;
      break;
    }
    for (int blk = 0; blk < nb_; ++blk) {
      x_[blk] += ap * d.dx[blk];
      z_[blk] += ad * d.dz[blk];
    }
    t_ += ap * d.dt;
    y_ += ad * d.dy;
  }
  return sol;
}

}  // namespace

Solution solve(const Problem& problem, const Options& options) {
  if (problem.variable_dimension() > options.max_variable_dimension)
    throw CapExceeded("SDP variable dimension " + std::to_string(problem.variable_dimension()) +
                      " exceeds the cap " + std::to_string(options.max_variable_dimension));
  if (problem.blocks().empty()) throw InvalidParameter("SDP needs at least one block");
  Solver solver(problem, options);
  return solver.run();
}

}  // namespace incompat::sdp
