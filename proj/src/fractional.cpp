#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <string>

#include "incompat/error.hpp"
#include "incompat/invariants.hpp"

namespace incompat {

namespace {

constexpr long kMaxListedPalette = 1000000;

// min sum x_I  s.t.  sum_{I containing v} x_I >= 1,  x >= 0, by dual simplex from the surplus basis.
std::vector<mpq_class> solve_covering(int n, const std::vector<std::uint64_t>& sets) {
  int k = static_cast<int>(sets.size());
  int cols = k + n;
  std::vector<std::vector<mpq_class>> t(n, std::vector<mpq_class>(cols, 0));
  std::vector<mpq_class> rhs(n, -1);
  std::vector<mpq_class> reduced(cols, 0);
  std::vector<int> basis(n);
  for (int v = 0; v < n; ++v) {
    for (int j = 0; j < k; ++j)
      if ((sets[j] >> v) & 1U) t[v][j] = -1;
    t[v][k + v] = 1;
    basis[v] = k + v;
  }
  for (int j = 0; j < k; ++j) reduced[j] = 1;

  for (;;) {
    int row = -1;
    for (int r = 0; r < n; ++r)
      if (sgn(rhs[r]) < 0 && (row < 0 || basis[r] < basis[row])) row = r;
    if (row < 0) break;
    int col = -1;
    mpq_class best_ratio;
    for (int j = 0; j < cols; ++j) {
      if (sgn(t[row][j]) >= 0) continue;
      mpq_class ratio = reduced[j] / -t[row][j];
      if (col < 0 || ratio < best_ratio) {
        col = j;
        best_ratio = ratio;
      }
    }
    if (col < 0) throw InternalError("covering LP reported infeasible");
    mpq_class pivot = t[row][col];
    for (int j = 0; j < cols; ++j) t[row][j] /= pivot;
    rhs[row] /= pivot;
    for (int r = 0; r < n; ++r) {
      if (r == row || sgn(t[r][col]) == 0) continue;
      mpq_class factor = t[r][col];
      for (int j = 0; j < cols; ++j)
        if (sgn(t[row][j]) != 0) t[r][j] -= factor * t[row][j];
      rhs[r] -= factor * rhs[row];
    }
    mpq_class factor = reduced[col];
    for (int j = 0; j < cols; ++j)
      if (sgn(t[row][j]) != 0) reduced[j] -= factor * t[row][j];
    basis[row] = col;
  }
  std::vector<mpq_class> x(k, 0);
  for (int r = 0; r < n; ++r)
    if (basis[r] < k) x[basis[r]] = rhs[r];
  return x;
}

}  // namespace

FractionalColoring fractional_chromatic(const Graph& g, const Limits& limits) {
  int n = g.order();
  FractionalColoring result;
  if (n == 0) {
    result.verified = true;
    return result;
  }
  bool transitive = g.meta() && g.meta()->vertex_transitive == true;
  if (n > limits.independent_sets_max_vertices) {
    if (!transitive)
      throw CapExceeded("fractional chromatic number needs <= " +
                        std::to_string(limits.independent_sets_max_vertices) +
                        " vertices or a vertex-transitive graph");
    mpq_class value(n, independence_number(g, limits));
    value.canonicalize();
    result.numerator = value.get_num().get_si();
    result.denominator = value.get_den().get_si();
    result.palette = result.numerator;
    result.per_vertex = result.denominator;
    result.vertex_transitive_formula = true;
    return result;
  }

  auto sets = maximal_independent_sets(g, limits);
  auto x = solve_covering(n, sets);
  mpq_class total = 0;
  mpz_class scale = 1;
  for (const auto& xi : x) {
    total += xi;
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), xi.get_den().get_mpz_t());
  }
  total.canonicalize();
  result.numerator = total.get_num().get_si();
  result.denominator = total.get_den().get_si();
  result.vertex_transitive_formula = false;

  mpq_class palette = total * scale;
  if (!palette.get_den().fits_slong_p() || palette.get_den() != 1 || !scale.fits_slong_p() ||
      palette.get_num() > kMaxListedPalette)
    return result;
  result.palette = palette.get_num().get_si();
  result.per_vertex = scale.get_si();
  result.colors.assign(n, {});
  long long next = 0;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    mpq_class copies = x[j] * scale;
    long long count = copies.get_num().get_si();
    for (long long c = 0; c < count; ++c, ++next)
      for (int v = 0; v < n; ++v)
        if (((sets[j] >> v) & 1U) && static_cast<long long>(result.colors[v].size()) < result.per_vertex)
          result.colors[v].push_back(next);
  }
  result.verified = verify_fractional_coloring(g, result);
  if (!result.verified) throw InternalError("fractional colouring failed verification");
  if (transitive) {
    mpq_class formula(n, independence_number(g, limits));
    formula.canonicalize();
    if (formula != total) throw InternalError("vertex-transitive formula disagrees with the covering LP");
  }
  return result;
}

}  // namespace incompat
