#include "incompat/realization.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "incompat/error.hpp"
#include "incompat/generators.hpp"
#include "incompat/graph_ops.hpp"

namespace incompat {

namespace {

bool same_relations(const ObservableSet& obs, const Graph& g) {
  int n = g.order();
  if (obs.size() != n) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (anticommute(obs.monomials[u], obs.monomials[v]) != g.adjacent(u, v)) return false;
  return true;
}

// Symplectic form of the graph on F2^n: x^T B y.
bool form(const Graph& g, const VertexSet& x, const VertexSet& y) {
  bool parity = false;
  for (auto u = x.find_first(); u != VertexSet::npos; u = x.find_next(u))
    parity ^= ((g.neighbours(static_cast<int>(u)) & y).count() & 1U) != 0;
  return parity;
}

std::vector<int> symmetric_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

ObservableSet realize_majorana(const Graph& g) {
  int n = g.order(), m = g.size();
  std::vector<std::vector<int>> labels(n);
  for (int e = 0; e < m; ++e) {
    labels[g.edges()[e].u].push_back(e + 1);
    labels[g.edges()[e].v].push_back(e + 1);
  }
  int next = m + 1;
  for (int v = 0; v < n; ++v)
    if (labels[v].size() % 2 == 1) labels[v].push_back(next++);
  ObservableSet obs;
  obs.modes = next - 1;
  for (auto& l : labels) obs.monomials.emplace_back(std::move(l));
  if (!same_relations(obs, g)) throw InternalError("realize_majorana: relations do not match graph");
  return obs;
}

ObservableSet realize_minimal(const Graph& g, const Limits& limits) {
  int n = g.order();
  int rank = f2_rank(g);
  if (rank > limits.minimal_rank_max)
    throw CapExceeded("F2 rank " + std::to_string(rank) + " exceeds the cap " +
                      std::to_string(limits.minimal_rank_max));
  std::vector<VertexSet> work;
  for (int v = 0; v < n; ++v) {
    VertexSet unit(n);
    unit.set(v);
    work.push_back(unit);
  }
  std::vector<std::pair<VertexSet, VertexSet>> pairs;
  while (!work.empty()) {
    VertexSet a = work.back();
    work.pop_back();
    auto partner = std::find_if(work.begin(), work.end(), [&](const VertexSet& w) { return form(g, a, w); });
    if (partner == work.end()) continue;
    VertexSet b = *partner;
    work.erase(partner);
    for (auto& w : work) {
      bool with_b = form(g, w, b), with_a = form(g, w, a);
      if (with_b) w ^= a;
      if (with_a) w ^= b;
    }
    pairs.emplace_back(a, b);
  }
  int qubits = static_cast<int>(pairs.size());
  if (2 * qubits != rank) throw InternalError("realize_minimal: symplectic basis size differs from rank");

  ObservableSet obs;
  obs.modes = 2 * qubits;
  for (int v = 0; v < n; ++v) {
    VertexSet unit(n);
    unit.set(v);
    std::vector<int> labels;
    for (int j = 1; j <= qubits; ++j) {
      bool x = form(g, unit, pairs[j - 1].second);
      bool z = form(g, unit, pairs[j - 1].first);
      if (!x && !z) continue;
      std::vector<int> local;
      for (int l = 1; l <= 2 * j - 2; ++l) local.push_back(l);
      if (x && !z) local.push_back(2 * j - 1);
      if (x && z) local.push_back(2 * j);
      if (!x && z) local = {2 * j - 1, 2 * j};
      labels = symmetric_difference(labels, local);
    }
    obs.monomials.emplace_back(std::move(labels));
  }
  if (!same_relations(obs, g)) throw InternalError("realize_minimal: relations do not match graph");
  return obs;
}

ObservableSet degree_k_family(int n_modes, int k, const Limits& limits) {
  if (n_modes < 1 || n_modes % 2 != 0) throw InvalidParameter("degree_k_family needs an even mode count");
  if (k < 1 || k > n_modes) throw InvalidParameter("degree_k_family needs 1 <= k <= n_modes");
  if (n_modes > 63) throw CapExceeded("degree_k_family supports at most 63 modes");
  double count = 1;
  for (int i = 0; i < k; ++i) count = count * (n_modes - i) / (i + 1);
  if (count > static_cast<double>(limits.degree_family_max))
    throw CapExceeded("C(" + std::to_string(n_modes) + "," + std::to_string(k) + ") exceeds the cap");
  ObservableSet obs;
  obs.modes = n_modes;
  for (auto mask : colex_subsets(n_modes, k)) {
    std::vector<int> labels;
    for (int b = 0; b < n_modes; ++b)
      if ((mask >> b) & 1ULL) labels.push_back(b + 1);
    obs.monomials.emplace_back(std::move(labels));
  }
  return obs;
}

ObservableSet realize_quadratic_line(const Graph& root) {
  ObservableSet obs;
  obs.modes = root.order();
  for (const auto& e : root.edges()) obs.monomials.emplace_back(std::vector<int>{e.u + 1, e.v + 1});
  return obs;
}

}  // namespace incompat
