#include "incompat/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "incompat/error.hpp"
#include "incompat/graph_ops.hpp"
#include "incompat/lovasz.hpp"

namespace incompat {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> masks(const Graph& g, int cap, const char* what) {
  if (g.order() > cap || g.order() > 63)
    throw CapExceeded(std::string(what) + " is limited to " + std::to_string(std::min(cap, 63)) + " vertices");
  std::vector<Mask> adj(g.order(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
  return adj;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

  std::vector<int> run() {
    Mask all = adj_.empty() ? 0 : (adj_.size() == 64 ? ~Mask{0} : bit(static_cast<int>(adj_.size())) - 1);
    expand(all);
    return best_;
  }

 private:
  void expand(Mask candidates) {
    std::vector<int> order, bound;
    Mask uncolored = candidates;
    int color = 0;
    while (uncolored) {
      ++color;
      Mask available = uncolored;
      while (available) {
        int v = std::countr_zero(available);
        available &= ~adj_[v] & ~bit(v);
        uncolored &= ~bit(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current_.size() + bound[i] <= best_.size()) return;
      int v = order[i];
      current_.push_back(v);
      Mask next = candidates & adj_[v];
      if (next == 0) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      candidates &= ~bit(v);
    }
  }

  std::vector<Mask> adj_;
  std::vector<int> current_, best_;
};

class ColoringSearch {
 public:
  ColoringSearch(const std::vector<Mask>& adj, int colors)
      : adj_(adj), n_(static_cast<int>(adj.size())), k_(colors), color_(n_, -1) {}

  bool run() { return assign(0, 0); }
  const std::vector<int>& colors() const { return color_; }

 private:
  bool assign(int done, int used) {
    if (done == n_) return true;
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      Mask seen = 0;
      for (Mask nb = adj_[v]; nb; nb &= nb - 1) {
        int w = std::countr_zero(nb);
        if (color_[w] >= 0) seen |= bit(color_[w]);
      }
      int sat = std::popcount(seen), deg = std::popcount(adj_[v]);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    Mask blocked = 0;
    for (Mask nb = adj_[pick]; nb; nb &= nb - 1) {
      int w = std::countr_zero(nb);
      if (color_[w] >= 0) blocked |= bit(color_[w]);
    }
    int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (blocked & bit(c)) continue;
      color_[pick] = c;
      if (assign(done + 1, std::max(used, c + 1))) return true;
    }
    color_[pick] = -1;
    return false;
  }

  const std::vector<Mask>& adj_;
  int n_, k_;
  std::vector<int> color_;
};

}  // namespace

std::vector<int> maximum_clique(const Graph& g, const Limits& limits) {
  auto clique = CliqueSearch(masks(g, limits.exact_max_vertices, "clique search")).run();
  std::sort(clique.begin(), clique.end());
  return clique;
}

int clique_number(const Graph& g, const Limits& limits) {
  return static_cast<int>(maximum_clique(g, limits).size());
}

int independence_number(const Graph& g, const Limits& limits) { return clique_number(complement(g), limits); }

Coloring chromatic_number(const Graph& g, const Limits& limits) {
  auto adj = masks(g, limits.exact_max_vertices, "chromatic number");
  Coloring result;
  if (g.order() == 0) return result;
  for (int k = std::max(1, clique_number(g, limits));; ++k) {
    ColoringSearch search(adj, k);
    if (search.run()) {
      result.colors = k;
      result.color = search.colors();
      return result;
    }
  }
}

std::vector<std::uint64_t> maximal_independent_sets(const Graph& g, const Limits& limits) {
  auto adj = masks(g, limits.independent_sets_max_vertices, "independent set enumeration");
  int n = g.order();
  Mask all = n == 0 ? 0 : bit(n) - 1;
  std::vector<Mask> non_adj(n);
  for (int v = 0; v < n; ++v) non_adj[v] = all & ~adj[v] & ~bit(v);
  std::vector<std::uint64_t> out;
  auto recurse = [&](auto&& self, Mask r, Mask p, Mask x) -> void {
    if (p == 0 && x == 0) {
      out.push_back(r);
      return;
    }
    int pivot = -1, best = -1;
    for (Mask c = p | x; c; c &= c - 1) {
      int u = std::countr_zero(c);
      int count = std::popcount(p & non_adj[u]);
      if (count > best) {
        best = count;
        pivot = u;
      }
    }
    for (Mask c = p & ~non_adj[pivot]; c; c &= c - 1) {
      int v = std::countr_zero(c);
      self(self, r | bit(v), p & non_adj[v], x & non_adj[v]);
      p &= ~bit(v);
      x |= bit(v);
    }
  };
  recurse(recurse, 0, all, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_fractional_coloring(const Graph& g, const FractionalColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.order()) return false;
  for (const auto& set : c.colors) {
    if (static_cast<long long>(set.size()) != c.per_vertex) return false;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] < 0 || set[i] >= c.palette) return false;
      if (i > 0 && set[i] <= set[i - 1]) return false;
    }
  }
  for (const auto& e : g.edges()) {
    const auto &a = c.colors[e.u], &b = c.colors[e.v];
    std::vector<long long> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (!common.empty()) return false;
  }
  return true;
}

InvariantReport invariant_report(const Graph& g, const Limits& limits) {
  InvariantReport report;
  report.alpha = independence_number(g, limits);
  report.omega = clique_number(g, limits);
  report.chi = chromatic_number(g, limits).colors;
  report.chi_f = fractional_chromatic(g, limits);
  auto theta = lovasz_theta(g, limits);
  report.theta = theta.value;
  report.theta_gap = theta.gap;
  return report;
}

nlohmann::json invariants_to_json(const InvariantReport& report) {
  nlohmann::json j;
  j["alpha"] = report.alpha;
  j["omega"] = report.omega;
  j["chi"] = report.chi;
  j["chi_f"] = {{"p", report.chi_f.numerator}, {"q", report.chi_f.denominator}, {"verified", report.chi_f.verified}};
  j["theta"] = {{"value", report.theta}, {"gap", report.theta_gap}};
  return j;
}

}  // namespace incompat
