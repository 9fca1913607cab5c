#include "incompat/orientation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <thread>

#include "incompat/error.hpp"
#include "incompat/graph_io.hpp"

namespace incompat {

namespace {

constexpr std::uint64_t kChunk = 4096;

struct Best {
  double value = -1;
  std::uint64_t pattern = 0;
};

// Later candidates must beat the incumbent by a relative margin, so ties keep the earlier pattern.
void offer(Best& best, double value, std::uint64_t pattern) {
  if (best.value < 0 || value > best.value + 1e-9 * std::max(1.0, best.value)) best = {value, pattern};
}

}  // namespace

Orientation::Orientation(Graph g, std::vector<int> edge_signs)
    : base(std::move(g)), signs(std::move(edge_signs)) {
  if (static_cast<int>(signs.size()) != base.size())
    throw InvalidParameter("orientation needs one sign per edge");
  for (int s : signs)
    if (s != 1 && s != -1) throw InvalidParameter("orientation signs must be +1 or -1");
}

Eigen::MatrixXd Orientation::skew_matrix() const {
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(base.order(), base.order());
  for (int e = 0; e < base.size(); ++e) {
    const Edge& edge = base.edges()[e];
    s(edge.u, edge.v) = signs[e];
    s(edge.v, edge.u) = -signs[e];
  }
  return s;
}

SpectralSummary skew_spectrum(const Orientation& o) {
  SpectralSummary summary;
  summary.kind = MatrixKind::skew;
  if (o.base.order() == 0) return summary;
  Eigen::MatrixXcd hermitian = std::complex<double>(0, 1) * o.skew_matrix().cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
  for (double v : solver.eigenvalues()) summary.magnitudes.push_back(std::abs(v));
  std::sort(summary.magnitudes.rbegin(), summary.magnitudes.rend());
  for (double v : summary.magnitudes) summary.energy += v;
  return summary;
}

double skew_energy(const Orientation& o) { return skew_spectrum(o).energy; }

SwitchingClasses::SwitchingClasses(const Graph& g, const Limits& limits) : graph_(g) {
  int n = g.order();
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < g.size(); ++e) {
    int a = root(g.edges()[e].u), b = root(g.edges()[e].v);
    if (a != b) {
      parent[a] = b;
      tree_.push_back(e);
    } else {
      cotree_.push_back(e);
    }
  }
  int touched_root = -1;
  for (const auto& e : g.edges()) {
    int r = root(e.u);
    if (touched_root >= 0 && r != touched_root)
      throw InvalidParameter("switching classes need a connected graph; split components first");
    touched_root = r;
  }
  if (cotree_.size() >= 63 || count() > limits.max_switching_classes)
    throw CapExceeded("2^" + std::to_string(cotree_.size()) + " switching classes exceed the cap of " +
                      std::to_string(limits.max_switching_classes));
}

std::vector<int> SwitchingClasses::signs(std::uint64_t pattern) const {
  std::vector<int> out(graph_.size(), 1);
  int c = static_cast<int>(cotree_.size());
  for (int i = 0; i < c; ++i)
    if ((pattern >> (c - 1 - i)) & 1U) out[cotree_[i]] = -1;
  return out;
}

Orientation SwitchingClasses::representative(std::uint64_t pattern) const {
  return Orientation(graph_, signs(pattern));
}

std::string SwitchingClasses::pattern_bits(std::uint64_t pattern) const {
  std::string bits;
  int c = static_cast<int>(cotree_.size());
  for (int i = 0; i < c; ++i) bits.push_back(((pattern >> (c - 1 - i)) & 1U) ? '1' : '0');
  return bits;
}

MaxSkewEnergy max_skew_energy(const Graph& g, const Limits& limits) {
  SwitchingClasses classes(g, limits);
  std::uint64_t total = classes.count();
  std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<Best> chunk_best(chunks);
  auto work = [&](unsigned worker, unsigned workers) {
    for (std::uint64_t c = worker; c < chunks; c += workers) {
      Best best;
      std::uint64_t end = std::min(total, (c + 1) * kChunk);
      for (std::uint64_t p = c * kChunk; p < end; ++p) offer(best, skew_energy(classes.representative(p)), p);
      chunk_best[c] = best;
    }
  };
  unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, limits.threads), chunks));
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }
  Best best;
  for (const auto& b : chunk_best) offer(best, b.value, b.pattern);
  MaxSkewEnergy result;
  result.value = best.value;
  result.pattern = best.pattern;
  result.classes = total;
  result.witness = classes.representative(best.pattern);
  return result;
}

nlohmann::json orientation_to_json(const SwitchingClasses& classes, std::uint64_t pattern) {
  Orientation o = classes.representative(pattern);
  nlohmann::json j;
  j["graph"] = graph_to_json(o.base);
  j["cotree_signs"] = classes.pattern_bits(pattern);
  j["tree_edges"] = nlohmann::json::array();
  for (int e : classes.tree_edges()) j["tree_edges"].push_back({o.base.edges()[e].u, o.base.edges()[e].v});
  j["signs"] = o.signs;
  return j;
}

}  // namespace incompat
