#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <json.hpp>
#include <vector>

#include "incompat/graph.hpp"
#include "incompat/limits.hpp"
#include "incompat/spectral.hpp"

namespace incompat {

/** Edge signs; +1 directs an edge from its lower to its higher endpoint. */
struct Orientation {
  Graph base;
  std::vector<int> signs;

  Orientation() = default;
  Orientation(Graph g, std::vector<int> edge_signs);
  Eigen::MatrixXd skew_matrix() const;
};

SpectralSummary skew_spectrum(const Orientation& o);
double skew_energy(const Orientation& o);

/**
 * One representative per switching class: spanning-tree edges fixed to +1,
 * co-tree signs read from a pattern whose most significant bit is co-tree
 * edge 0 (bit set means sign -1).
 */
class SwitchingClasses {
 public:
  /** Throws InvalidParameter if the edges span more than one component, CapExceeded above the cap. */
  explicit SwitchingClasses(const Graph& g, const Limits& limits = {});

  std::uint64_t count() const { return std::uint64_t{1} << cotree_.size(); }
  const std::vector<int>& tree_edges() const { return tree_; }
  const std::vector<int>& cotree_edges() const { return cotree_; }
  std::vector<int> signs(std::uint64_t pattern) const;
  Orientation representative(std::uint64_t pattern) const;
  std::string pattern_bits(std::uint64_t pattern) const;

 private:
  Graph graph_;
  std::vector<int> tree_;
  std::vector<int> cotree_;
};

struct MaxSkewEnergy {
  double value = 0;
  std::uint64_t pattern = 0;
  std::uint64_t classes = 0;
  Orientation witness;
};

/** Maximum skew energy over all switching classes; ties keep the smallest pattern. */
MaxSkewEnergy max_skew_energy(const Graph& g, const Limits& limits = {});

/** Visits every class representative's skew matrix; stops early when the visitor returns true. */
template <typename Visitor>
bool any_class(const SwitchingClasses& classes, Visitor&& visit) {
  for (std::uint64_t p = 0; p < classes.count(); ++p)
    if (visit(p, classes.representative(p))) return true;
  return false;
}

nlohmann::json orientation_to_json(const SwitchingClasses& classes, std::uint64_t pattern);

}  // namespace incompat
