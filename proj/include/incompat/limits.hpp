#pragma once

#include <cstdint>

namespace incompat {

/** Size limits shared by all modules. */
struct Limits {
  int transitivity_max_vertices = 12;
  int isomorphism_max_vertices = 64;
  int exact_max_vertices = 40;
  int independent_sets_max_vertices = 30;
  int lovasz_max_vertices = 80;
  double sdp_max_variable_dim = 4e6;
  std::uint64_t max_switching_classes = std::uint64_t{1} << 24;
  int signing_max_vertices = 24;
  int max_qubits = 13;
  int minimal_rank_max = 24;
  std::uint64_t degree_family_max = 100000;
  int exact_sdp_max_observables = 6;
  int exact_sdp_max_dimension = 16;
  int subgraph_search_max_vertices = 16;
  unsigned threads = 1;

  /** Defaults overridden by INCOMPAT_MAX_SDP_DIM, INCOMPAT_MAX_CLASSES, INCOMPAT_THREADS. */
  static Limits from_environment();
};

}  // namespace incompat
