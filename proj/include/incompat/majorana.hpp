#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <json.hpp>
#include <vector>

#include "incompat/graph.hpp"
#include "incompat/limits.hpp"

namespace incompat {

/** i^phase times the ordered product of Majorana operators with the given 1-based labels. */
struct MajoranaMonomial {
  std::vector<int> indices;
  int phase = 0;

  MajoranaMonomial() = default;
  /** Sorts and validates labels; phase defaults to floor(k/2). */
  explicit MajoranaMonomial(std::vector<int> labels);
  MajoranaMonomial(std::vector<int> labels, int phase_exponent);

  int degree() const { return static_cast<int>(indices.size()); }
  bool operator==(const MajoranaMonomial&) const = default;
};

/** True when the two monomials anti-commute: (-1)^(|I||J| - |I∩J|) = -1. */
bool anticommute(const MajoranaMonomial& a, const MajoranaMonomial& b);

struct ObservableSet {
  std::vector<MajoranaMonomial> monomials;
  int modes = 0;

  int qubit_count() const { return (modes + 1) / 2; }
  std::uint64_t dimension() const { return std::uint64_t{1} << qubit_count(); }
  int size() const { return static_cast<int>(monomials.size()); }
};

/** Signed Pauli operator i^phase X^x Z^z, qubit j (1-based) at bit (q - j). */
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int phase = 0;
};

PauliString pauli_of(const MajoranaMonomial& mon, int qubit_count);

/** Jordan-Wigner matrix; throws InvalidParameter when a label exceeds 2*qubit_count. */
Eigen::MatrixXcd monomial_matrix(const MajoranaMonomial& mon, int qubit_count);

/** Dense matrices of all observables; throws CapExceeded above the qubit cap. */
std::vector<Eigen::MatrixXcd> observable_matrices(const ObservableSet& obs, const Limits& limits = {});

/**
 * Graph joining anti-commuting monomials. Identical monomials are rejected
 * unless allow_repeats is set.
 */
Graph anticommutativity_graph(const ObservableSet& obs, bool allow_repeats = false);

nlohmann::json observables_to_json(const ObservableSet& obs);
ObservableSet observables_from_json(const nlohmann::json& j);

}  // namespace incompat
