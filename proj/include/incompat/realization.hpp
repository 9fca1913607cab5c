#pragma once

#include "incompat/graph.hpp"
#include "incompat/limits.hpp"
#include "incompat/majorana.hpp"

namespace incompat {

/**
 * One monomial per vertex: the labels of its incident edges (edge i gets
 * label i+1), padded with a fresh auxiliary label when the degree is odd.
 */
ObservableSet realize_majorana(const Graph& g);

/** Pauli strings on f2_rank(g)/2 qubits, written as Majorana monomials. */
ObservableSet realize_minimal(const Graph& g, const Limits& limits = {});

/** All degree-k monomials over n_modes labels, in colex order. */
ObservableSet degree_k_family(int n_modes, int k, const Limits& limits = {});

/** Quadratic monomials over root vertices, one per root edge; realises L(root). */
ObservableSet realize_quadratic_line(const Graph& root);

}  // namespace incompat
