#pragma once

#include <string>

#include "homog/structure.hpp"

namespace homog {

// The named 4-vertex 3-hypergraphs: c1 has one hyperedge, c3 three, k4 all
// four, k4_minus all but one (isomorphic to c3).
FinStructure catalog_structure(const std::string& name);

// Member of the dense ternary family on universe {0,...,n}: R holds on every
// ordered distinct triple except (0, b, b+1) for 0 < b < n and (0, n, 1).
// Requires n >= 3.
FinStructure build_H_n(int n);

// 3-hypergraph on the vertices of a graph g with a hyperedge on each triple
// spanning an odd number of g-edges.  g must be a symmetric binary structure.
FinStructure build_parity_hypergraph(const FinStructure& g);

// Parity image of a seeded generic graph approximation on `steps` vertices.
FinStructure parity_approximation(int steps, std::uint64_t seed);

}  // namespace homog
