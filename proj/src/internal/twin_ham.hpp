#pragma once

#include "sccomp/digraph.hpp"

namespace sccomp::internal {

// Exact Hamiltonian-cycle decision. Groups interchangeable twin vertices
// (identical neighborhoods outside the pair, symmetric relation inside) into
// classes and searches over class-count states, which keeps digraphs with
// large twin groups tractable well past the plain bitmask range.
bool hamiltonian_cycle_exists(const Digraph& d);

}  // namespace sccomp::internal
