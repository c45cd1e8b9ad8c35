#pragma once

#include <optional>
#include <vector>

#include "sccomp/digraph.hpp"

namespace sccomp::internal {

// Exact searches over an extension T[K_{n_1},...,K_{n_t}] compressed by house
// counts: vertices of one house are interchangeable, so walks are searched as
// house-index sequences. Deterministic (next house ascending, so the returned
// sequence is lexicographically least for its anchor).

// Cycle visiting house i exactly counts[i] times; consecutive visits follow
// quotient arcs, so a house never repeats immediately. Empty optional if no
// such cycle exists.
std::optional<std::vector<int>> extension_cycle_exact(const Digraph& quotient,
                                                      const std::vector<int>& counts);

// Path (possibly a single vertex) visiting house i exactly counts[i] times.
std::optional<std::vector<int>> extension_path_exact(const Digraph& quotient,
                                                     const std::vector<int>& counts);

}  // namespace sccomp::internal
