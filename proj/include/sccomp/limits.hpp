#pragma once

#include "sccomp/errors.hpp"

namespace sccomp {

// Bounds for the exact-search operations. Everything here is a hard refusal
// threshold, not a heuristic: an operation that would exceed its bound throws
// ScaleError instead of running for hours.
struct Limits {
    int pc_exact = 12;        // exact path-cover search
    int subdigraph_enum = 10; // exhaustive path/cycle-subdigraph enumeration
    int ham_exact = 14;       // exact Hamilton path/cycle search
    int separator_enum = 16;  // exhaustive minimal-separator enumeration

    // fixed oracle preconditions
    int bf_ham = 12;
    int bf_pc = 10;
    int bf_pancyclic = 10;
    int bf_separators = 8;
    int bf_min_spanning = 8;

    void require(int n, int bound, const char* op) const {
        if (n > bound)
            throw ScaleError(std::string(op) + ": order " + std::to_string(n) +
                             " exceeds the exact-search bound " + std::to_string(bound));
    }
};

}  // namespace sccomp
