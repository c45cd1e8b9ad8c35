#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sccomp/composition.hpp"
#include "sccomp/digraph.hpp"
#include "sccomp/limits.hpp"

namespace sccomp {

/// Disjoint paths and cycles over a host digraph's vertices. Cycles are
/// stored open (the closing arc back to the front is implicit) and have
/// length >= 2; a path may be a single vertex.
struct PathCycleSubdigraph {
    std::vector<std::vector<int>> paths;
    std::vector<std::vector<int>> cycles;

    int covered_count() const;
    std::vector<int> vertices() const;  // ascending
};

struct CoverageProfile {
    std::vector<int> per_house;

    bool operator==(const CoverageProfile&) const = default;
};

/// Arc-level validation: vertices in range and globally distinct, every
/// consecutive pair joined by a host arc, cycles closed and of length >= 2.
bool validate_subdigraph(const Digraph& host, const PathCycleSubdigraph& f,
                         std::string* why = nullptr);
bool is_spanning(const Digraph& host, const PathCycleSubdigraph& f);

/// Spanning disjoint cycles, via a perfect matching between out- and
/// in-copies of the vertices. Empty optional when none exists.
std::optional<PathCycleSubdigraph> cycle_factor(const Digraph& d);

/// Spanning subdigraph of exactly one path (possibly trivial) plus disjoint
/// cycles, via a cycle factor of the digraph augmented with one vertex that
/// dominates and is dominated by everything.
std::optional<PathCycleSubdigraph> one_path_cycle_factor(const Digraph& d);

/// Cycle subdigraph of an extension maximizing covered vertices of one house
/// (objective_house set) or of all houses together (objective_house empty).
/// Rejects non-extension input or a non-semicomplete quotient.
std::pair<PathCycleSubdigraph, CoverageProfile> max_coverage_cycle_subdigraph(
    const Composition& extension, std::optional<int> objective_house);

/// Per-house coverage maxima m_i, all houses at once (one circulation).
CoverageProfile coverage_maxima(const Composition& extension);

/// Cycle subdigraph of an extension covering at least bounds[i] vertices of
/// house i, via a feasible circulation with lower bounds aggregated per
/// house. Empty optional = verified absence.
std::optional<PathCycleSubdigraph> cycle_subdigraph_with_lower_bounds(
    const Composition& extension, const std::vector<int>& bounds);

/// pc(D). Acyclic extended semicomplete digraphs take the independence-number
/// fast path; everything else is exact search up to limits.pc_exact.
int path_cover_number(const Digraph& d, const Limits& limits = {});

/// A spanning set of exactly k disjoint paths, or absence. k >= pc is padded
/// by splitting paths.
std::optional<std::vector<std::vector<int>>> path_factor(const Digraph& d, int k,
                                                         const Limits& limits = {});

/// The coverage profile shared by every maximum k-path subdigraph of the
/// expansion. Enumerates all maximum k-path subdigraph vertex sets; if two of
/// them disagree on a house count, throws VerificationAlarm (that would
/// contradict the uniqueness theorem).
CoverageProfile k_path_coverage_profile(const Composition& c, int k,
                                        const Limits& limits = {});

/// All profiles for k = 1..n in one sweep (shares the per-instance tables).
std::vector<CoverageProfile> k_path_coverage_profiles(const Composition& c,
                                                      const Limits& limits = {});

/// Largest house-count over any k-path subdigraph (the l_{i,k} numbers).
std::vector<int> max_house_coverage_k_paths(const Composition& c, int k,
                                            const Limits& limits = {});

}  // namespace sccomp
