#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sccomp {

using Arc = std::pair<int, int>;

/// Finite simple digraph on vertices 0..n-1. Loops are rejected; a 2-cycle is
/// stored as two independent arcs. Arcs iterate in (u,v) lexicographic order,
/// so identical inputs always serialize identically.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<Arc> arcs);  // validates range/loops/duplicates

    int order() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool has_arc(int u, int v) const;
    bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

    std::span<const int> out_neighbors(int v) const;
    std::span<const int> in_neighbors(int v) const;
    int out_degree(int v) const { return out_off_[v + 1] - out_off_[v]; }
    int in_degree(int v) const { return in_off_[v + 1] - in_off_[v]; }

    // adjacency rows as bitmasks; meaningful only while order() <= 64
    std::uint64_t out_mask(int v) const { return out_mask_[v]; }
    std::uint64_t in_mask(int v) const { return in_mask_[v]; }
    bool small() const { return n_ <= 64; }

    /// Subdigraph induced by the given vertices (ascending), relabeled 0..k-1.
    Digraph induced(std::span<const int> vertices) const;
    /// Subdigraph induced by a vertex bitmask; requires order() <= 64.
    Digraph induced_mask(std::uint64_t keep) const;
    Digraph reversed() const;

    bool operator==(const Digraph& other) const {
        return n_ == other.n_ && arcs_ == other.arcs_;
    }

    /// Trusted constructor for arcs already sorted, deduplicated and valid.
    static Digraph from_sorted_unchecked(int n, std::vector<Arc> arcs);

private:
    void build_index();

    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<int> out_flat_, out_off_{0}, in_flat_, in_off_{0};
    std::vector<std::uint64_t> out_mask_, in_mask_;
};

struct Branching {
    int root = -1;
    std::vector<Arc> arcs;  // n-1 arcs, lexicographic
};

struct StrongComponentReport {
    std::vector<std::vector<int>> components;  // sorted by minimum vertex
    std::vector<int> component_of;             // vertex -> component index
    Digraph condensation;                      // acyclic, on component indices
    std::vector<int> initial;                  // component indices, ascending
    std::vector<int> terminal;
};

StrongComponentReport strong_components(const Digraph& d);
bool is_strong(const Digraph& d);
bool is_acyclic(const Digraph& d);
bool is_semicomplete(const Digraph& d);

/// Connected components of the complement of the underlying graph U(D),
/// ordered by minimum vertex, vertices ascending within each part.
std::vector<std::vector<int>> complement_components(const Digraph& d);

/// Spanning out-/in-branchings. Each exists iff the condensation has exactly
/// one initial (resp. terminal) component; absence is an empty optional.
std::pair<std::optional<Branching>, std::optional<Branching>> branchings(const Digraph& d);

// convenience constructors used all over the test suites
Digraph directed_cycle(int n);
Digraph directed_path(int n);
Digraph complete_digraph(int n);  // both arcs on every pair
Digraph arcless(int n);

}  // namespace sccomp
