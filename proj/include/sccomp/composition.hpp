#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sccomp/digraph.hpp"

namespace sccomp {

/// Maps between flat expansion vertices and (house, local) pairs. The flat
/// index of (i, j) is n_1 + ... + n_{i-1} + j.
struct VertexMap {
    std::vector<std::pair<int, int>> to_house;  // flat -> (house, local)
    std::vector<int> offset;                    // house -> first flat index; size t+1

    int flat(int house, int local) const { return offset[house] + local; }
    int house_of(int flat_vertex) const { return to_house[flat_vertex].first; }
};

/// A composition Q = T[H_1, ..., H_t]: a quotient digraph T on t >= 2
/// vertices plus one house digraph per quotient vertex (orders >= 1).
class Composition {
public:
    Composition(Digraph quotient, std::vector<Digraph> houses);

    const Digraph& quotient() const { return quotient_; }
    const std::vector<Digraph>& houses() const { return houses_; }
    const Digraph& house(int i) const { return houses_[i]; }
    int house_count() const { return static_cast<int>(houses_.size()); }
    int total_order() const { return total_order_; }
    VertexMap vertex_map() const;

    bool operator==(const Composition&) const = default;

private:
    Digraph quotient_;
    std::vector<Digraph> houses_;
    int total_order_ = 0;
};

/// Flat digraph of the composition plus the vertex map. Arc (i,j)->(p,q)
/// exists iff i==p and j->q in H_i, or i!=p and u_i->u_p in T.
std::pair<Digraph, VertexMap> expand(const Composition& c);

/// Decompose a digraph into the composition over its finest house partition
/// (the complement components, ordered by minimum vertex). Returns nothing
/// unless arcs between every ordered pair of parts are uniform and the
/// resulting quotient is semicomplete.
std::optional<Composition> recognize(const Digraph& d);

/// T_1 membership: some vertex joined by a 2-cycle to every other vertex.
/// Rejects non-semicomplete input.
bool is_in_T1(const Digraph& t);

/// Same quotient, every house replaced by the arcless digraph of its order.
Composition to_extension(const Composition& c);

/// True iff the two flat vertices lie in the same house.
bool similar(const Composition& c, int x, int y);

bool is_extension(const Composition& c);
bool has_semicomplete_quotient(const Composition& c);

/// Composition of t trivial (single-vertex) houses over the given quotient.
Composition trivial_composition(const Digraph& quotient);

}  // namespace sccomp
