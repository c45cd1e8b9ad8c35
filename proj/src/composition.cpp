#include "sccomp/composition.hpp"

#include <algorithm>
#include <string>

#include "sccomp/errors.hpp"

namespace sccomp {

Composition::Composition(Digraph quotient, std::vector<Digraph> houses)
    : quotient_(std::move(quotient)), houses_(std::move(houses)) {
    if (houses_.size() < 2) throw ValidationError("a composition needs t >= 2 houses");
    if (static_cast<int>(houses_.size()) != quotient_.order())
        throw ValidationError("house count " + std::to_string(houses_.size()) +
                              " does not match quotient order " +
                              std::to_string(quotient_.order()));
    for (const auto& h : houses_) {
        if (h.order() < 1) throw ValidationError("houses must have at least one vertex");
        total_order_ += h.order();
    }
}

VertexMap Composition::vertex_map() const {
    VertexMap vm;
    vm.offset.resize(houses_.size() + 1, 0);
    vm.to_house.reserve(total_order_);
    for (size_t i = 0; i < houses_.size(); ++i) {
        vm.offset[i + 1] = vm.offset[i] + houses_[i].order();
        for (int j = 0; j < houses_[i].order(); ++j)
            vm.to_house.emplace_back(static_cast<int>(i), j);
    }
    return vm;
}

std::pair<Digraph, VertexMap> expand(const Composition& c) {
    VertexMap vm = c.vertex_map();
    const int n = c.total_order();
    std::vector<Arc> arcs;
    // generated in lexicographic order: flat sources ascending, targets ascending
    for (int u = 0; u < n; ++u) {
        auto [hu, lu] = vm.to_house[u];
        if (n <= 64) {
            std::uint64_t row = 0;
            for (int hv = 0; hv < c.house_count(); ++hv) {
                if (hv == hu) continue;
                if (c.quotient().has_arc(hu, hv)) {
                    std::uint64_t block = (c.house(hv).order() == 64)
                                              ? ~std::uint64_t(0)
                                              : ((std::uint64_t(1) << c.house(hv).order()) - 1);
                    row |= block << vm.offset[hv];
                }
            }
            for (int lv : c.house(hu).out_neighbors(lu)) row |= std::uint64_t(1) << vm.flat(hu, lv);
            for (int v = 0; v < n; ++v)
                if ((row >> v) & 1) arcs.emplace_back(u, v);
        } else {
            for (int v = 0; v < n; ++v) {
                auto [hv, lv] = vm.to_house[v];
                bool arc = (hu == hv) ? c.house(hu).has_arc(lu, lv)
                                      : c.quotient().has_arc(hu, hv);
                if (arc) arcs.emplace_back(u, v);
            }
        }
    }
    return {Digraph::from_sorted_unchecked(n, std::move(arcs)), std::move(vm)};
}

std::optional<Composition> recognize(const Digraph& d) {
    auto parts = complement_components(d);
    const int t = static_cast<int>(parts.size());
    if (t < 2) return std::nullopt;
    // arcs between every ordered pair of parts must be all-present or all-absent
    std::vector<Arc> qarcs;
    for (int a = 0; a < t; ++a) {
        for (int b = 0; b < t; ++b) {
            if (a == b) continue;
            int present = 0, total = 0;
            for (int u : parts[a])
                for (int v : parts[b]) {
                    ++total;
                    if (d.has_arc(u, v)) ++present;
                }
            if (present != 0 && present != total) return std::nullopt;
            if (present == total) qarcs.emplace_back(a, b);
        }
    }
    std::sort(qarcs.begin(), qarcs.end());
    Digraph quotient(t, std::move(qarcs));
    if (!is_semicomplete(quotient)) return std::nullopt;
    std::vector<Digraph> houses;
    houses.reserve(t);
    for (const auto& part : parts) houses.push_back(d.induced(part));
    return Composition(std::move(quotient), std::move(houses));
}

bool is_in_T1(const Digraph& t) {
    if (!is_semicomplete(t)) throw PreconditionError("T_1 membership is defined for semicomplete digraphs");
    const int n = t.order();
    for (int u = 0; u < n; ++u) {
        bool all = true;
        for (int v = 0; v < n && all; ++v)
            if (v != u && !(t.has_arc(u, v) && t.has_arc(v, u))) all = false;
        if (all) return true;
    }
    return false;
}

Composition to_extension(const Composition& c) {
    std::vector<Digraph> houses;
    houses.reserve(c.house_count());
    for (const auto& h : c.houses()) houses.push_back(arcless(h.order()));
    return Composition(c.quotient(), std::move(houses));
}

bool similar(const Composition& c, int x, int y) {
    const int n = c.total_order();
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw ValidationError("vertex index outside [0," + std::to_string(n) + ")");
    VertexMap vm = c.vertex_map();
    return vm.house_of(x) == vm.house_of(y);
}

bool is_extension(const Composition& c) {
    for (const auto& h : c.houses())
        if (h.arc_count() > 0) return false;
    return true;
}

bool has_semicomplete_quotient(const Composition& c) { return is_semicomplete(c.quotient()); }

Composition trivial_composition(const Digraph& quotient) {
    std::vector<Digraph> houses(quotient.order(), arcless(1));
    return Composition(quotient, std::move(houses));
}

}  // namespace sccomp
