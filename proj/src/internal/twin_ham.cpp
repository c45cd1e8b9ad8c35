#include "internal/twin_ham.hpp"

#include <cstdint>
#include <vector>

#include "sccomp/errors.hpp"

namespace sccomp::internal {

namespace {

struct ClassGraph {
    std::vector<int> size;
    std::vector<char> dense;              // both arcs between every internal pair
    std::vector<std::vector<char>> arc;   // uniform class-to-class adjacency
};

// relation of v to w ignoring the pair itself: 0 none, 1 v->w only, 2 w->v only, 3 both
int pair_relation(const Digraph& d, int v, int w) {
    return (d.has_arc(v, w) ? 1 : 0) | (d.has_arc(w, v) ? 2 : 0);
}

bool twins(const Digraph& d, int u, int v) {
    if (pair_relation(d, u, v) == 1 || pair_relation(d, u, v) == 2) return false;
    for (int w = 0; w < d.order(); ++w) {
        if (w == u || w == v) continue;
        if (d.has_arc(u, w) != d.has_arc(v, w)) return false;
        if (d.has_arc(w, u) != d.has_arc(w, v)) return false;
    }
    return true;
}

ClassGraph build_classes(const Digraph& d, std::vector<int>& class_of) {
    const int n = d.order();
    class_of.assign(n, -1);
    std::vector<std::vector<int>> members;
    for (int v = 0; v < n; ++v) {
        for (size_t c = 0; c < members.size(); ++c) {
            int internal = pair_relation(d, members[c].front(), v);
            bool ok = true;
            for (int m : members[c])
                if (!twins(d, m, v) || pair_relation(d, m, v) != internal) {
                    ok = false;
                    break;
                }
            // growing a class beyond two members requires one uniform internal type
            if (ok && members[c].size() >= 2) {
                int existing = pair_relation(d, members[c][0], members[c][1]);
                if (existing != internal) ok = false;
            }
            if (ok) {
                class_of[v] = static_cast<int>(c);
                members[c].push_back(v);
                break;
            }
        }
        if (class_of[v] == -1) {
            class_of[v] = static_cast<int>(members.size());
            members.push_back({v});
        }
    }
    ClassGraph g;
    const int m = static_cast<int>(members.size());
    g.size.resize(m);
    g.dense.resize(m);
    g.arc.assign(m, std::vector<char>(m, 0));
    for (int c = 0; c < m; ++c) {
        g.size[c] = static_cast<int>(members[c].size());
        g.dense[c] = members[c].size() >= 2 && d.has_arc(members[c][0], members[c][1]);
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b) g.arc[a][b] = d.has_arc(members[a].front(), members[b].front());
    return g;
}

struct ClassSearch {
    const ClassGraph& g;
    int m;
    std::vector<std::uint64_t> stride;
    std::vector<char> dead;
    std::vector<int> used;
    int remaining = 0;

    explicit ClassSearch(const ClassGraph& graph) : g(graph), m(static_cast<int>(graph.size.size())) {
        stride.resize(m);
        std::uint64_t prod = 1;
        for (int i = 0; i < m; ++i) {
            stride[i] = prod;
            prod *= static_cast<std::uint64_t>(g.size[i] + 1);
            remaining += g.size[i];
        }
        if (prod * m > (std::uint64_t(1) << 24))
            throw ScaleError("twin-compressed Hamilton search: state space too large");
        dead.assign(static_cast<size_t>(prod * m), 0);
        used.assign(m, 0);
    }

    bool step_allowed(int from, int to) const {
        return from == to ? g.dense[from] : g.arc[from][to];
    }

    bool extend(int last, int anchor) {
        if (remaining == 0) return step_allowed(last, anchor);
        std::uint64_t key = 0;
        for (int i = 0; i < m; ++i) key += stride[i] * static_cast<std::uint64_t>(used[i]);
        key = key * m + last;
        if (dead[key]) return false;
        for (int next = 0; next < m; ++next) {
            if (used[next] == g.size[next] || !step_allowed(last, next)) continue;
            ++used[next];
            --remaining;
            if (extend(next, anchor)) return true;
            ++remaining;
            --used[next];
        }
        dead[key] = 1;
        return false;
    }
};

}  // namespace

bool hamiltonian_cycle_exists(const Digraph& d) {
    const int n = d.order();
    if (n < 2) return false;
    std::vector<int> class_of;
    ClassGraph g = build_classes(d, class_of);
    ClassSearch s(g);
    int anchor = class_of[0];
    s.used[anchor] = 1;
    --s.remaining;
    return s.extend(anchor, anchor);
}

}  // namespace sccomp::internal
