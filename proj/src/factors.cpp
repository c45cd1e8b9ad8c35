#include "sccomp/factors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "internal/flow.hpp"
#include "sccomp/errors.hpp"

namespace sccomp {

namespace {
constexpr int kMaskBound = 20;  // hard memory guard for the bitmask tables
}

int PathCycleSubdigraph::covered_count() const {
    int c = 0;
    for (const auto& p : paths) c += static_cast<int>(p.size());
    for (const auto& k : cycles) c += static_cast<int>(k.size());
    return c;
}

std::vector<int> PathCycleSubdigraph::vertices() const {
    std::vector<int> vs;
    for (const auto& p : paths) vs.insert(vs.end(), p.begin(), p.end());
    for (const auto& k : cycles) vs.insert(vs.end(), k.begin(), k.end());
    std::sort(vs.begin(), vs.end());
    return vs;
}

bool validate_subdigraph(const Digraph& host, const PathCycleSubdigraph& f, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::vector<char> seen(host.order(), 0);
    auto claim = [&](int v) {
        if (v < 0 || v >= host.order() || seen[v]) return false;
        seen[v] = 1;
        return true;
    };
    for (const auto& p : f.paths) {
        if (p.empty()) return fail("empty path");
        for (int v : p)
            if (!claim(v)) return fail("vertex " + std::to_string(v) + " repeated or out of range");
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (!host.has_arc(p[i], p[i + 1]))
                return fail("missing arc (" + std::to_string(p[i]) + "," + std::to_string(p[i + 1]) + ")");
    }
    for (const auto& k : f.cycles) {
        if (k.size() < 2) return fail("cycle shorter than 2");
        for (int v : k)
            if (!claim(v)) return fail("vertex " + std::to_string(v) + " repeated or out of range");
        for (size_t i = 0; i < k.size(); ++i)
            if (!host.has_arc(k[i], k[(i + 1) % k.size()]))
                return fail("missing cycle arc (" + std::to_string(k[i]) + "," +
                            std::to_string(k[(i + 1) % k.size()]) + ")");
    }
    return true;
}

bool is_spanning(const Digraph& host, const PathCycleSubdigraph& f) {
    return f.covered_count() == host.order();
}

namespace {

void canonicalize(PathCycleSubdigraph& f) {
    for (auto& k : f.cycles) {
        auto least = std::min_element(k.begin(), k.end());
        std::rotate(k.begin(), least, k.end());
    }
    std::sort(f.cycles.begin(), f.cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::sort(f.paths.begin(), f.paths.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

// Kuhn's augmenting-path matching between out-copies and in-copies.
std::optional<std::vector<int>> successor_assignment(const Digraph& d) {
    const int n = d.order();
    std::vector<int> match_in(n, -1), match_out(n, -1);
    std::vector<char> visited(n, 0);
    auto augment = [&](auto&& self, int u) -> bool {
        for (int v : d.out_neighbors(u)) {
            if (visited[v]) continue;
            visited[v] = 1;
            if (match_in[v] == -1 || self(self, match_in[v])) {
                match_in[v] = u;
                match_out[u] = v;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < n; ++u) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(augment, u)) return std::nullopt;
    }
    return match_out;
}

PathCycleSubdigraph cycles_from_successors(const std::vector<int>& succ) {
    const int n = static_cast<int>(succ.size());
    PathCycleSubdigraph f;
    std::vector<char> used(n, 0);
    for (int s = 0; s < n; ++s) {
        if (used[s]) continue;
        std::vector<int> cyc;
        int v = s;
        do {
            used[v] = 1;
            cyc.push_back(v);
            v = succ[v];
        } while (v != s);
        f.cycles.push_back(std::move(cyc));
    }
    return f;
}

}  // namespace

std::optional<PathCycleSubdigraph> cycle_factor(const Digraph& d) {
    if (d.order() == 0) return PathCycleSubdigraph{};
    auto succ = successor_assignment(d);
    if (!succ) return std::nullopt;
    auto f = cycles_from_successors(*succ);
    canonicalize(f);
    return f;
}

std::optional<PathCycleSubdigraph> one_path_cycle_factor(const Digraph& d) {
    const int n = d.order();
    if (n == 0) return std::nullopt;
    std::vector<Arc> arcs = d.arcs();
    for (int v = 0; v < n; ++v) {
        arcs.emplace_back(n, v);
        arcs.emplace_back(v, n);
    }
    std::sort(arcs.begin(), arcs.end());
    Digraph aug = Digraph::from_sorted_unchecked(n + 1, std::move(arcs));
    auto succ = successor_assignment(aug);
    if (!succ) return std::nullopt;
    auto cycles = cycles_from_successors(*succ);
    PathCycleSubdigraph f;
    for (auto& k : cycles.cycles) {
        auto aux = std::find(k.begin(), k.end(), n);
        if (aux == k.end()) {
            f.cycles.push_back(std::move(k));
        } else {
            // reopen the cycle through the auxiliary vertex into the path
            std::rotate(k.begin(), aux, k.end());
            f.paths.emplace_back(k.begin() + 1, k.end());
        }
    }
    canonicalize(f);
    return f;
}

namespace {

struct HouseCirculation {
    std::vector<int> node_flow;                   // units through each house
    std::vector<std::vector<int>> arc_flow;       // t x t cross-arc flows
};

// Lifts a quotient-level circulation into concrete vertex-disjoint cycles.
PathCycleSubdigraph lift_circulation(const Composition& ext, const HouseCirculation& circ) {
    const int t = ext.house_count();
    VertexMap vm = ext.vertex_map();
    std::vector<int> next_vertex(t, 0);
    auto arc_flow = circ.arc_flow;
    std::vector<int> remaining = circ.node_flow;
    PathCycleSubdigraph f;
    // peel simple quotient cycles, extracting sub-cycles on revisit
    for (int s = 0; s < t; ++s) {
        while (remaining[s] > 0) {
            std::vector<int> stack{s};
            std::vector<char> on_stack(t, 0);
            on_stack[s] = 1;
            for (;;) {
                int u = stack.back();
                int w = -1;
                for (int cand = 0; cand < t; ++cand)
                    if (arc_flow[u][cand] > 0) {
                        w = cand;
                        break;
                    }
                if (w == -1) throw VerificationAlarm("circulation decomposition stalled");
                if (on_stack[w]) {
                    auto begin = std::find(stack.begin(), stack.end(), w);
                    std::vector<int> houses(begin, stack.end());
                    std::vector<int> cyc;
                    for (size_t i = 0; i < houses.size(); ++i) {
                        int a = houses[i], b = houses[(i + 1) % houses.size()];
                        arc_flow[a][b]--;
                        remaining[a]--;
                        cyc.push_back(vm.flat(a, next_vertex[a]++));
                    }
                    f.cycles.push_back(std::move(cyc));
                    for (auto it = begin; it != stack.end(); ++it) on_stack[*it] = 0;
                    stack.erase(begin, stack.end());
                    if (stack.empty()) break;
                    // the remaining prefix still carries flow; keep walking from its top
                    for (int v : stack) on_stack[v] = 1;
                } else {
                    stack.push_back(w);
                    on_stack[w] = 1;
                }
            }
        }
    }
    canonicalize(f);
    return f;
}

void require_extension(const Composition& c, const char* op) {
    if (!is_extension(c)) throw PreconditionError(std::string(op) + ": houses must be arcless");
    if (!has_semicomplete_quotient(c))
        throw PreconditionError(std::string(op) + ": quotient must be semicomplete");
}

}  // namespace

CoverageProfile coverage_maxima(const Composition& ext) {
    require_extension(ext, "coverage_maxima");
    const int t = ext.house_count();
    const int inf = ext.total_order() + 1;
    CoverageProfile m;
    m.per_house.resize(t);
    for (int i = 0; i < t; ++i) {
        // max units routable out of house i and back; the internal arc of i is
        // replaced by the source/sink pair
        internal::FlowNet net(2 * t);
        for (int j = 0; j < t; ++j)
            if (j != i) net.add_edge(j, t + j, ext.house(j).order());
        for (const auto& [a, b] : ext.quotient().arcs()) net.add_edge(t + a, b);
        int flow = net.max_flow(t + i, i);
        m.per_house[i] = std::min(flow, ext.house(i).order());
    }
    return m;
}

std::pair<PathCycleSubdigraph, CoverageProfile> max_coverage_cycle_subdigraph(
    const Composition& ext, std::optional<int> objective_house) {
    require_extension(ext, "max_coverage_cycle_subdigraph");
    const int t = ext.house_count();
    if (objective_house && (*objective_house < 0 || *objective_house >= t))
        throw ValidationError("objective house out of range");

    // circulation network: house i splits into in-node i and out-node t+i
    internal::FlowNet net(2 * t);
    std::vector<int> internal_edge(t);
    for (int i = 0; i < t; ++i) {
        int cost = 0;
        if (!objective_house || *objective_house == i) cost = -1;
        internal_edge[i] = net.add_edge(i, t + i, ext.house(i).order(), cost);
    }
    std::vector<std::vector<int>> cross_edge(t, std::vector<int>(t, -1));
    for (const auto& [a, b] : ext.quotient().arcs()) cross_edge[a][b] = net.add_edge(t + a, b, ext.total_order());
    net.cancel_negative_cycles();

    HouseCirculation circ;
    circ.node_flow.resize(t);
    circ.arc_flow.assign(t, std::vector<int>(t, 0));
    for (int i = 0; i < t; ++i) circ.node_flow[i] = net.flow_on(internal_edge[i]);
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
            if (cross_edge[a][b] >= 0) circ.arc_flow[a][b] = net.flow_on(cross_edge[a][b]);

    CoverageProfile profile;
    profile.per_house = circ.node_flow;
    return {lift_circulation(ext, circ), std::move(profile)};
}

std::optional<PathCycleSubdigraph> cycle_subdigraph_with_lower_bounds(
    const Composition& ext, const std::vector<int>& bounds) {
    require_extension(ext, "cycle_subdigraph_with_lower_bounds");
    const int t = ext.house_count();
    if (static_cast<int>(bounds.size()) != t)
        throw ValidationError("one lower bound per house required");
    for (int i = 0; i < t; ++i)
        if (bounds[i] < 0 || bounds[i] > ext.house(i).order())
            throw ValidationError("lower bound " + std::to_string(bounds[i]) +
                                  " outside [0," + std::to_string(ext.house(i).order()) + "]");

    // classic lower-bound transform: internal arc of house i carries [b_i, n_i]
    internal::FlowNet net(2 * t + 2);
    const int src = 2 * t, snk = 2 * t + 1;
    std::vector<int> internal_edge(t);
    for (int i = 0; i < t; ++i) {
        internal_edge[i] = net.add_edge(i, t + i, ext.house(i).order() - bounds[i]);
        if (bounds[i] > 0) {
            net.add_edge(src, t + i, bounds[i]);
            net.add_edge(i, snk, bounds[i]);
        }
    }
    std::vector<std::vector<int>> cross_edge(t, std::vector<int>(t, -1));
    for (const auto& [a, b] : ext.quotient().arcs()) cross_edge[a][b] = net.add_edge(t + a, b, ext.total_order());
    int need = std::accumulate(bounds.begin(), bounds.end(), 0);
    if (net.max_flow(src, snk) != need) return std::nullopt;

    HouseCirculation circ;
    circ.node_flow.resize(t);
    circ.arc_flow.assign(t, std::vector<int>(t, 0));
    for (int i = 0; i < t; ++i) circ.node_flow[i] = bounds[i] + net.flow_on(internal_edge[i]);
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
            if (cross_edge[a][b] >= 0) circ.arc_flow[a][b] = net.flow_on(cross_edge[a][b]);
    return lift_circulation(ext, circ);
}

namespace {

struct MaskTables {
    int n = 0;
    std::vector<std::uint64_t> hp_end;  // ends of Hamilton paths per vertex set
    std::vector<int> min_paths;         // minimum path partition per vertex set
};

MaskTables build_mask_tables(const Digraph& d) {
    MaskTables tab;
    const int n = tab.n = d.order();
    const std::uint64_t full = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    tab.hp_end.assign(full + 1, 0);
    for (int v = 0; v < n; ++v) tab.hp_end[std::uint64_t(1) << v] = std::uint64_t(1) << v;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        std::uint64_t ends = tab.hp_end[mask];
        if (!ends) continue;
        for (std::uint64_t e = ends; e;) {
            int v = std::countr_zero(e);
            e &= e - 1;
            std::uint64_t ext = d.out_mask(v) & ~mask;
            while (ext) {
                int w = std::countr_zero(ext);
                ext &= ext - 1;
                tab.hp_end[mask | (std::uint64_t(1) << w)] |= std::uint64_t(1) << w;
            }
        }
    }
    tab.min_paths.assign(full + 1, n + 1);
    tab.min_paths[0] = 0;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        std::uint64_t low = mask & (~mask + 1);
        for (std::uint64_t sub = mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low) || !tab.hp_end[sub]) continue;
            int cand = 1 + tab.min_paths[mask ^ sub];
            if (cand < tab.min_paths[mask]) tab.min_paths[mask] = cand;
        }
    }
    return tab;
}

// lexicographically least Hamilton path of the vertices in `mask`
std::optional<std::vector<int>> ham_path_in_mask(const Digraph& d, std::uint64_t mask) {
    int count = std::popcount(mask);
    if (count == 0) return std::nullopt;
    std::vector<std::uint64_t> dead_state;  // (mask,last) pairs proven hopeless
    std::vector<char> dead((std::uint64_t(1) << d.order()) * d.order(), 0);
    std::vector<int> path;
    auto rec = [&](auto&& self, std::uint64_t used, int last) -> bool {
        if (used == mask) return true;
        std::uint64_t key = used * d.order() + last;
        if (dead[key]) return false;
        std::uint64_t cand = d.out_mask(last) & mask & ~used;
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            path.push_back(w);
            if (self(self, used | (std::uint64_t(1) << w), w)) return true;
            path.pop_back();
        }
        dead[key] = 1;
        return false;
    };
    for (std::uint64_t s = mask; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        path = {v};
        if (rec(rec, std::uint64_t(1) << v, v)) return path;
    }
    return std::nullopt;
}

}  // namespace

int path_cover_number(const Digraph& d, const Limits& limits) {
    const int n = d.order();
    if (n == 0) return 0;
    if (d.arc_count() == 0) return n;
    if (is_acyclic(d)) {
        // independence-number fast path for acyclic extended semicomplete digraphs
        if (auto comp = recognize(d); comp && is_extension(*comp)) {
            int best = 0;
            for (const auto& h : comp->houses()) best = std::max(best, h.order());
            return best;
        }
    }
    limits.require(n, limits.pc_exact, "path_cover_number");
    limits.require(n, kMaskBound, "path_cover_number");
    auto tab = build_mask_tables(d);
    return tab.min_paths.back();
}

std::optional<std::vector<std::vector<int>>> path_factor(const Digraph& d, int k,
                                                         const Limits& limits) {
    const int n = d.order();
    if (k < 1 || k > n) return std::nullopt;
    limits.require(n, limits.pc_exact, "path_factor");
    limits.require(n, kMaskBound, "path_factor");
    auto tab = build_mask_tables(d);
    if (tab.min_paths.back() > k) return std::nullopt;
    // reconstruct one minimum partition, first matching submask wins
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    std::vector<std::uint64_t> pieces;
    std::uint64_t rest = full;
    while (rest) {
        std::uint64_t low = rest & (~rest + 1);
        for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
            if ((sub & low) && tab.hp_end[sub] &&
                1 + tab.min_paths[rest ^ sub] == tab.min_paths[rest]) {
                pieces.push_back(sub);
                rest ^= sub;
                break;
            }
            if (sub == 0) throw VerificationAlarm("path partition reconstruction failed");
        }
    }
    std::vector<std::vector<int>> paths;
    for (std::uint64_t piece : pieces) {
        auto p = ham_path_in_mask(d, piece);
        if (!p) throw VerificationAlarm("path piece lost its Hamilton path");
        paths.push_back(std::move(*p));
    }
    // pad to exactly k paths by splitting off heads
    while (static_cast<int>(paths.size()) < k) {
        bool split = false;
        for (auto& p : paths)
            if (p.size() >= 2) {
                std::vector<int> head{p.front()};
                p.erase(p.begin());
                paths.push_back(std::move(head));
                split = true;
                break;
            }
        if (!split) return std::nullopt;
    }
    std::sort(paths.begin(), paths.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return paths;
}

namespace {

std::vector<std::uint64_t> house_masks(const Composition& c) {
    VertexMap vm = c.vertex_map();
    std::vector<std::uint64_t> hm(c.house_count(), 0);
    for (int v = 0; v < c.total_order(); ++v)
        hm[vm.house_of(v)] |= std::uint64_t(1) << v;
    return hm;
}

}  // namespace

std::vector<CoverageProfile> k_path_coverage_profiles(const Composition& c, const Limits& limits) {
    auto [q, vm] = expand(c);
    const int n = q.order();
    limits.require(n, limits.subdigraph_enum, "k_path_coverage_profile");
    limits.require(n, kMaskBound, "k_path_coverage_profile");
    auto tab = build_mask_tables(q);
    auto hm = house_masks(c);
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    std::vector<CoverageProfile> out;
    for (int k = 1; k <= n; ++k) {
        int best = -1;
        for (std::uint64_t mask = 0; mask <= full; ++mask)
            if (tab.min_paths[mask] <= k && k <= std::popcount(mask))
                best = std::max(best, std::popcount(mask));
        CoverageProfile profile;
        bool first = true;
        for (std::uint64_t mask = 0; mask <= full; ++mask) {
            if (std::popcount(mask) != best || tab.min_paths[mask] > k) continue;
            CoverageProfile p;
            for (auto m : hm) p.per_house.push_back(std::popcount(mask & m));
            if (first) {
                profile = std::move(p);
                first = false;
            } else if (!(p == profile)) {
                throw VerificationAlarm(
                    "two maximum k-path subdigraphs disagree on a house count (k=" +
                    std::to_string(k) + ")");
            }
        }
        out.push_back(std::move(profile));
    }
    return out;
}

CoverageProfile k_path_coverage_profile(const Composition& c, int k, const Limits& limits) {
    const int n = c.total_order();
    if (k < 1) throw ValidationError("k must be positive");
    if (k > n) k = n;  // beyond n every vertex is its own path already
    return k_path_coverage_profiles(c, limits)[k - 1];
}

std::vector<int> max_house_coverage_k_paths(const Composition& c, int k, const Limits& limits) {
    auto [q, vm] = expand(c);
    const int n = q.order();
    limits.require(n, limits.subdigraph_enum, "max_house_coverage_k_paths");
    limits.require(n, kMaskBound, "max_house_coverage_k_paths");
    if (k > n) k = n;
    auto tab = build_mask_tables(q);
    auto hm = house_masks(c);
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    std::vector<int> best(c.house_count(), 0);
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        if (!(tab.min_paths[mask] <= k && k <= std::popcount(mask))) continue;
        for (size_t i = 0; i < hm.size(); ++i)
            best[i] = std::max(best[i], std::popcount(mask & hm[i]));
    }
    return best;
}

}  // namespace sccomp
