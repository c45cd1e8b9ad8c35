#include "sccomp/digraph.hpp"

#include <algorithm>
#include <string>

#include "sccomp/errors.hpp"

namespace sccomp {

namespace {

std::string arc_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 0) throw ValidationError("vertex count must be non-negative");
    for (const auto& [u, v] : arcs_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw ValidationError("arc " + arc_str(u, v) + " has a vertex outside [0," +
                                  std::to_string(n_) + ")");
        if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    }
    std::sort(arcs_.begin(), arcs_.end());
    auto dup = std::adjacent_find(arcs_.begin(), arcs_.end());
    if (dup != arcs_.end())
        throw ValidationError("duplicate arc " + arc_str(dup->first, dup->second));
    build_index();
}

Digraph Digraph::from_sorted_unchecked(int n, std::vector<Arc> arcs) {
    Digraph d;
    d.n_ = n;
    d.arcs_ = std::move(arcs);
    d.build_index();
    return d;
}

void Digraph::build_index() {
    out_off_.assign(n_ + 1, 0);
    in_off_.assign(n_ + 1, 0);
    for (const auto& [u, v] : arcs_) {
        ++out_off_[u + 1];
        ++in_off_[v + 1];
    }
    for (int i = 0; i < n_; ++i) {
        out_off_[i + 1] += out_off_[i];
        in_off_[i + 1] += in_off_[i];
    }
    out_flat_.resize(arcs_.size());
    in_flat_.resize(arcs_.size());
    std::vector<int> pos = in_off_;
    int k = 0;
    for (const auto& [u, v] : arcs_) {
        out_flat_[k++] = v;  // arcs_ is lexicographic, so this fills in order
        in_flat_[pos[v]++] = u;
    }
    if (n_ <= 64) {
        out_mask_.assign(n_, 0);
        in_mask_.assign(n_, 0);
        for (const auto& [u, v] : arcs_) {
            out_mask_[u] |= std::uint64_t(1) << v;
            in_mask_[v] |= std::uint64_t(1) << u;
        }
    } else {
        out_mask_.clear();
        in_mask_.clear();
    }
}

bool Digraph::has_arc(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    if (n_ <= 64) return (out_mask_[u] >> v) & 1;
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

std::span<const int> Digraph::out_neighbors(int v) const {
    return {out_flat_.data() + out_off_[v], static_cast<size_t>(out_degree(v))};
}

std::span<const int> Digraph::in_neighbors(int v) const {
    return {in_flat_.data() + in_off_[v], static_cast<size_t>(in_degree(v))};
}

Digraph Digraph::induced(std::span<const int> vertices) const {
    std::vector<int> index(n_, -1);
    for (size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<Arc> arcs;
    for (const auto& [u, v] : arcs_)
        if (index[u] >= 0 && index[v] >= 0) arcs.emplace_back(index[u], index[v]);
    std::sort(arcs.begin(), arcs.end());
    return from_sorted_unchecked(static_cast<int>(vertices.size()), std::move(arcs));
}

Digraph Digraph::induced_mask(std::uint64_t keep) const {
    std::vector<int> vs;
    for (int v = 0; v < n_; ++v)
        if ((keep >> v) & 1) vs.push_back(v);
    return induced(vs);
}

Digraph Digraph::reversed() const {
    std::vector<Arc> arcs;
    arcs.reserve(arcs_.size());
    for (const auto& [u, v] : arcs_) arcs.emplace_back(v, u);
    std::sort(arcs.begin(), arcs.end());
    return from_sorted_unchecked(n_, std::move(arcs));
}

namespace {

// Iterative Tarjan; emits components in reverse topological order.
std::vector<std::vector<int>> tarjan_components(const Digraph& d) {
    const int n = d.order();
    std::vector<int> index(n, -1), low(n, 0), stack, frame_v, frame_i;
    std::vector<char> on_stack(n, 0);
    std::vector<std::vector<int>> comps;
    int counter = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        frame_v = {root};
        frame_i = {0};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frame_v.empty()) {
            int v = frame_v.back();
            auto outs = d.out_neighbors(v);
            if (frame_i.back() < static_cast<int>(outs.size())) {
                int w = outs[frame_i.back()++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frame_v.push_back(w);
                    frame_i.push_back(0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    std::vector<int> comp;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                    } while (w != v);
                    std::sort(comp.begin(), comp.end());
                    comps.push_back(std::move(comp));
                }
                frame_v.pop_back();
                frame_i.pop_back();
                if (!frame_v.empty()) {
                    int parent = frame_v.back();
                    low[parent] = std::min(low[parent], low[v]);
                }
            }
        }
    }
    return comps;
}

}  // namespace

StrongComponentReport strong_components(const Digraph& d) {
    StrongComponentReport rep;
    rep.components = tarjan_components(d);
    std::sort(rep.components.begin(), rep.components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    const int n = d.order();
    const int k = static_cast<int>(rep.components.size());
    rep.component_of.assign(n, -1);
    for (int c = 0; c < k; ++c)
        for (int v : rep.components[c]) rep.component_of[v] = c;
    std::vector<Arc> carcs;
    for (const auto& [u, v] : d.arcs()) {
        int cu = rep.component_of[u], cv = rep.component_of[v];
        if (cu != cv) carcs.emplace_back(cu, cv);
    }
    std::sort(carcs.begin(), carcs.end());
    carcs.erase(std::unique(carcs.begin(), carcs.end()), carcs.end());
    rep.condensation = Digraph::from_sorted_unchecked(k, std::move(carcs));
    for (int c = 0; c < k; ++c) {
        if (rep.condensation.in_degree(c) == 0) rep.initial.push_back(c);
        if (rep.condensation.out_degree(c) == 0) rep.terminal.push_back(c);
    }
    return rep;
}

bool is_strong(const Digraph& d) {
    const int n = d.order();
    if (n <= 1) return true;
    // forward and backward reachability from vertex 0
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<char> seen(n, 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        size_t head = 0;
        int count = 1;
        while (head < queue.size()) {
            int v = queue[head++];
            auto nbrs = pass == 0 ? d.out_neighbors(v) : d.in_neighbors(v);
            for (int w : nbrs)
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    queue.push_back(w);
                }
        }
        if (count != n) return false;
    }
    return true;
}

bool is_acyclic(const Digraph& d) {
    // acyclic iff every strong component is a single vertex (loops forbidden)
    for (const auto& comp : tarjan_components(d))
        if (comp.size() > 1) return false;
    return true;
}

bool is_semicomplete(const Digraph& d) {
    const int n = d.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!d.adjacent(u, v)) return false;
    return true;
}

std::vector<std::vector<int>> complement_components(const Digraph& d) {
    const int n = d.order();
    std::vector<int> part(n, -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (part[s] != -1) continue;
        std::vector<int> comp{s};
        part[s] = static_cast<int>(comps.size());
        size_t head = 0;
        while (head < comp.size()) {
            int v = comp[head++];
            for (int w = 0; w < n; ++w)
                if (part[w] == -1 && !d.adjacent(v, w)) {
                    part[w] = part[s];
                    comp.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

std::optional<Branching> out_branching_of(const Digraph& d) {
    const int n = d.order();
    if (n == 0) return std::nullopt;
    auto rep = strong_components(d);
    if (rep.initial.size() != 1) return std::nullopt;
    int root = rep.components[rep.initial.front()].front();
    // lexicographic BFS tree from the root
    std::vector<int> parent(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<int> queue{root};
    seen[root] = 1;
    size_t head = 0;
    while (head < queue.size()) {
        int v = queue[head++];
        for (int w : d.out_neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                queue.push_back(w);
            }
    }
    Branching b;
    b.root = root;
    for (int v = 0; v < n; ++v)
        if (v != root) b.arcs.emplace_back(parent[v], v);
    std::sort(b.arcs.begin(), b.arcs.end());
    return b;
}

}  // namespace

std::pair<std::optional<Branching>, std::optional<Branching>> branchings(const Digraph& d) {
    auto out = out_branching_of(d);
    auto rev = out_branching_of(d.reversed());
    std::optional<Branching> in;
    if (rev) {
        in = Branching{rev->root, {}};
        for (const auto& [u, v] : rev->arcs) in->arcs.emplace_back(v, u);
        std::sort(in->arcs.begin(), in->arcs.end());
    }
    return {std::move(out), std::move(in)};
}

Digraph directed_cycle(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return Digraph(n, std::move(arcs));
}

Digraph directed_path(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
    return Digraph(n, std::move(arcs));
}

Digraph complete_digraph(int n) {
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.emplace_back(u, v);
    return Digraph(n, std::move(arcs));
}

Digraph arcless(int n) { return Digraph(n, {}); }

}  // namespace sccomp
