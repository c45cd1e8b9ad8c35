#include "internal/flow.hpp"

#include <algorithm>
#include <limits>

namespace sccomp::internal {

FlowNet::FlowNet(int nodes) : adj_(nodes) {}

int FlowNet::add_node() {
    adj_.emplace_back();
    return static_cast<int>(adj_.size()) - 1;
}

int FlowNet::add_edge(int from, int to, int cap, int cost) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({to, cap, cost});
    edges_.push_back({from, 0, -cost});
    adj_[from].push_back(id);
    adj_[to].push_back(id + 1);
    initial_cap_.push_back(cap);
    initial_cap_.push_back(0);
    return id;
}

bool FlowNet::augment_once(int s, int t) {
    std::vector<int> via(node_count(), -1);
    std::vector<int> queue{s};
    std::vector<char> seen(node_count(), 0);
    seen[s] = 1;
    size_t head = 0;
    while (head < queue.size() && !seen[t]) {
        int v = queue[head++];
        for (int id : adj_[v]) {
            const Edge& e = edges_[id];
            if (e.cap > 0 && !seen[e.to]) {
                seen[e.to] = 1;
                via[e.to] = id;
                queue.push_back(e.to);
            }
        }
    }
    if (!seen[t]) return false;
    int bottleneck = std::numeric_limits<int>::max();
    for (int v = t; v != s; v = edges_[via[v] ^ 1].to)
        bottleneck = std::min(bottleneck, edges_[via[v]].cap);
    for (int v = t; v != s; v = edges_[via[v] ^ 1].to) {
        edges_[via[v]].cap -= bottleneck;
        edges_[via[v] ^ 1].cap += bottleneck;
    }
    return true;
}

int FlowNet::max_flow(int s, int t) {
    while (augment_once(s, t)) {
    }
    // net flow out of s
    int total = 0;
    for (int id : adj_[s]) {
        if ((id & 1) == 0)
            total += initial_cap_[id] - edges_[id].cap;
        else
            total -= edges_[id].cap - initial_cap_[id];
    }
    return total;
}

long long FlowNet::cancel_negative_cycles() {
    const int n = node_count();
    long long gained = 0;
    for (;;) {
        // Bellman-Ford from a virtual super-source (all distances start 0)
        std::vector<long long> dist(n, 0);
        std::vector<int> via(n, -1);
        int marked = -1;
        for (int round = 0; round < n; ++round) {
            marked = -1;
            for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
                const Edge& e = edges_[id];
                if (e.cap <= 0) continue;
                int from = edges_[id ^ 1].to;
                if (dist[from] + e.cost < dist[e.to]) {
                    dist[e.to] = dist[from] + e.cost;
                    via[e.to] = id;
                    marked = e.to;
                }
            }
            if (marked == -1) break;
        }
        if (marked == -1) return gained;
        // walk back n steps to land inside the cycle
        int v = marked;
        for (int i = 0; i < n; ++i) v = edges_[via[v] ^ 1].to;
        // collect the cycle and its bottleneck
        std::vector<int> cycle;
        int bottleneck = std::numeric_limits<int>::max();
        int w = v;
        do {
            int id = via[w];
            cycle.push_back(id);
            bottleneck = std::min(bottleneck, edges_[id].cap);
            w = edges_[id ^ 1].to;
        } while (w != v);
        for (int id : cycle) {
            edges_[id].cap -= bottleneck;
            edges_[id ^ 1].cap += bottleneck;
            gained += static_cast<long long>(edges_[id].cost) * bottleneck;
        }
    }
}

int FlowNet::flow_on(int edge_id) const {
    return initial_cap_[edge_id] - edges_[edge_id].cap;
}

}  // namespace sccomp::internal
