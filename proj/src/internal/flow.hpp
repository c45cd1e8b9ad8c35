#pragma once

#include <cstdint>
#include <vector>

namespace sccomp::internal {

// Small integer flow network. Deterministic: augmenting paths are found by
// BFS over edges in insertion order, negative cycles by Bellman-Ford with a
// fixed scan order. Residual edges are paired as id^1.
class FlowNet {
public:
    explicit FlowNet(int nodes);

    int add_node();
    // returns the id of the forward edge; the reverse edge is id+1
    int add_edge(int from, int to, int cap, int cost = 0);

    int node_count() const { return static_cast<int>(adj_.size()); }
    int max_flow(int s, int t);
    // cancels negative-cost cycles until none remain; returns total cost change
    long long cancel_negative_cycles();

    int flow_on(int edge_id) const;

private:
    struct Edge {
        int to;
        int cap;  // residual capacity
        int cost;
    };
    bool augment_once(int s, int t);

    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> initial_cap_;
};

}  // namespace sccomp::internal
