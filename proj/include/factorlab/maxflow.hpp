#pragma once

#include <vector>

namespace factorlab {

/// Dinic max-flow on integer capacities. Small and exact; sized for the
/// doubled factor networks (a few hundred arcs), not for big instances.
class MaxFlow {
public:
    explicit MaxFlow(int node_count);

    /// Adds a directed arc and returns its id for later flow queries.
    int add_arc(int from, int to, long long capacity);
    long long run(int source, int sink);
    long long flow_on(int arc_id) const;

private:
    struct Arc {
        int to;
        long long cap;
        int rev;
    };

    bool bfs(int source, int sink);
    long long dfs(int v, int sink, long long pushed);

    std::vector<std::vector<Arc>> arcs_;
    std::vector<std::pair<int, int>> arc_index_; // arc id -> (node, slot)
    std::vector<long long> original_cap_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

} // namespace factorlab
