#include "factorlab/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace factorlab {

MaxFlow::MaxFlow(int node_count)
    : arcs_(static_cast<std::size_t>(node_count)),
      level_(static_cast<std::size_t>(node_count)),
      iter_(static_cast<std::size_t>(node_count)) {
    if (node_count < 2) throw std::invalid_argument("flow network needs at least two nodes");
}

int MaxFlow::add_arc(int from, int to, long long capacity) {
    if (capacity < 0) throw std::invalid_argument("negative capacity");
    int id = static_cast<int>(arc_index_.size());
    arc_index_.emplace_back(from, static_cast<int>(arcs_[from].size()));
    original_cap_.push_back(capacity);
    arcs_[from].push_back({to, capacity, static_cast<int>(arcs_[to].size())});
    arcs_[to].push_back({from, 0, static_cast<int>(arcs_[from].size()) - 1});
    return id;
}

bool MaxFlow::bfs(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const Arc& a : arcs_[v]) {
            if (a.cap > 0 && level_[a.to] < 0) {
                level_[a.to] = level_[v] + 1;
                q.push(a.to);
            }
        }
    }
    return level_[sink] >= 0;
}

long long MaxFlow::dfs(int v, int sink, long long pushed) {
    if (v == sink) return pushed;
    for (int& i = iter_[v]; i < static_cast<int>(arcs_[v].size()); ++i) {
        Arc& a = arcs_[v][i];
        if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
        long long got = dfs(a.to, sink, std::min(pushed, a.cap));
        if (got > 0) {
            a.cap -= got;
            arcs_[a.to][a.rev].cap += got;
            return got;
        }
    }
    return 0;
}

long long MaxFlow::run(int source, int sink) {
    long long total = 0;
    while (bfs(source, sink)) {
        std::fill(iter_.begin(), iter_.end(), 0);
        while (long long got = dfs(source, sink, std::numeric_limits<long long>::max()))
            total += got;
    }
    return total;
}

long long MaxFlow::flow_on(int arc_id) const {
    auto [node, slot] = arc_index_.at(static_cast<std::size_t>(arc_id));
    return original_cap_[arc_id] - arcs_[node][slot].cap;
}

} // namespace factorlab
