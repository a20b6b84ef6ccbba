#include "blockfrac/maxflow.hpp"

#include <limits>
#include <queue>

namespace blockfrac {

MaxFlow::MaxFlow(int num_nodes) : n_(num_nodes), arcs_(num_nodes) {}

void MaxFlow::add_edge(int from, int to, std::int64_t capacity) {
    arcs_[from].push_back({to, capacity, int(arcs_[to].size())});
    arcs_[to].push_back({from, 0, int(arcs_[from].size()) - 1});
}

bool MaxFlow::bfs(int s, int t) {
    level_.assign(n_, -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
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
    return level_[t] >= 0;
}

std::int64_t MaxFlow::dfs(int v, int t, std::int64_t pushed) {
    if (v == t) return pushed;
    for (int& i = iter_[v]; i < int(arcs_[v].size()); ++i) {
        Arc& a = arcs_[v][i];
        if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
        std::int64_t got = dfs(a.to, t, std::min(pushed, a.cap));
        if (got > 0) {
            a.cap -= got;
            arcs_[a.to][a.rev].cap += got;
            return got;
        }
    }
    return 0;
}

std::int64_t MaxFlow::run(int source, int sink) {
    std::int64_t flow = 0;
    while (bfs(source, sink)) {
        iter_.assign(n_, 0);
        while (std::int64_t got = dfs(source, sink, std::numeric_limits<std::int64_t>::max()))
            flow += got;
    }
    return flow;
}

std::vector<char> MaxFlow::min_cut_source_side(int source) const {
    std::vector<char> side(n_, 0);
    std::queue<int> q;
    side[source] = 1;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const Arc& a : arcs_[v]) {
            if (a.cap > 0 && !side[a.to]) {
                side[a.to] = 1;
                q.push(a.to);
            }
        }
    }
    return side;
}

}  // namespace blockfrac
