#include "l21/graph.hpp"

#include <algorithm>
#include <queue>

namespace l21 {

Graph::Graph(int n) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    n_ = n;
    words_ = (n + 63) / 64;
    rows_.assign(static_cast<size_t>(n_) * words_, 0);
    adj_.resize(static_cast<size_t>(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
        throw input_error("duplicate edge {" + std::to_string(u) + "," +
                          std::to_string(v) + "}");
    rows_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
    rows_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

namespace {

// Distances from src; -1 marks unreachable vertices.
std::vector<int> bfs(const Graph& g, int src) {
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

}  // namespace

std::optional<int> distance(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw input_error("distance endpoint out of range");
    if (u == v) return 0;
    auto dist = bfs(g, u);
    if (dist[v] < 0) return std::nullopt;
    return dist[v];
}

std::optional<int> diameter(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) throw input_error("diameter needs at least one vertex");
    int best = 0;
    for (int s = 0; s < n; ++s) {
        auto dist = bfs(g, s);
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) return std::nullopt;
            best = std::max(best, dist[v]);
        }
    }
    return best;
}

Graph square(const Graph& g) {
    int n = g.vertex_count();
    Graph out(n);
    std::vector<char> mark(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        // Mark everything within two hops of v, then link v to marks above v.
        for (int u : g.neighbors(v)) {
            mark[u] = 1;
            for (int w : g.neighbors(u)) mark[w] = 1;
        }
        mark[v] = 0;
        for (int w = v + 1; w < n; ++w) {
            if (mark[w]) out.add_edge(v, w);
        }
        for (int u : g.neighbors(v)) {
            mark[u] = 0;
            for (int w : g.neighbors(u)) mark[w] = 0;
        }
    }
    return out;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

}  // namespace l21
