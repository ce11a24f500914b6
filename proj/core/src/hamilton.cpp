#include "l21/hamilton.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace l21 {

bool posa_cycle_condition(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) throw input_error("cycle condition needs at least three vertices");
    for (int k = 1; 2 * k <= n - 1; ++k) {
        int low = 0;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) <= k) ++low;
        if (low >= k) return false;
    }
    return true;
}

bool posa_path_condition(const Graph& g) {
    int n = g.vertex_count();
    for (int k = 0; 2 * k <= n - 2; ++k) {
        int low = 0;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) <= k) ++low;
        if (low > k) return false;
    }
    return true;
}

bool is_hamilton_path(const Graph& g, const VertexSequence& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i + 1 < n; ++i)
        if (!g.adjacent(order[i], order[i + 1])) return false;
    return true;
}

bool is_hamilton_cycle(const Graph& g, const VertexSequence& order) {
    int n = g.vertex_count();
    if (n < 3 || !is_hamilton_path(g, order)) return false;
    return g.adjacent(order[n - 1], order[0]);
}

namespace {

// Mutable adjacency matrix for the closure and its unwinding.
struct Closure {
    int n;
    std::vector<char> adj;
    std::vector<int> degree;

    explicit Closure(const Graph& g)
        : n(g.vertex_count()),
          adj(static_cast<size_t>(n) * n, 0),
          degree(static_cast<size_t>(n), 0) {
        for (auto [u, v] : g.edges()) set(u, v);
    }

    bool has(int u, int v) const { return adj[static_cast<size_t>(u) * n + v]; }
    void set(int u, int v) {
        adj[static_cast<size_t>(u) * n + v] = 1;
        adj[static_cast<size_t>(v) * n + u] = 1;
        ++degree[u];
        ++degree[v];
    }
    void clear(int u, int v) {
        adj[static_cast<size_t>(u) * n + v] = 0;
        adj[static_cast<size_t>(v) * n + u] = 0;
        --degree[u];
        --degree[v];
    }
};

// Rotates/reflects `cycle` into a path from u to v that avoids the edge uv.
std::vector<int> cycle_to_path(const std::vector<int>& cycle, int u, int v) {
    int n = static_cast<int>(cycle.size());
    int pu = static_cast<int>(std::find(cycle.begin(), cycle.end(), u) - cycle.begin());
    std::vector<int> path(static_cast<size_t>(n));
    if (cycle[(pu + 1) % n] == v) {
        // u, v consecutive forward; walk backwards from u to reach v last.
        for (int i = 0; i < n; ++i) path[i] = cycle[((pu - i) % n + n) % n];
    } else {
        for (int i = 0; i < n; ++i) path[i] = cycle[(pu + i) % n];
    }
    return path;
}

}  // namespace

VertexSequence hamilton_cycle(const Graph& g) {
    if (!posa_cycle_condition(g))
        throw precondition_error("posa-cycle", "degree condition fails");
    int n = g.vertex_count();

    Closure work(g);
    std::vector<std::pair<int, int>> added;
    // Keep scanning pairs until a full pass adds nothing; degree sums are
    // taken against the current, growing graph.
    bool grew = true;
    while (grew) {
        grew = false;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (!work.has(u, v) && work.degree[u] + work.degree[v] >= n) {
                    work.set(u, v);
                    added.emplace_back(u, v);
                    grew = true;
                }
            }
        }
    }
    if (static_cast<long long>(g.edge_count()) + static_cast<long long>(added.size()) !=
        static_cast<long long>(n) * (n - 1) / 2)
        throw internal_error("closure is not complete");

    std::vector<int> cycle(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cycle[i] = i;

    for (auto it = added.rbegin(); it != added.rend(); ++it) {
        auto [u, v] = *it;
        work.clear(u, v);
        int pu = static_cast<int>(std::find(cycle.begin(), cycle.end(), u) - cycle.begin());
        int pv = static_cast<int>(std::find(cycle.begin(), cycle.end(), v) - cycle.begin());
        bool uses = (pv == (pu + 1) % n) || (pu == (pv + 1) % n);
        if (!uses) continue;

        auto path = cycle_to_path(cycle, u, v);
        // Least i with path[i] adjacent to v and path[i+1] adjacent to u; the
        // degree sum at insertion time guarantees one exists.
        int splice = -1;
        for (int i = 0; i + 1 < n; ++i) {
            if (work.has(path[i], v) && work.has(path[i + 1], u)) {
                splice = i;
                break;
            }
        }
        if (splice < 0) throw internal_error("no splice point during unwinding");
        std::vector<int> next;
        next.reserve(static_cast<size_t>(n));
        next.push_back(u);
        for (int i = splice + 1; i < n; ++i) next.push_back(path[i]);
        for (int i = splice; i >= 1; --i) next.push_back(path[i]);
        cycle = std::move(next);
    }

    // Normalize: start at 0, lower-indexed cycle neighbor second.
    int p0 = static_cast<int>(std::find(cycle.begin(), cycle.end(), 0) - cycle.begin());
    std::rotate(cycle.begin(), cycle.begin() + p0, cycle.end());
    if (cycle[1] > cycle[n - 1])
        std::reverse(cycle.begin() + 1, cycle.end());

    if (!is_hamilton_cycle(g, cycle))
        throw internal_error("unwinding produced an invalid cycle");
    return cycle;
}

VertexSequence hamilton_path(const Graph& g) {
    if (!posa_path_condition(g))
        throw precondition_error("posa-path", "degree condition fails");
    int n = g.vertex_count();
    VertexSequence path;
    if (n == 1) {
        path = {0};
    } else if (n == 2) {
        path = {0, 1};  // condition forces the edge
    } else {
        Graph dominated(n + 1);
        for (auto [u, v] : g.edges()) dominated.add_edge(u, v);
        for (int v = 0; v < n; ++v) dominated.add_edge(v, n);

        auto cycle = hamilton_cycle(dominated);
        int pd = static_cast<int>(std::find(cycle.begin(), cycle.end(), n) - cycle.begin());
        path.reserve(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) path.push_back(cycle[(pd + i) % (n + 1)]);
    }

    if (!is_hamilton_path(g, path))
        throw internal_error("dominated cycle left an invalid path");
    return path;
}

}  // namespace l21
