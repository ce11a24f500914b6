#ifndef L21_GRAPH_HPP
#define L21_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "l21/errors.hpp"

namespace l21 {

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored twice: as bitset rows for O(1) membership tests and as
/// sorted neighbor lists for iteration. Intended use is add_edge during
/// construction followed by read-only access; all queries are const and safe
/// for concurrent readers. Scales to n = 5000 and beyond.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return m_; }

    /// Adds the undirected edge {u, v}. Loops, duplicates and out-of-range
    /// endpoints raise input_error.
    void add_edge(int u, int v);

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (rows_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    /// All edges as (u, v) pairs with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && m_ == other.m_ && rows_ == other.rows_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw input_error("vertex " + std::to_string(v) + " out of range [0," +
                              std::to_string(n_) + ")");
    }

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<uint64_t> rows_;
    std::vector<std::vector<int>> adj_;
};

/// Largest vertex degree; 0 for empty or edgeless graphs.
int max_degree(const Graph& g);

/// Shortest-path edge count between u and v; nullopt if no path exists.
std::optional<int> distance(const Graph& g, int u, int v);

/// Maximum pairwise distance; nullopt iff g is disconnected. Needs n >= 1.
std::optional<int> diameter(const Graph& g);

/// Graph on the same vertices with an edge wherever 1 <= d(u,v) <= 2.
Graph square(const Graph& g);

/// Edge-complement.
Graph complement(const Graph& g);

}  // namespace l21

#endif
