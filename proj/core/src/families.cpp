#include "l21/families.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace l21 {

std::vector<ProjectivePoint> projective_points(const FiniteField& f) {
    int q = f.order();
    std::vector<ProjectivePoint> pts;
    pts.reserve(static_cast<size_t>(q) * q + q + 1);
    // Canonical forms, already in lexicographic order: (0,0,1), (0,1,*), (1,*,*).
    pts.push_back({0, 0, 1});
    for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
    for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
    return pts;
}

namespace {

int dot(const FiniteField& f, const ProjectivePoint& a, const ProjectivePoint& b) {
    return f.add(f.add(f.mul(a.x, b.x), f.mul(a.y, b.y)), f.mul(a.z, b.z));
}

}  // namespace

Graph polarity_graph(const FiniteField& f) {
    auto pts = projective_points(f);
    int n = static_cast<int>(pts.size());
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dot(f, pts[i], pts[j]) == 0) g.add_edge(i, j);
    return g;
}

Graph erdos_extension(const FiniteField& f) {
    if (f.characteristic() != 2)
        throw input_error("extension needs characteristic 2");
    Graph h = polarity_graph(f);
    int n = h.vertex_count();
    int q = f.order();
    Graph out(n + 1);
    for (auto [u, v] : h.edges()) out.add_edge(u, v);
    for (int v = 0; v < n; ++v)
        if (h.degree(v) == q) out.add_edge(v, n);
    return out;
}

Graph path_graph(int n) {
    if (n < 1) throw input_error("path needs at least one vertex");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw input_error("cycle needs at least three vertices");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw input_error("complete graph needs at least one vertex");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star_graph(int n) {
    if (n < 1) throw input_error("star needs at least one vertex");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph random_tree(int n, uint64_t seed) {
    if (n < 1) throw input_error("tree needs at least one vertex");
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }

    std::mt19937_64 rng(seed);
    std::vector<int> prufer(static_cast<size_t>(n - 2));
    for (int& w : prufer) w = static_cast<int>(rng() % static_cast<uint64_t>(n));

    // Standard decode: repeatedly join the smallest current leaf to the next
    // word entry; the two survivors are joined last.
    std::vector<int> degree(static_cast<size_t>(n), 1);
    for (int w : prufer) ++degree[w];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    for (int w : prufer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        g.add_edge(leaf, w);
        if (--degree[w] == 1) leaves.insert(w);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    g.add_edge(a, b);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

Graph hoffman_singleton_graph() {
    Graph g(50);
    auto pent = [](int h, int i) { return 5 * h + i; };
    auto gram = [](int j, int i) { return 25 + 5 * j + i; };
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i) g.add_edge(pent(h, i), pent(h, (i + 1) % 5));
    for (int j = 0; j < 5; ++j)
        for (int i = 0; i < 5; ++i) g.add_edge(gram(j, i), gram(j, (i + 2) % 5));
    for (int h = 0; h < 5; ++h)
        for (int j = 0; j < 5; ++j)
            for (int i = 0; i < 5; ++i)
                g.add_edge(pent(h, i), gram(j, (h * i + j) % 5));
    return g;
}

}  // namespace l21
