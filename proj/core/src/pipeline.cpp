#include "l21/pipeline.hpp"

#include <algorithm>
#include <string>

#include "l21/hamilton.hpp"

namespace l21 {

ColorAdjacencyGraph color_adjacency_graph(const Coloring& c, const Instance& inst) {
    int n = inst.g.vertex_count();
    auto idx = class_index(c, n);  // throws if not a partition
    for (auto [u, v] : inst.g.edges())
        if (idx[u] == idx[v])
            throw input_error("coloring is not proper for the instance graph");

    int num_classes = static_cast<int>(c.classes.size());
    Graph base(num_classes);
    for (auto [u, v] : inst.h.edges())
        if (!base.adjacent(idx[u], idx[v])) base.add_edge(idx[u], idx[v]);
    return {std::move(base), c};
}

long long order_bound(int alphabet, int delta) {
    if (delta < 1) throw input_error("order bound needs max degree >= 1");
    long long l = alphabet;
    if (l < static_cast<long long>(delta) * delta + 1)
        throw input_error("order bound needs alphabet >= delta^2 + 1");
    return (l - delta) * ((l - 1) / (2 * delta) + 1) - 1;
}

std::vector<BoundReport> bound_table(const Instance& inst) {
    int delta = max_degree(inst.h);
    int delta_g = max_degree(inst.g);
    if (delta < 1)
        throw precondition_error("delta-h-positive", "H has no edges");
    int n = inst.g.vertex_count();
    std::vector<BoundReport> out;
    for (int l = delta * delta + 1; l <= delta * delta + delta; ++l) {
        long long m = order_bound(l, delta);
        bool ok = delta_g <= delta * delta && n <= m;
        out.push_back({delta, delta_g, l, m, ok});
    }
    return out;
}

namespace {

void require(bool ok, const char* name, const std::string& what) {
    if (!ok) throw precondition_error(name, what);
}

}  // namespace

Labeling label_with_budget(const Instance& inst, int alphabet) {
    int n = inst.g.vertex_count();
    int delta = max_degree(inst.h);
    int delta_g = max_degree(inst.g);
    require(delta >= 1, "delta-h-positive", "H must have an edge");
    require(delta_g <= delta * delta, "delta-g-bound",
            "max degree of G is " + std::to_string(delta_g) + " > " +
                std::to_string(delta * delta));
    require(alphabet >= delta * delta + 1, "alphabet-size",
            "alphabet " + std::to_string(alphabet) + " < " +
                std::to_string(delta * delta + 1));
    long long bound = order_bound(alphabet, delta);
    require(n <= bound, "order-bound",
            "order " + std::to_string(n) + " > " + std::to_string(bound));

    Labeling f(static_cast<size_t>(n));
    if (alphabet >= 2 * n + 1) {
        for (int v = 0; v < n; ++v) f[v] = 2 * v;
    } else {
        Coloring coloring = equitable_coloring(inst.g, alphabet);
        ColorAdjacencyGraph cgh = color_adjacency_graph(coloring, inst);
        Graph target = complement(cgh.base);
        // The order bound guarantees the degree condition; a failure here is
        // a bug, not a caller error.
        if (!posa_path_condition(target))
            throw internal_error("class graph misses the path degree condition");
        auto path = hamilton_path(target);
        for (int pos = 0; pos < alphabet; ++pos)
            for (int v : coloring.classes[path[pos]]) f[v] = pos;
    }

    if (!verify_instance(inst, f).valid())
        throw internal_error("budget labeling failed verification");
    return f;
}

Labeling injective_labeling(const Graph& g) {
    Graph comp = complement(g);
    if (!posa_path_condition(comp))
        throw capability_error(
            "complement fails the path degree condition; no hamilton path "
            "obtainable (not a proof that none exists)");
    auto path = hamilton_path(comp);
    Labeling f(static_cast<size_t>(g.vertex_count()));
    for (size_t i = 0; i < path.size(); ++i) f[path[i]] = static_cast<int>(i);
    if (!verify_l21(g, f).valid())
        throw internal_error("injective labeling failed verification");
    return f;
}

Labeling chang_kuo(const Instance& inst) {
    int n = inst.g.vertex_count();
    Labeling f(static_cast<size_t>(n), -1);
    std::vector<int> previous;  // class labeled one step ago
    int unlabeled = n;
    for (int label = 0; unlabeled > 0; ++label) {
        // Candidates: unlabeled vertices with no H-neighbor in the previous
        // class; peel a greedily maximal carrier-independent subset.
        std::vector<int> chosen;
        for (int v = 0; v < n; ++v) {
            if (f[v] >= 0) continue;
            bool near_previous = false;
            for (int u : previous)
                if (inst.h.adjacent(v, u)) {
                    near_previous = true;
                    break;
                }
            if (near_previous) continue;
            bool independent = true;
            for (int u : chosen)
                if (inst.g.adjacent(v, u)) {
                    independent = false;
                    break;
                }
            if (independent) chosen.push_back(v);
        }
        for (int v : chosen) f[v] = label;
        unlabeled -= static_cast<int>(chosen.size());
        previous = std::move(chosen);
    }
    if (!verify_instance(inst, f).valid())
        throw internal_error("chang-kuo labeling failed verification");
    return f;
}

Labeling chang_kuo(const Graph& g) {
    Instance inst = l21_as_instance(g);
    Labeling f = chang_kuo(inst);
    return f;
}

Labeling first_fit(const Graph& g) {
    int n = g.vertex_count();
    Graph sq = square(g);
    Labeling f(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        for (int label = 0;; ++label) {
            bool ok = true;
            for (int u : sq.neighbors(v)) {
                if (f[u] < 0) continue;
                int required = g.adjacent(u, v) ? 2 : 1;
                if (std::abs(label - f[u]) < required) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                f[v] = label;
                break;
            }
        }
    }
    if (!verify_l21(g, f).valid())
        throw internal_error("first-fit labeling failed verification");
    return f;
}

}  // namespace l21
