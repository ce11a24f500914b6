#include "l21/labeling.hpp"

#include <algorithm>
#include <cstdlib>

namespace l21 {

Instance::Instance(Graph g_in, Graph h_in) : g(std::move(g_in)), h(std::move(h_in)) {
    if (g.vertex_count() != h.vertex_count())
        throw input_error("instance graphs must share the vertex set");
    for (auto [u, v] : h.edges())
        if (!g.adjacent(u, v))
            throw input_error("H-edge {" + std::to_string(u) + "," +
                              std::to_string(v) + "} missing from G");
}

namespace {

void check_total(const Graph& g, const Labeling& f) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw input_error("labeling must assign every vertex exactly one label");
}

}  // namespace

Verdict verify_l21(const Graph& g, const Labeling& f) {
    check_total(g, f);
    Verdict out;
    Graph sq = square(g);
    for (auto [u, v] : sq.edges()) {
        int required = g.adjacent(u, v) ? 2 : 1;
        int gap = std::abs(f[u] - f[v]);
        if (gap < required) out.violations.push_back({u, v, required, gap});
    }
    return out;
}

Verdict verify_instance(const Instance& inst, const Labeling& f) {
    check_total(inst.g, f);
    Verdict out;
    for (auto [u, v] : inst.g.edges()) {
        int required = inst.h.adjacent(u, v) ? 2 : 1;
        int gap = std::abs(f[u] - f[v]);
        if (gap < required) out.violations.push_back({u, v, required, gap});
    }
    return out;
}

Instance l21_as_instance(const Graph& f) { return Instance(square(f), f); }

int span_of(const Labeling& f) {
    if (f.empty()) throw input_error("span of an empty labeling");
    auto [lo, hi] = std::minmax_element(f.begin(), f.end());
    return *hi - *lo;
}

}  // namespace l21
