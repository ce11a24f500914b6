#ifndef L21_PIPELINE_HPP
#define L21_PIPELINE_HPP

#include <vector>

#include "l21/equitable.hpp"
#include "l21/graph.hpp"
#include "l21/labeling.hpp"

namespace l21 {

/// Graph on the color classes of a proper coloring of inst.g: class i and
/// class j are adjacent iff some H-edge joins a vertex of class i to a vertex
/// of class j. Simple by properness (no H-edge is internal to a class).
struct ColorAdjacencyGraph {
    Graph base;
    Coloring classes;
};

ColorAdjacencyGraph color_adjacency_graph(const Coloring& c, const Instance& inst);

/// Largest instance order for which a span budget of `alphabet - 1` is
/// guaranteed: (L - d)(floor((L-1)/(2d)) + 1) - 1 with L = alphabet,
/// d = delta. Requires delta >= 1 and L >= delta^2 + 1.
long long order_bound(int alphabet, int delta);

struct BoundReport {
    int delta;             // max degree of H
    int delta_g;           // max degree of G
    int alphabet;          // label alphabet size L
    long long max_order;   // order_bound(alphabet, delta)
    bool applicable;       // all label_with_budget preconditions hold
};

/// Reports for every alphabet size L in [delta^2+1, delta^2+delta].
std::vector<BoundReport> bound_table(const Instance& inst);

/// Labeling of inst with labels in {0..alphabet-1}, hence span <= alphabet-1.
///
/// Preconditions (each failure raises precondition_error with the given
/// name): "delta-h-positive" (max_degree(h) >= 1), "delta-g-bound"
/// (max_degree(g) <= max_degree(h)^2), "alphabet-size"
/// (alphabet >= max_degree(h)^2 + 1), "order-bound"
/// (n <= order_bound(alphabet, max_degree(h))).
///
/// Route: with alphabet >= 2n+1 the vertices get labels 0,2,...,2(n-1) in
/// index order. Otherwise: equitable coloring with `alphabet` classes, color
/// adjacency graph, hamilton path in its complement, label = path position of
/// the vertex's class. The result is always verified; label classes differ in
/// size by at most one, and when n >= alphabet every label is used.
Labeling label_with_budget(const Instance& inst, int alphabet);

/// Injective labeling with span n-1 from a hamilton path of the complement;
/// capability_error when the engine cannot produce such a path (which is not
/// a proof that none exists).
Labeling injective_labeling(const Graph& g);

/// Iterative heuristic: repeatedly peel a greedily maximal set that is
/// independent in the instance carrier from the vertices having no H-neighbor
/// in the previous set; the i-th set gets label i. Span <= d^2 + d for the
/// L(2,1) case with d = max_degree(g).
Labeling chang_kuo(const Instance& inst);
Labeling chang_kuo(const Graph& g);

/// Greedy: vertices in index order take the least label keeping gap >= 2 at
/// distance one and >= 1 at distance two. Span <= d^2 + 2d.
Labeling first_fit(const Graph& g);

}  // namespace l21

#endif
