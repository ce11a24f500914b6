#ifndef L21_HAMILTON_HPP
#define L21_HAMILTON_HPP

#include <vector>

#include "l21/graph.hpp"

namespace l21 {

/// Vertex order forming a path or cycle; see is_hamilton_path / _cycle.
using VertexSequence = std::vector<int>;

/// Degree condition guaranteeing a hamilton cycle: for every k with
/// 1 <= k <= (n-1)/2, fewer than k vertices have degree <= k. Needs n >= 3.
bool posa_cycle_condition(const Graph& g);

/// Path variant: for every k with 0 <= k <= (n-2)/2, at most k vertices have
/// degree <= k.
bool posa_path_condition(const Graph& g);

bool is_hamilton_path(const Graph& g, const VertexSequence& order);
bool is_hamilton_cycle(const Graph& g, const VertexSequence& order);

/// Constructive hamilton cycle under the Pósa condition: closes the graph by
/// repeatedly joining nonadjacent pairs with degree sum >= n (lexicographic
/// scan, degrees against the growing graph), starts from the trivial cycle in
/// the complete closure, and unwinds the added edges in reverse, splicing the
/// cycle whenever it uses a removed edge. Output is normalized to start at
/// vertex 0 with the lower-indexed cycle neighbor second, and independently
/// verified before return.
VertexSequence hamilton_cycle(const Graph& g);

/// Constructive hamilton path under the Pósa path condition: adds a
/// dominating vertex, finds a hamilton cycle, and drops the dominator.
VertexSequence hamilton_path(const Graph& g);

}  // namespace l21

#endif
