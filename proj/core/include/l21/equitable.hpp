#ifndef L21_EQUITABLE_HPP
#define L21_EQUITABLE_HPP

#include <vector>

#include "l21/graph.hpp"

namespace l21 {

/// Ordered partition of the vertex set into color classes; classes may be
/// empty. classes[i] is sorted ascending.
struct Coloring {
    std::vector<std::vector<int>> classes;

    bool operator==(const Coloring&) const = default;
};

/// No edge inside a class, and the classes partition 0..n-1.
bool is_proper(const Coloring& c, const Graph& g);

/// Class sizes differ by at most one (over all classes, empty ones included).
bool is_equitable(const Coloring& c);

/// vertex -> class index map; input_error if c is not a partition of 0..n-1.
std::vector<int> class_index(const Coloring& c, int n);

/// Proper coloring with exactly `num_classes` classes whose sizes differ by
/// at most one. Requires num_classes >= max_degree(g) + 1, which guarantees
/// existence. Deterministic for fixed input.
Coloring equitable_coloring(const Graph& g, int num_classes);

}  // namespace l21

#endif
