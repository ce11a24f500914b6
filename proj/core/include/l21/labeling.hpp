#ifndef L21_LABELING_HPP
#define L21_LABELING_HPP

#include <vector>

#include "l21/graph.hpp"

namespace l21 {

/// Total vertex labeling: labels[v] is the nonnegative label of vertex v.
using Labeling = std::vector<int>;

/// A pair (G, H) with H a subgraph of G on the same vertices. H-edges demand
/// label gap >= 2, remaining G-edges demand gap >= 1.
struct Instance {
    Graph g;
    Graph h;

    Instance(Graph g_in, Graph h_in);
};

/// One broken constraint: the pair {u, v} must differ by `required` but
/// differs by `gap`. For distance-two conditions required is 1, for adjacent
/// pairs (or H-edges) it is 2.
struct Violation {
    int u;
    int v;
    int required;
    int gap;

    bool operator==(const Violation&) const = default;
};

struct Verdict {
    std::vector<Violation> violations;

    bool valid() const noexcept { return violations.empty(); }
    bool operator==(const Verdict&) const = default;
};

/// Checks the distance-one (gap >= 2) and distance-two (gap >= 1) conditions.
/// All violations are reported, not just the first. f must be total.
Verdict verify_l21(const Graph& g, const Labeling& f);

/// Checks gap >= 2 across H-edges and gap >= 1 across remaining G-edges.
Verdict verify_instance(const Instance& inst, const Labeling& f);

/// The reduction (F^2, F): labelings of the instance are exactly the
/// L(2,1)-labelings of F.
Instance l21_as_instance(const Graph& f);

/// max - min of the labels; input_error on an empty labeling.
int span_of(const Labeling& f);

}  // namespace l21

#endif
