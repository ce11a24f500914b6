#ifndef L21_EXACT_HPP
#define L21_EXACT_HPP

#include <optional>

#include "l21/labeling.hpp"

namespace l21 {

struct ExactResult {
    int optimum;
    Labeling witness;
};

/// Exact minimum span by branch and bound. Branches on vertices in descending
/// g-degree order (ties by index), labels ascending, pruned by the incumbent;
/// the initial incumbent is the chang_kuo heuristic and the first branched
/// vertex is restricted to the lower half of the alphabet (label reversal
/// symmetry). With a budget only spans <= budget are searched and nullopt
/// means none exists within it. Deterministic. Intended for n up to ~20.
std::optional<ExactResult> exact_span(const Instance& inst,
                                      std::optional<int> budget = std::nullopt);

/// exact_span of (g^2, g): the L(2,1) span of g.
ExactResult exact_lambda(const Graph& g);

}  // namespace l21

#endif
