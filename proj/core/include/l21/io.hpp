#ifndef L21_IO_HPP
#define L21_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "l21/graph.hpp"
#include "l21/labeling.hpp"

namespace l21 {

/// Graph document: comment lines "c ...", one header "p edge <n> <m>", then m
/// lines "e <u> <v>" with 1-based endpoints. Loops, duplicates, range errors
/// and count mismatches raise parse_error with the offending line number.
Graph parse_graph(std::string_view text);

/// Instance document: header "p ghedge <n> <m>" and lines "e <u> <v> <w>"
/// with w in {1, 2}; the weight-2 edges form H, all edges form G.
Instance parse_instance(std::string_view text);

/// Labeling document: lines "l <v> <label>" (1-based vertices), an optional
/// "s <span>" record, and comments. Lines that start with neither "l" nor
/// "s" are ignored, so emitted summaries parse cleanly.
struct LabelingDocument {
    std::vector<std::pair<int, int>> entries;  // (0-based vertex, raw label)
    std::optional<long long> declared_span;
};

LabelingDocument parse_labeling(std::string_view text);

/// Materializes a document against a graph of n vertices: every vertex must
/// appear exactly once (input_error otherwise), and labels are normalized by
/// subtracting their minimum.
Labeling bind_labeling(const LabelingDocument& doc, int n);

std::string emit_graph(const Graph& g, const std::vector<std::string>& comments = {});
std::string emit_instance(const Instance& inst,
                          const std::vector<std::string>& comments = {});

/// Emits "l" lines plus the trailing "s <span>" record.
std::string emit_labeling(const Labeling& f);

}  // namespace l21

#endif
