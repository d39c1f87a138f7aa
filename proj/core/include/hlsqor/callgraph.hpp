#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hlsqor/ir.hpp"

namespace hlsqor {

/// One edge per call site, carrying the argument types of the call.
struct CallEdge {
    std::string caller;
    std::string callee;
    std::vector<std::string> argument_types;
    friend bool operator==(const CallEdge&, const CallEdge&) = default;
};

/// Pre-synthesis estimates attached to a callgraph node. Defaults are
/// structural (FCU count and longest-path latency from the IR); callers may
/// overwrite them with externally supplied numbers.
struct FunctionSummary {
    std::int64_t fcu_count = 0;
    std::optional<double> est_latency;
    std::optional<double> est_cp_min;  // ns
    std::optional<double> est_cp_max;  // ns
};

struct CallGraph {
    std::vector<std::string> nodes;  // function names, module order
    std::vector<CallEdge> edges;     // per call site, deterministic order
    std::map<std::string, FunctionSummary> summaries;

    bool has_node(std::string_view name) const;
    /// Replace the summary of a known function with external estimates.
    void set_summary(const std::string& name, FunctionSummary summary);
};

/// One node per module function (declarations included); summaries of
/// defined functions default to their structural estimates.
CallGraph build_callgraph(const IrModule& module);

/// Aggregates over the children of `top`: every function reachable from it,
/// excluding top itself. Empty aggregates and absent estimates are 0.
struct CallGraphFeatures {
    double child_count = 0;
    double max_child_fcu = 0;
    double min_child_fcu = 0;
    double max_child_latency = 0;
    double max_child_cp = 0;
    double min_child_cp = 0;

    static constexpr int kCount = 6;
    std::array<double, kCount> as_array() const;
    static const std::array<std::string, kCount>& names();
};

/// Throws UnknownTop when `top` is not a node.
CallGraphFeatures callgraph_features(const CallGraph& graph, const std::string& top);

/// DOT digraph; edges are labeled with call argument types.
std::string to_dot(const CallGraph& graph);

}  // namespace hlsqor
