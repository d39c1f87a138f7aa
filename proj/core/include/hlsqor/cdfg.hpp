#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hlsqor/ir.hpp"

namespace hlsqor {

struct ControlEdge {
    std::string from;
    std::string to;
    friend bool operator==(const ControlEdge&, const ControlEdge&) = default;
};

/// A value defined in one block and used in another.
struct DataEdge {
    std::string def_block;
    std::string use_block;
    std::string value_id;
    std::string data_type;
    friend bool operator==(const DataEdge&, const DataEdge&) = default;
};

/// Control + data flow graph over the basic blocks of one function.
/// Nodes are block labels in source order; control edges mirror
/// successor_labels exactly; data edges are cross-block def-use pairs,
/// one per (value, use block).
struct Cdfg {
    std::vector<std::string> nodes;
    std::vector<ControlEdge> control_edges;
    std::vector<DataEdge> data_edges;
    std::vector<int> in_degree;   // parallel to nodes, control edges only
    std::vector<int> out_degree;

    int node_index(std::string_view label) const;  // -1 when absent
};

/// Throws EmptyFunction for declarations.
Cdfg build_cdfg(const IrFunction& function);

/// Length in nodes of the longest path after removing DFS back edges
/// (loops contribute their acyclic span). A single node yields 1.
int longest_path(const Cdfg& graph);

/// Functional-unit estimate: for every distinct (math opcode, result type)
/// pair, a unit is replicated per concurrent use inside a block but reused
/// across blocks, so the pair contributes its maximum per-block count.
std::int64_t count_fcus(const IrFunction& function);

struct CdfgFeatures {
    double total_nodes = 0;
    double longest_path_len = 0;
    double fcu_count = 0;
    double max_degree = 0;  // max over nodes of in+out degree
    double avg_degree = 0;
    double data_edge_count = 0;

    static constexpr int kCount = 6;
    std::array<double, kCount> as_array() const;
    static const std::array<std::string, kCount>& names();
};

CdfgFeatures cdfg_features(const Cdfg& graph, std::int64_t fcu);

/// DOT digraph with solid control edges and dashed, value-labeled data edges.
std::string to_dot(const Cdfg& graph);

}  // namespace hlsqor
