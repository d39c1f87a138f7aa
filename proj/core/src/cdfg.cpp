#include "hlsqor/cdfg.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hlsqor/errors.hpp"

namespace hlsqor {

int Cdfg::node_index(std::string_view label) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == label) return static_cast<int>(i);
    return -1;
}

Cdfg build_cdfg(const IrFunction& function) {
    if (function.blocks.empty()) throw EmptyFunction(function.name);

    Cdfg g;
    for (const BasicBlock& block : function.blocks) g.nodes.push_back(block.label);
    g.in_degree.assign(g.nodes.size(), 0);
    g.out_degree.assign(g.nodes.size(), 0);

    for (const BasicBlock& block : function.blocks) {
        for (const std::string& succ : block.successor_labels) {
            g.control_edges.push_back({block.label, succ});
            g.out_degree[static_cast<std::size_t>(g.node_index(block.label))] += 1;
            g.in_degree[static_cast<std::size_t>(g.node_index(succ))] += 1;
        }
    }

    // def site of every local value: (block label, result type)
    std::map<std::string, std::pair<std::string, std::string>> defs;
    for (const BasicBlock& block : function.blocks)
        for (const IrInstruction& in : block.instructions)
            if (!in.result_id.empty()) defs[in.result_id] = {block.label, in.result_type};

    // One edge per (value, use block), in def/source order.
    std::set<std::pair<std::string, std::string>> seen;  // (value, use block)
    for (const BasicBlock& block : function.blocks) {
        for (const IrInstruction& in : block.instructions) {
            for (const std::string& id : in.operand_ids()) {
                auto def = defs.find(id);
                if (def == defs.end()) continue;  // parameter or undefined
                const std::string& def_block = def->second.first;
                if (def_block == block.label) continue;
                if (!seen.insert({id, block.label}).second) continue;
                g.data_edges.push_back({def_block, block.label, id, def->second.second});
            }
        }
    }
    return g;
}

namespace {

// Back edges found by DFS over the successor structure, visiting nodes in
// source order from the entry (plus any unreached nodes, for robustness on
// arbitrary graphs).
std::set<std::pair<int, int>> find_back_edges(const std::vector<std::vector<int>>& succ) {
    std::size_t n = succ.size();
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    std::set<std::pair<int, int>> back;

    struct Frame {
        int node;
        std::size_t next_child;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (state[root] != 0) continue;
        std::vector<Frame> stack{{static_cast<int>(root), 0}};
        state[root] = 1;
        while (!stack.empty()) {
            Frame& frame = stack.back();
            const auto& children = succ[static_cast<std::size_t>(frame.node)];
            if (frame.next_child < children.size()) {
                int child = children[frame.next_child++];
                if (state[static_cast<std::size_t>(child)] == 1) {
                    back.insert({frame.node, child});
                } else if (state[static_cast<std::size_t>(child)] == 0) {
                    state[static_cast<std::size_t>(child)] = 1;
                    stack.push_back({child, 0});
                }
            } else {
                state[static_cast<std::size_t>(frame.node)] = 2;
                stack.pop_back();
            }
        }
    }
    return back;
}

}  // namespace

int longest_path(const Cdfg& graph) {
    std::size_t n = graph.nodes.size();
    if (n == 0) return 0;

    std::vector<std::vector<int>> succ(n);
    for (const ControlEdge& e : graph.control_edges) {
        int from = graph.node_index(e.from);
        int to = graph.node_index(e.to);
        if (from >= 0 && to >= 0) succ[static_cast<std::size_t>(from)].push_back(to);
    }

    std::set<std::pair<int, int>> back = find_back_edges(succ);

    // Longest path in nodes over the remaining DAG, from any start node;
    // memo[v] = longest path starting at v (0 = not yet computed).
    std::vector<int> memo(n, 0);
    struct Frame {
        int node;
        std::size_t next_child;
        int best;
    };
    for (std::size_t start = 0; start < n; ++start) {
        if (memo[start] != 0) continue;
        std::vector<Frame> stack{{static_cast<int>(start), 0, 1}};
        while (!stack.empty()) {
            Frame& frame = stack.back();
            std::size_t u = static_cast<std::size_t>(frame.node);
            bool descended = false;
            while (frame.next_child < succ[u].size()) {
                int child = succ[u][frame.next_child++];
                if (back.count({frame.node, child}) > 0) continue;
                std::size_t c = static_cast<std::size_t>(child);
                if (memo[c] == 0) {
                    stack.push_back({child, 0, 1});
                    descended = true;
                    break;
                }
                frame.best = std::max(frame.best, 1 + memo[c]);
            }
            if (descended) continue;
            memo[u] = frame.best;
            stack.pop_back();
            if (!stack.empty()) stack.back().best = std::max(stack.back().best, 1 + memo[u]);
        }
    }
    return *std::max_element(memo.begin(), memo.end());
}

std::int64_t count_fcus(const IrFunction& function) {
    if (function.blocks.empty()) throw EmptyFunction(function.name);

    // (opcode, result type) -> max concurrent uses inside one block.
    std::map<std::pair<std::string, std::string>, std::int64_t> peak;
    for (const BasicBlock& block : function.blocks) {
        std::map<std::pair<std::string, std::string>, std::int64_t> in_block;
        for (const IrInstruction& in : block.instructions)
            if (in.category == OpCategory::Math) in_block[{in.opcode, in.result_type}] += 1;
        for (const auto& [unit, count] : in_block)
            peak[unit] = std::max(peak[unit], count);
    }
    std::int64_t total = 0;
    for (const auto& [unit, count] : peak) total += count;
    return total;
}

CdfgFeatures cdfg_features(const Cdfg& graph, std::int64_t fcu) {
    CdfgFeatures f;
    f.total_nodes = static_cast<double>(graph.nodes.size());
    f.longest_path_len = graph.nodes.empty() ? 0 : static_cast<double>(longest_path(graph));
    f.fcu_count = static_cast<double>(fcu);
    double degree_sum = 0;
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        double degree = static_cast<double>(graph.in_degree[i] + graph.out_degree[i]);
        f.max_degree = std::max(f.max_degree, degree);
        degree_sum += degree;
    }
    if (!graph.nodes.empty()) f.avg_degree = degree_sum / static_cast<double>(graph.nodes.size());
    f.data_edge_count = static_cast<double>(graph.data_edges.size());
    return f;
}

std::array<double, CdfgFeatures::kCount> CdfgFeatures::as_array() const {
    return {total_nodes, longest_path_len, fcu_count, max_degree, avg_degree, data_edge_count};
}

const std::array<std::string, CdfgFeatures::kCount>& CdfgFeatures::names() {
    static const std::array<std::string, kCount> names = {
        "cdfg_total_nodes",     "cdfg_longest_path_len", "cdfg_fcu_count",
        "cdfg_max_degree",      "cdfg_avg_degree",       "cdfg_data_edge_count"};
    return names;
}

std::string to_dot(const Cdfg& graph) {
    std::string out = "digraph cdfg {\n";
    for (const std::string& node : graph.nodes) out += "  \"" + node + "\";\n";
    for (const ControlEdge& e : graph.control_edges)
        out += "  \"" + e.from + "\" -> \"" + e.to + "\";\n";
    for (const DataEdge& e : graph.data_edges)
        out += "  \"" + e.def_block + "\" -> \"" + e.use_block + "\" [style=dashed, label=\"%" +
               e.value_id + ":" + e.data_type + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace hlsqor
