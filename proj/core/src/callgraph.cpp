#include "hlsqor/callgraph.hpp"

#include <algorithm>
#include <set>

#include "hlsqor/cdfg.hpp"
#include "hlsqor/errors.hpp"

namespace hlsqor {

bool CallGraph::has_node(std::string_view name) const {
    return std::find(nodes.begin(), nodes.end(), name) != nodes.end();
}

void CallGraph::set_summary(const std::string& name, FunctionSummary summary) {
    if (!has_node(name)) throw UnknownTop(name);
    summaries[name] = std::move(summary);
}

CallGraph build_callgraph(const IrModule& module) {
    CallGraph g;
    for (const IrFunction& f : module.functions) {
        g.nodes.push_back(f.name);
        FunctionSummary summary;
        if (f.is_defined) {
            summary.fcu_count = count_fcus(f);
            summary.est_latency = static_cast<double>(longest_path(build_cdfg(f)));
            summary.est_cp_min = 0.0;
            summary.est_cp_max = 0.0;
        }
        g.summaries[f.name] = summary;
    }

    for (const IrFunction& f : module.functions) {
        for (const BasicBlock& block : f.blocks) {
            for (const IrInstruction& in : block.instructions) {
                if (in.opcode != "call") continue;
                std::string callee = in.callee.empty() ? "" : in.callee.substr(1);
                CallEdge edge;
                edge.caller = f.name;
                edge.callee = callee;
                for (const IrOperand& arg : in.operands) edge.argument_types.push_back(arg.type);
                g.edges.push_back(std::move(edge));
            }
        }
    }
    return g;
}

CallGraphFeatures callgraph_features(const CallGraph& graph, const std::string& top) {
    if (!graph.has_node(top)) throw UnknownTop(top);

    // Functions reachable from top, excluding top itself; deterministic BFS
    // in edge order.
    std::set<std::string> reached;
    std::vector<std::string> frontier{top};
    while (!frontier.empty()) {
        std::vector<std::string> next;
        for (const std::string& caller : frontier) {
            for (const CallEdge& edge : graph.edges) {
                if (edge.caller != caller) continue;
                if (edge.callee == top || reached.count(edge.callee) > 0) continue;
                reached.insert(edge.callee);
                next.push_back(edge.callee);
            }
        }
        frontier = std::move(next);
    }

    CallGraphFeatures f;
    f.child_count = static_cast<double>(reached.size());
    if (reached.empty()) return f;

    bool first = true;
    for (const std::string& child : reached) {
        FunctionSummary summary;
        auto it = graph.summaries.find(child);
        if (it != graph.summaries.end()) summary = it->second;
        double fcu = static_cast<double>(summary.fcu_count);
        double latency = summary.est_latency.value_or(0.0);
        double cp_min = summary.est_cp_min.value_or(0.0);
        double cp_max = summary.est_cp_max.value_or(0.0);
        if (first) {
            f.max_child_fcu = f.min_child_fcu = fcu;
            f.max_child_latency = latency;
            f.max_child_cp = cp_max;
            f.min_child_cp = cp_min;
            first = false;
        } else {
            f.max_child_fcu = std::max(f.max_child_fcu, fcu);
            f.min_child_fcu = std::min(f.min_child_fcu, fcu);
            f.max_child_latency = std::max(f.max_child_latency, latency);
            f.max_child_cp = std::max(f.max_child_cp, cp_max);
            f.min_child_cp = std::min(f.min_child_cp, cp_min);
        }
    }
    return f;
}

std::array<double, CallGraphFeatures::kCount> CallGraphFeatures::as_array() const {
    return {child_count, max_child_fcu, min_child_fcu, max_child_latency, max_child_cp, min_child_cp};
}

const std::array<std::string, CallGraphFeatures::kCount>& CallGraphFeatures::names() {
    static const std::array<std::string, kCount> names = {
        "cg_child_count",      "cg_max_child_fcu", "cg_min_child_fcu",
        "cg_max_child_latency", "cg_max_child_cp",  "cg_min_child_cp"};
    return names;
}

std::string to_dot(const CallGraph& graph) {
    std::string out = "digraph callgraph {\n";
    for (const std::string& node : graph.nodes) out += "  \"" + node + "\";\n";
    for (const CallEdge& e : graph.edges) {
        std::string args;
        for (std::size_t i = 0; i < e.argument_types.size(); ++i) {
            if (i) args += ", ";
            args += e.argument_types[i];
        }
        out += "  \"" + e.caller + "\" -> \"" + e.callee + "\" [label=\"" + args + "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace hlsqor
