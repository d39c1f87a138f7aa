#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hlsqor/cdfg.hpp"
#include "hlsqor/dataset.hpp"
#include "hlsqor/ir.hpp"
#include "hlsqor/rng.hpp"

namespace hlsqor::test {

// ---------------------------------------------------------------------------
// Brute-force longest-path oracle: enumerate every simple path. Independent
// of the production DP implementation; only usable on small graphs.
// ---------------------------------------------------------------------------

inline int brute_force_longest_path(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) succ[static_cast<std::size_t>(a)].push_back(b);
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    int best = 0;

    struct Dfs {
        const std::vector<std::vector<int>>& succ;
        std::vector<char>& on_path;
        int& best;
        void run(int v, int length) {
            on_path[static_cast<std::size_t>(v)] = 1;
            best = std::max(best, length);
            for (int w : succ[static_cast<std::size_t>(v)])
                if (!on_path[static_cast<std::size_t>(w)]) run(w, length + 1);
            on_path[static_cast<std::size_t>(v)] = 0;
        }
    } dfs{succ, on_path, best};

    for (int v = 0; v < n; ++v) dfs.run(v, 1);
    return best;
}

// Random DAG (edges only from lower to higher shuffled rank) as a Cdfg.
inline Cdfg random_dag(Rng& rng, int max_nodes, std::vector<std::pair<int, int>>* edges_out) {
    const int n = static_cast<int>(rng.uniform_int(1, max_nodes));
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(i)] = i;
    rng.shuffle(rank);

    Cdfg g;
    for (int i = 0; i < n; ++i) g.nodes.push_back("n" + std::to_string(i));
    g.in_degree.assign(static_cast<std::size_t>(n), 0);
    g.out_degree.assign(static_cast<std::size_t>(n), 0);

    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (rank[static_cast<std::size_t>(a)] >= rank[static_cast<std::size_t>(b)]) continue;
            if (rng.next_below(100) < 25) edges.emplace_back(a, b);
        }
    }
    for (auto [a, b] : edges) {
        g.control_edges.push_back({g.nodes[static_cast<std::size_t>(a)], g.nodes[static_cast<std::size_t>(b)]});
        g.out_degree[static_cast<std::size_t>(a)] += 1;
        g.in_degree[static_cast<std::size_t>(b)] += 1;
    }
    if (edges_out) *edges_out = std::move(edges);
    return g;
}

// ---------------------------------------------------------------------------
// Small IR builders.
// ---------------------------------------------------------------------------

inline IrInstruction make_instruction(const std::string& opcode, const std::string& result_id,
                                      const std::string& result_type,
                                      std::vector<IrOperand> operands = {}) {
    IrInstruction in;
    in.opcode = opcode;
    in.category = classify_instruction(opcode);
    in.result_id = result_id;
    in.result_type = result_type;
    in.operands = std::move(operands);
    return in;
}

inline IrInstruction make_ret() {
    IrInstruction in = make_instruction("ret", "", "void");
    return in;
}

inline IrInstruction make_br(const std::string& target) {
    IrInstruction in = make_instruction("br", "", "void");
    in.successors = {target};
    return in;
}

inline IrInstruction make_cond_br(const std::string& cond, const std::string& t,
                                  const std::string& f) {
    IrInstruction in = make_instruction("br", "", "void", {{"i1", "%" + cond}});
    in.successors = {t, f};
    return in;
}

// A dataset of n records whose single informative slot drives the labels.
inline Dataset linear_dataset(int n, std::uint64_t seed) {
    Dataset ds;
    Rng rng(seed);
    for (int i = 0; i < n; ++i) {
        DesignRecord r;
        r.design = "lin";
        r.variant = "v" + std::to_string(i);
        r.device = "zynq7000";
        double x = rng.uniform(1.0, 100.0);
        r.features.slots[0] = x;
        r.features.slots[1] = rng.uniform(0.0, 1.0);
        r.features.target_freq_mhz = 100;
        r.labels.cp_ns = 1.0 + 0.05 * x;
        r.labels.latency_cycles = static_cast<std::int64_t>(10 + 3 * x);
        r.labels.luts = static_cast<std::int64_t>(100 + 20 * x);
        ds.records.push_back(std::move(r));
    }
    return ds;
}

}  // namespace hlsqor::test
