#pragma once

#include <span>
#include <vector>

#include "hlsqor/regressor.hpp"
#include "hlsqor/rng.hpp"

namespace hlsqor::detail {

struct TreeBuildConfig {
    int max_depth = 4;
    int min_leaf = 1;
    int features_per_split = 0;  // 0 = consider every feature
};

/// Exact greedy least-squares tree over the given row subset. Deterministic:
/// candidate features are scanned in a fixed order, rows are ordered by
/// (value, row index), and the first strictly-best split wins.
RegressionTree build_tree(const std::vector<std::vector<double>>& x, std::span<const double> y,
                          std::vector<int> rows, const TreeBuildConfig& config, Rng& rng);

}  // namespace hlsqor::detail
