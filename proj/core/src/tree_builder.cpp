#include "detail/tree_builder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hlsqor::detail {

namespace {

constexpr double kMinGain = 1e-12;

struct Split {
    int feature = -1;
    double threshold = 0;
    double gain = 0;
};

double subset_mean(std::span<const double> y, const std::vector<int>& rows) {
    double sum = 0;
    for (int r : rows) sum += y[static_cast<std::size_t>(r)];
    return rows.empty() ? 0.0 : sum / static_cast<double>(rows.size());
}

// Candidate feature order: all features ascending, or a without-replacement
// sample drawn from the tree's stream.
std::vector<int> candidate_features(int width, int per_split, Rng& rng) {
    std::vector<int> all(static_cast<std::size_t>(width));
    std::iota(all.begin(), all.end(), 0);
    if (per_split <= 0 || per_split >= width) return all;
    std::vector<int> picked;
    picked.reserve(static_cast<std::size_t>(per_split));
    for (int k = 0; k < per_split; ++k) {
        std::size_t j = static_cast<std::size_t>(k) +
                        static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(width - k)));
        std::swap(all[static_cast<std::size_t>(k)], all[j]);
        picked.push_back(all[static_cast<std::size_t>(k)]);
    }
    return picked;
}

Split best_split(const std::vector<std::vector<double>>& x, std::span<const double> y,
                 const std::vector<int>& rows, const TreeBuildConfig& config, Rng& rng) {
    const std::size_t n = rows.size();
    Split best;

    double total_sum = 0;
    for (int r : rows) total_sum += y[static_cast<std::size_t>(r)];
    const double parent_score = total_sum * total_sum / static_cast<double>(n);

    std::vector<int> order(rows);
    for (int feature : candidate_features(static_cast<int>(x[0].size()), config.features_per_split, rng)) {
        auto value = [&](int r) { return x[static_cast<std::size_t>(r)][static_cast<std::size_t>(feature)]; };
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return value(a) < value(b) || (value(a) == value(b) && a < b); });

        double left_sum = 0;
        for (std::size_t i = 1; i < n; ++i) {
            left_sum += y[static_cast<std::size_t>(order[i - 1])];
            if (value(order[i - 1]) == value(order[i])) continue;
            const std::size_t n_left = i;
            const std::size_t n_right = n - i;
            if (n_left < static_cast<std::size_t>(config.min_leaf) ||
                n_right < static_cast<std::size_t>(config.min_leaf))
                continue;
            const double right_sum = total_sum - left_sum;
            const double gain = left_sum * left_sum / static_cast<double>(n_left) +
                                right_sum * right_sum / static_cast<double>(n_right) - parent_score;
            if (gain > best.gain + kMinGain) {
                best.feature = feature;
                best.threshold = value(order[i - 1]) + (value(order[i]) - value(order[i - 1])) / 2;
                best.gain = gain;
            }
        }
    }
    return best;
}

int build_node(RegressionTree& tree, const std::vector<std::vector<double>>& x,
               std::span<const double> y, std::vector<int> rows, int depth,
               const TreeBuildConfig& config, Rng& rng) {
    const int index = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    tree.nodes[static_cast<std::size_t>(index)].value = subset_mean(y, rows);

    if (depth >= config.max_depth || rows.size() < 2 * static_cast<std::size_t>(config.min_leaf))
        return index;

    Split split = best_split(x, y, rows, config, rng);
    if (split.feature < 0) return index;

    std::vector<int> left_rows;
    std::vector<int> right_rows;
    for (int r : rows) {
        if (x[static_cast<std::size_t>(r)][static_cast<std::size_t>(split.feature)] < split.threshold)
            left_rows.push_back(r);
        else
            right_rows.push_back(r);
    }
    rows.clear();
    rows.shrink_to_fit();

    const int left = build_node(tree, x, y, std::move(left_rows), depth + 1, config, rng);
    const int right = build_node(tree, x, y, std::move(right_rows), depth + 1, config, rng);
    TreeNode& node = tree.nodes[static_cast<std::size_t>(index)];
    node.feature = split.feature;
    node.threshold = split.threshold;
    node.gain = split.gain;
    node.left = left;
    node.right = right;
    return index;
}

}  // namespace

RegressionTree build_tree(const std::vector<std::vector<double>>& x, std::span<const double> y,
                          std::vector<int> rows, const TreeBuildConfig& config, Rng& rng) {
    RegressionTree tree;
    build_node(tree, x, y, std::move(rows), 0, config, rng);
    return tree;
}

}  // namespace hlsqor::detail
