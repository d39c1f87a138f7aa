#pragma once

#include <span>
#include <vector>

#include "hlsqor/rng.hpp"

namespace hlsqor {

/// Fully connected rectifier network with a linear output, trained on
/// squared error. Exposed separately from the model wrapper so the analytic
/// gradients can be checked against finite differences.
struct MlpNet {
    std::vector<int> layer_sizes;                    // e.g. {70, 64, 32, 1}
    std::vector<std::vector<double>> weights;        // per layer, row-major [out x in]
    std::vector<std::vector<double>> biases;         // per layer, [out]

    static MlpNet init(const std::vector<int>& sizes, Rng& rng);

    double forward(std::span<const double> x) const;

    /// Mean squared error over the batch.
    double loss(const std::vector<std::vector<double>>& xs, std::span<const double> ys) const;

    struct Gradients {
        std::vector<std::vector<double>> weights;
        std::vector<std::vector<double>> biases;
    };

    /// Analytic gradient of loss() by backpropagation.
    Gradients gradients(const std::vector<std::vector<double>>& xs, std::span<const double> ys) const;

    void apply_update(const Gradients& g, double step);

    std::size_t parameter_count() const;
};

}  // namespace hlsqor
