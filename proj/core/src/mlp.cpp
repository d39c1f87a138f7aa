#include "hlsqor/mlp.hpp"

#include <cmath>

namespace hlsqor {

MlpNet MlpNet::init(const std::vector<int>& sizes, Rng& rng) {
    MlpNet net;
    net.layer_sizes = sizes;
    for (std::size_t l = 1; l < sizes.size(); ++l) {
        const int fan_in = sizes[l - 1];
        const int fan_out = sizes[l];
        const double limit = std::sqrt(6.0 / (fan_in + fan_out));
        std::vector<double> w(static_cast<std::size_t>(fan_in) * static_cast<std::size_t>(fan_out));
        for (double& v : w) v = rng.uniform(-limit, limit);
        net.weights.push_back(std::move(w));
        net.biases.emplace_back(static_cast<std::size_t>(fan_out), 0.0);
    }
    return net;
}

namespace {

// Activations per layer for one sample; z-values are recoverable from the
// rectifier outputs, so only post-activation values are stored.
std::vector<std::vector<double>> forward_pass(const MlpNet& net, std::span<const double> x) {
    std::vector<std::vector<double>> acts;
    acts.emplace_back(x.begin(), x.end());
    const std::size_t layers = net.weights.size();
    for (std::size_t l = 0; l < layers; ++l) {
        const int in_n = net.layer_sizes[l];
        const int out_n = net.layer_sizes[l + 1];
        std::vector<double> out(static_cast<std::size_t>(out_n));
        const bool last = l + 1 == layers;
        for (int o = 0; o < out_n; ++o) {
            double z = net.biases[l][static_cast<std::size_t>(o)];
            const double* row = net.weights[l].data() + static_cast<std::size_t>(o) * static_cast<std::size_t>(in_n);
            for (int i = 0; i < in_n; ++i) z += row[i] * acts.back()[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(o)] = last ? z : (z > 0 ? z : 0.0);
        }
        acts.push_back(std::move(out));
    }
    return acts;
}

}  // namespace

double MlpNet::forward(std::span<const double> x) const {
    return forward_pass(*this, x).back()[0];
}

double MlpNet::loss(const std::vector<std::vector<double>>& xs, std::span<const double> ys) const {
    double sum = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double d = forward(xs[i]) - ys[i];
        sum += d * d;
    }
    return sum / static_cast<double>(xs.size());
}

MlpNet::Gradients MlpNet::gradients(const std::vector<std::vector<double>>& xs,
                                    std::span<const double> ys) const {
    Gradients g;
    for (std::size_t l = 0; l < weights.size(); ++l) {
        g.weights.emplace_back(weights[l].size(), 0.0);
        g.biases.emplace_back(biases[l].size(), 0.0);
    }

    const std::size_t layers = weights.size();
    const double inv_n = 1.0 / static_cast<double>(xs.size());
    for (std::size_t s = 0; s < xs.size(); ++s) {
        std::vector<std::vector<double>> acts = forward_pass(*this, xs[s]);
        // dL/d(output) for mean squared error
        std::vector<double> delta{2.0 * (acts.back()[0] - ys[s]) * inv_n};

        for (std::size_t l = layers; l-- > 0;) {
            const int in_n = layer_sizes[l];
            const int out_n = layer_sizes[l + 1];
            const std::vector<double>& a_in = acts[l];
            std::vector<double> next_delta(static_cast<std::size_t>(in_n), 0.0);
            for (int o = 0; o < out_n; ++o) {
                const double d = delta[static_cast<std::size_t>(o)];
                if (d == 0.0) continue;
                double* gw = g.weights[l].data() + static_cast<std::size_t>(o) * static_cast<std::size_t>(in_n);
                const double* w = weights[l].data() + static_cast<std::size_t>(o) * static_cast<std::size_t>(in_n);
                for (int i = 0; i < in_n; ++i) {
                    gw[i] += d * a_in[static_cast<std::size_t>(i)];
                    next_delta[static_cast<std::size_t>(i)] += d * w[i];
                }
                g.biases[l][static_cast<std::size_t>(o)] += d;
            }
            if (l > 0) {
                // Rectifier derivative: zero where the activation was clipped.
                for (int i = 0; i < in_n; ++i)
                    if (acts[l][static_cast<std::size_t>(i)] <= 0.0)
                        next_delta[static_cast<std::size_t>(i)] = 0.0;
                delta = std::move(next_delta);
            }
        }
    }
    return g;
}

void MlpNet::apply_update(const Gradients& g, double step) {
    for (std::size_t l = 0; l < weights.size(); ++l) {
        for (std::size_t i = 0; i < weights[l].size(); ++i) weights[l][i] -= step * g.weights[l][i];
        for (std::size_t i = 0; i < biases[l].size(); ++i) biases[l][i] -= step * g.biases[l][i];
    }
}

std::size_t MlpNet::parameter_count() const {
    std::size_t n = 0;
    for (std::size_t l = 0; l < weights.size(); ++l) n += weights[l].size() + biases[l].size();
    return n;
}

}  // namespace hlsqor
