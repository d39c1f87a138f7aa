#include "hlsqor/regressor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "detail/tree_builder.hpp"
#include "hlsqor/errors.hpp"
#include "hlsqor/rng.hpp"

namespace hlsqor {

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::GradientBoost: return "gradient_boost";
        case ModelKind::RandomForest: return "random_forest";
        case ModelKind::Perceptron: return "perceptron";
    }
    return "?";
}

std::string to_string(Target target) {
    switch (target) {
        case Target::ClockPeriod: return "cp";
        case Target::Latency: return "latency";
        case Target::Luts: return "lut";
    }
    return "?";
}

ModelKind model_kind_from_string(std::string_view s) {
    if (s == "gbt" || s == "gradient_boost") return ModelKind::GradientBoost;
    if (s == "rf" || s == "random_forest") return ModelKind::RandomForest;
    if (s == "mlp" || s == "perceptron") return ModelKind::Perceptron;
    throw BadValue(0, "unknown model kind '" + std::string(s) + "' (expected gbt, rf or mlp)");
}

Target target_from_string(std::string_view s) {
    if (s == "cp") return Target::ClockPeriod;
    if (s == "latency") return Target::Latency;
    if (s == "lut" || s == "luts") return Target::Luts;
    throw BadValue(0, "unknown target '" + std::string(s) + "' (expected cp, latency or lut)");
}

double RegressionTree::predict(std::span<const double> x) const {
    std::size_t i = 0;
    while (!nodes[i].is_leaf()) {
        const TreeNode& node = nodes[i];
        i = static_cast<std::size_t>(x[static_cast<std::size_t>(node.feature)] < node.threshold
                                         ? node.left
                                         : node.right);
    }
    return nodes[i].value;
}

std::map<std::string, double> default_hyperparams(ModelKind kind) {
    switch (kind) {
        case ModelKind::GradientBoost:
            return {{"trees", 200}, {"max_depth", 4}, {"learning_rate", 0.1}, {"min_leaf", 2}};
        case ModelKind::RandomForest:
            // features_per_split 9 = ceil(sqrt(70))
            return {{"trees", 200}, {"max_depth", 12}, {"min_leaf", 1}, {"features_per_split", 9},
                    {"bootstrap", 1}};
        case ModelKind::Perceptron:
            return {{"hidden1", 64}, {"hidden2", 32}, {"epochs", 500}, {"learning_rate", 1e-3},
                    {"batch", 32}};
    }
    return {};
}

namespace {

struct HyperparamRange {
    double lo;
    double hi;
    const char* description;
};

const std::map<std::string, HyperparamRange>& hyperparam_ranges() {
    static const std::map<std::string, HyperparamRange> ranges = {
        {"trees", {1, 100000, "[1, 100000]"}},
        {"max_depth", {1, 64, "[1, 64]"}},
        {"learning_rate", {1e-9, 1.0, "(0, 1]"}},
        {"min_leaf", {1, 1000000, "[1, n]"}},
        {"features_per_split", {0, kInputCount, "[0, 70]"}},
        {"bootstrap", {0, 1, "0 or 1"}},
        {"hidden1", {1, 4096, "[1, 4096]"}},
        {"hidden2", {0, 4096, "[0, 4096]"}},
        {"epochs", {1, 1000000, "[1, 1e6]"}},
        {"batch", {1, 1000000, "[1, n]"}},
    };
    return ranges;
}

std::map<std::string, double> resolve_hyperparams(ModelKind kind,
                                                  const std::map<std::string, double>& overrides) {
    std::map<std::string, double> params = default_hyperparams(kind);
    for (const auto& [key, value] : overrides) {
        if (params.find(key) == params.end())
            throw BadHyperparam(key, "not a parameter of " + to_string(kind));
        const HyperparamRange& range = hyperparam_ranges().at(key);
        if (!std::isfinite(value) || value < range.lo || value > range.hi)
            throw BadHyperparam(key, range.description);
        params[key] = value;
    }
    return params;
}

struct TrainingData {
    std::vector<std::vector<double>> x;  // rows of 70 inputs
    std::vector<double> y;               // transformed target
};

bool target_of(const DesignRecord& r, Target target, double& out) {
    switch (target) {
        case Target::ClockPeriod:
            if (!r.labels.cp_ns) return false;
            out = *r.labels.cp_ns;
            return true;
        case Target::Latency:
            if (!r.labels.latency_cycles) return false;
            out = static_cast<double>(*r.labels.latency_cycles);
            return true;
        case Target::Luts:
            if (!r.labels.luts) return false;
            out = static_cast<double>(*r.labels.luts);
            return true;
    }
    return false;
}

TrainingData collect(const Dataset& dataset, Target target, bool log_labels) {
    TrainingData data;
    for (const DesignRecord& r : dataset.records) {
        double y = 0;
        if (!target_of(r, target, y)) continue;
        auto input = r.features.as_input();
        data.x.emplace_back(input.begin(), input.end());
        data.y.push_back(log_labels ? std::log1p(y) : y);
    }
    return data;
}

double fixed_order_mean(std::span<const double> v) {
    double sum = 0;
    for (double x : v) sum += x;
    return v.empty() ? 0.0 : sum / static_cast<double>(v.size());
}

GbtParams train_gbt(const TrainingData& data, const std::map<std::string, double>& hp,
                    std::uint64_t seed) {
    GbtParams params;
    params.learning_rate = hp.at("learning_rate");
    params.base_score = fixed_order_mean(data.y);

    detail::TreeBuildConfig config;
    config.max_depth = static_cast<int>(hp.at("max_depth"));
    config.min_leaf = static_cast<int>(hp.at("min_leaf"));
    config.features_per_split = 0;

    const int n = static_cast<int>(data.x.size());
    std::vector<double> residual(data.y.begin(), data.y.end());
    for (double& r : residual) r -= params.base_score;

    std::vector<int> all_rows(static_cast<std::size_t>(n));
    std::iota(all_rows.begin(), all_rows.end(), 0);

    const int rounds = static_cast<int>(hp.at("trees"));
    for (int m = 0; m < rounds; ++m) {
        Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(m)));
        RegressionTree tree = detail::build_tree(data.x, residual, all_rows, config, rng);
        for (int i = 0; i < n; ++i)
            residual[static_cast<std::size_t>(i)] -=
                params.learning_rate * tree.predict(data.x[static_cast<std::size_t>(i)]);
        params.trees.push_back(std::move(tree));
    }
    return params;
}

ForestParams train_forest(const TrainingData& data, const std::map<std::string, double>& hp,
                          std::uint64_t seed) {
    ForestParams params;
    detail::TreeBuildConfig config;
    config.max_depth = static_cast<int>(hp.at("max_depth"));
    config.min_leaf = static_cast<int>(hp.at("min_leaf"));
    config.features_per_split = static_cast<int>(hp.at("features_per_split"));

    const int n = static_cast<int>(data.x.size());
    const int count = static_cast<int>(hp.at("trees"));
    const bool bootstrap = hp.at("bootstrap") != 0;
    for (int t = 0; t < count; ++t) {
        Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(t)));
        std::vector<int> rows(static_cast<std::size_t>(n));
        if (bootstrap) {
            for (int& r : rows) r = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
            std::sort(rows.begin(), rows.end());
        } else {
            std::iota(rows.begin(), rows.end(), 0);
        }
        params.trees.push_back(detail::build_tree(data.x, data.y, std::move(rows), config, rng));
    }
    return params;
}

MlpParams train_mlp(const TrainingData& data, const std::map<std::string, double>& hp,
                    std::uint64_t seed) {
    const int n = static_cast<int>(data.x.size());
    const int width = static_cast<int>(data.x[0].size());

    MlpParams params;
    params.input_mean.assign(static_cast<std::size_t>(width), 0.0);
    params.input_scale.assign(static_cast<std::size_t>(width), 1.0);
    for (int f = 0; f < width; ++f) {
        double sum = 0;
        for (const auto& row : data.x) sum += row[static_cast<std::size_t>(f)];
        const double mean = sum / n;
        double var = 0;
        for (const auto& row : data.x) {
            const double d = row[static_cast<std::size_t>(f)] - mean;
            var += d * d;
        }
        var /= n;
        params.input_mean[static_cast<std::size_t>(f)] = mean;
        params.input_scale[static_cast<std::size_t>(f)] = var > 0 ? std::sqrt(var) : 1.0;
    }

    std::vector<std::vector<double>> xs(data.x.size());
    for (std::size_t i = 0; i < data.x.size(); ++i) {
        xs[i].resize(static_cast<std::size_t>(width));
        for (int f = 0; f < width; ++f)
            xs[i][static_cast<std::size_t>(f)] =
                (data.x[i][static_cast<std::size_t>(f)] - params.input_mean[static_cast<std::size_t>(f)]) /
                params.input_scale[static_cast<std::size_t>(f)];
    }

    std::vector<int> sizes{width};
    if (static_cast<int>(hp.at("hidden1")) > 0) sizes.push_back(static_cast<int>(hp.at("hidden1")));
    if (static_cast<int>(hp.at("hidden2")) > 0) sizes.push_back(static_cast<int>(hp.at("hidden2")));
    sizes.push_back(1);

    Rng rng(seed);
    params.net = MlpNet::init(sizes, rng);

    const int epochs = static_cast<int>(hp.at("epochs"));
    const int batch = static_cast<int>(hp.at("batch"));
    const double step = hp.at("learning_rate");
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);

    std::vector<std::vector<double>> batch_x;
    std::vector<double> batch_y;
    for (int epoch = 0; epoch < epochs; ++epoch) {
        rng.shuffle(order);
        for (int begin = 0; begin < n; begin += batch) {
            const int end = std::min(n, begin + batch);
            batch_x.clear();
            batch_y.clear();
            for (int i = begin; i < end; ++i) {
                batch_x.push_back(xs[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
                batch_y.push_back(data.y[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
            }
            MlpNet::Gradients g = params.net.gradients(batch_x, batch_y);
            params.net.apply_update(g, step);
        }
    }
    return params;
}

}  // namespace

TrainedModel train(ModelKind kind, const Dataset& dataset, Target target,
                   const std::map<std::string, double>& hyperparams, std::uint64_t seed) {
    TrainedModel model;
    model.kind = kind;
    model.target = target;
    model.schema_version = dataset.schema_version;
    model.training_seed = seed;
    model.hyperparams = resolve_hyperparams(kind, hyperparams);
    model.log_labels = target != Target::ClockPeriod;
    model.floor = target == Target::ClockPeriod ? 0.1 : 0.0;
    const auto& names = input_names();
    model.feature_names.assign(names.begin(), names.end());

    TrainingData data = collect(dataset, target, model.log_labels);
    if (data.x.size() < 10)
        throw InsufficientData("need >= 10 rows with a " + to_string(target) + " label, have " +
                               std::to_string(data.x.size()));

    switch (kind) {
        case ModelKind::GradientBoost:
            model.params = train_gbt(data, model.hyperparams, seed);
            break;
        case ModelKind::RandomForest:
            model.params = train_forest(data, model.hyperparams, seed);
            break;
        case ModelKind::Perceptron:
            model.params = train_mlp(data, model.hyperparams, seed);
            break;
    }
    return model;
}

double predict_raw(const TrainedModel& model, std::span<const double> input) {
    double raw = 0;
    if (const auto* gbt = std::get_if<GbtParams>(&model.params)) {
        raw = gbt->base_score;
        for (const RegressionTree& tree : gbt->trees) raw += gbt->learning_rate * tree.predict(input);
    } else if (const auto* forest = std::get_if<ForestParams>(&model.params)) {
        double sum = 0;
        for (const RegressionTree& tree : forest->trees) sum += tree.predict(input);
        raw = forest->trees.empty() ? 0.0 : sum / static_cast<double>(forest->trees.size());
    } else {
        const auto& mlp = std::get<MlpParams>(model.params);
        std::vector<double> standardized(input.size());
        for (std::size_t i = 0; i < input.size(); ++i)
            standardized[i] = (input[i] - mlp.input_mean[i]) / mlp.input_scale[i];
        raw = mlp.net.forward(standardized);
    }

    if (model.log_labels) {
        // expm1 overflows past ~709; cap the transformed value so the
        // prediction stays finite.
        raw = std::expm1(std::min(raw, 40.0));
    }
    if (!std::isfinite(raw)) raw = raw > 0 ? 1e300 : -1e300;
    return raw;
}

double predict(const TrainedModel& model, const FeatureVector& x) {
    if (x.schema_version != model.schema_version)
        throw SchemaMismatch("feature vector schema v" + std::to_string(x.schema_version) +
                             " vs model schema v" + std::to_string(model.schema_version));
    auto input = x.as_input();
    return std::max(model.floor, predict_raw(model, input));
}

}  // namespace hlsqor
