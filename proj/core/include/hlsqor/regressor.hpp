#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hlsqor/dataset.hpp"
#include "hlsqor/feature_vector.hpp"
#include "hlsqor/mlp.hpp"

namespace hlsqor {

enum class ModelKind { GradientBoost, RandomForest, Perceptron };
enum class Target { ClockPeriod, Latency, Luts };

std::string to_string(ModelKind kind);
std::string to_string(Target target);
ModelKind model_kind_from_string(std::string_view s);  // "gbt" | "rf" | "mlp"
Target target_from_string(std::string_view s);         // "cp" | "latency" | "lut"

/// Axis-aligned split node. Rows with x[feature] < threshold go left.
struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double value = 0.0;  // leaf prediction
    double gain = 0.0;   // squared-error reduction of the split
    bool is_leaf() const { return feature < 0; }
};

struct RegressionTree {
    std::vector<TreeNode> nodes;  // root at index 0
    double predict(std::span<const double> x) const;
};

struct GbtParams {
    double base_score = 0.0;
    double learning_rate = 0.1;
    std::vector<RegressionTree> trees;
};

struct ForestParams {
    std::vector<RegressionTree> trees;  // prediction = mean over trees
};

struct MlpParams {
    MlpNet net;
    std::vector<double> input_mean;   // train-set standardization
    std::vector<double> input_scale;
};

struct TrainedModel {
    ModelKind kind = ModelKind::GradientBoost;
    Target target = Target::ClockPeriod;
    int schema_version = kSchemaVersion;
    std::uint64_t training_seed = 0;
    std::map<std::string, double> hyperparams;
    bool log_labels = false;    // latency / LUT targets fit on log1p(y)
    double floor = 0.0;         // lower clamp on predictions, original units
    std::vector<std::string> feature_names;
    std::variant<GbtParams, ForestParams, MlpParams> params;
};

/// Frozen defaults per kind; keys double as the allowed hyperparameter set.
std::map<std::string, double> default_hyperparams(ModelKind kind);

/// Deterministic under (dataset, target, hyperparams, seed). Rows lacking
/// the target label are skipped; fewer than 10 usable rows is
/// InsufficientData. Unknown keys or out-of-range values raise BadHyperparam.
TrainedModel train(ModelKind kind, const Dataset& dataset, Target target,
                   const std::map<std::string, double>& hyperparams, std::uint64_t seed);

/// Finite prediction in original label units, clamped below at model.floor.
/// Throws SchemaMismatch when x.schema_version differs from the model's.
double predict(const TrainedModel& model, const FeatureVector& x);

/// Raw ensemble/net output on a 70-wide input, without label clamping
/// (still in original units).
double predict_raw(const TrainedModel& model, std::span<const double> input);

/// Versioned, self-describing JSON. Round trips are exact: a deserialized
/// model predicts bit-identically.
std::string serialize(const TrainedModel& model);
TrainedModel deserialize(std::string_view bytes);

void save_model(const TrainedModel& model, const std::string& path);
TrainedModel load_model(const std::string& path);

}  // namespace hlsqor
