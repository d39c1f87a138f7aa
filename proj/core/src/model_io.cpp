#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hlsqor/errors.hpp"
#include "hlsqor/regressor.hpp"

namespace hlsqor {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;
constexpr const char* kFormatTag = "hlsqor-model";

json tree_to_json(const RegressionTree& tree) {
    json nodes = json::array();
    for (const TreeNode& n : tree.nodes)
        nodes.push_back({n.feature, n.threshold, n.left, n.right, n.value, n.gain});
    return json{{"nodes", std::move(nodes)}};
}

RegressionTree tree_from_json(const json& j) {
    RegressionTree tree;
    const json& nodes = j.at("nodes");
    if (!nodes.is_array() || nodes.empty()) throw CorruptModel("tree without nodes");
    for (const json& n : nodes) {
        if (!n.is_array() || n.size() != 6) throw CorruptModel("malformed tree node");
        TreeNode node;
        node.feature = n[0].get<int>();
        node.threshold = n[1].get<double>();
        node.left = n[2].get<int>();
        node.right = n[3].get<int>();
        node.value = n[4].get<double>();
        node.gain = n[5].get<double>();
        if (node.feature >= kInputCount) throw CorruptModel("split feature out of range");
        if (!node.is_leaf() &&
            (node.left < 0 || node.right < 0 || node.left >= static_cast<int>(nodes.size()) ||
             node.right >= static_cast<int>(nodes.size())))
            throw CorruptModel("tree child index out of range");
        tree.nodes.push_back(node);
    }
    return tree;
}

json trees_to_json(const std::vector<RegressionTree>& trees) {
    json out = json::array();
    for (const RegressionTree& t : trees) out.push_back(tree_to_json(t));
    return out;
}

std::vector<RegressionTree> trees_from_json(const json& j) {
    std::vector<RegressionTree> out;
    for (const json& t : j) out.push_back(tree_from_json(t));
    return out;
}

}  // namespace

std::string serialize(const TrainedModel& model) {
    json j;
    j["format"] = kFormatTag;
    j["format_version"] = kFormatVersion;
    j["schema_version"] = model.schema_version;
    j["kind"] = to_string(model.kind);
    j["target"] = to_string(model.target);
    j["training_seed"] = model.training_seed;
    j["log_labels"] = model.log_labels;
    j["floor"] = model.floor;
    j["hyperparams"] = model.hyperparams;
    j["feature_names"] = model.feature_names;

    json params;
    if (const auto* gbt = std::get_if<GbtParams>(&model.params)) {
        params["base_score"] = gbt->base_score;
        params["learning_rate"] = gbt->learning_rate;
        params["trees"] = trees_to_json(gbt->trees);
    } else if (const auto* forest = std::get_if<ForestParams>(&model.params)) {
        params["trees"] = trees_to_json(forest->trees);
    } else {
        const auto& mlp = std::get<MlpParams>(model.params);
        params["layer_sizes"] = mlp.net.layer_sizes;
        params["weights"] = mlp.net.weights;
        params["biases"] = mlp.net.biases;
        params["input_mean"] = mlp.input_mean;
        params["input_scale"] = mlp.input_scale;
    }
    j["params"] = std::move(params);
    return j.dump() + "\n";
}

TrainedModel deserialize(std::string_view bytes) {
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::exception& e) {
        throw CorruptModel(e.what());
    }

    try {
        if (!j.is_object() || j.value("format", "") != kFormatTag)
            throw CorruptModel("not a model file (missing format tag)");
        const int format_version = j.at("format_version").get<int>();
        if (format_version > kFormatVersion)
            throw VersionMismatch("model file format v" + std::to_string(format_version) +
                                  " is newer than supported v" + std::to_string(kFormatVersion));

        TrainedModel model;
        model.kind = model_kind_from_string(j.at("kind").get<std::string>());
        model.target = target_from_string(j.at("target").get<std::string>());
        model.schema_version = j.at("schema_version").get<int>();
        model.training_seed = j.at("training_seed").get<std::uint64_t>();
        model.log_labels = j.at("log_labels").get<bool>();
        model.floor = j.at("floor").get<double>();
        model.hyperparams = j.at("hyperparams").get<std::map<std::string, double>>();
        model.feature_names = j.at("feature_names").get<std::vector<std::string>>();
        if (model.feature_names.size() != static_cast<std::size_t>(kInputCount) &&
            model.schema_version == kSchemaVersion)
            throw CorruptModel("feature name list does not match the schema width");

        const json& params = j.at("params");
        switch (model.kind) {
            case ModelKind::GradientBoost: {
                GbtParams gbt;
                gbt.base_score = params.at("base_score").get<double>();
                gbt.learning_rate = params.at("learning_rate").get<double>();
                gbt.trees = trees_from_json(params.at("trees"));
                model.params = std::move(gbt);
                break;
            }
            case ModelKind::RandomForest: {
                ForestParams forest;
                forest.trees = trees_from_json(params.at("trees"));
                model.params = std::move(forest);
                break;
            }
            case ModelKind::Perceptron: {
                MlpParams mlp;
                mlp.net.layer_sizes = params.at("layer_sizes").get<std::vector<int>>();
                mlp.net.weights = params.at("weights").get<std::vector<std::vector<double>>>();
                mlp.net.biases = params.at("biases").get<std::vector<std::vector<double>>>();
                mlp.input_mean = params.at("input_mean").get<std::vector<double>>();
                mlp.input_scale = params.at("input_scale").get<std::vector<double>>();
                if (mlp.net.layer_sizes.size() < 2 ||
                    mlp.net.weights.size() != mlp.net.layer_sizes.size() - 1 ||
                    mlp.net.biases.size() != mlp.net.weights.size())
                    throw CorruptModel("inconsistent perceptron layer shapes");
                model.params = std::move(mlp);
                break;
            }
        }
        return model;
    } catch (const json::exception& e) {
        throw CorruptModel(e.what());
    } catch (const BadValue& e) {
        throw CorruptModel(e.what());
    }
}

void save_model(const TrainedModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw BadValue(0, "cannot open '" + path + "' for writing");
    out << serialize(model);
}

TrainedModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BadValue(0, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return deserialize(buffer.str());
}

}  // namespace hlsqor
