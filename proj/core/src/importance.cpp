#include "hlsqor/importance.hpp"

#include <algorithm>

#include "hlsqor/numeric.hpp"
#include "hlsqor/errors.hpp"

namespace hlsqor {

ImportanceReport importance_report(const TrainedModel& model) {
    const std::vector<RegressionTree>* trees = nullptr;
    if (const auto* gbt = std::get_if<GbtParams>(&model.params)) trees = &gbt->trees;
    else if (const auto* forest = std::get_if<ForestParams>(&model.params)) trees = &forest->trees;
    else throw UnsupportedModelKind("feature importance is undefined for the perceptron");

    std::vector<double> gain(static_cast<std::size_t>(kInputCount), 0.0);
    for (const RegressionTree& tree : *trees)
        for (const TreeNode& node : tree.nodes)
            if (!node.is_leaf()) gain[static_cast<std::size_t>(node.feature)] += node.gain;

    // Rescale so the largest importance is 100.
    const double peak = *std::max_element(gain.begin(), gain.end());
    if (peak > 0)
        for (double& g : gain) g = g / peak * 100.0;

    ImportanceReport report;
    for (int i = 0; i < kInputCount; ++i)
        report.per_slot.emplace_back(input_names()[static_cast<std::size_t>(i)],
                                     gain[static_cast<std::size_t>(i)]);

    const FeatureSource sources[] = {FeatureSource::HlsCode, FeatureSource::IrCode,
                                     FeatureSource::Cdfg, FeatureSource::CallGraph};
    for (FeatureSource source : sources) {
        double sum = 0;
        for (int i = 0; i < kSlotCount; ++i)
            if (slot_source(i) == source) sum += gain[static_cast<std::size_t>(i)];
        report.per_source.emplace_back(to_string(source), sum);
    }
    return report;
}

std::string importance_csv(const ImportanceReport& report) {
    std::string out = "slot,importance\n";
    for (const auto& [name, value] : report.per_slot)
        out += name + "," + format_double(value) + "\n";
    out += "\nsource,importance\n";
    for (const auto& [name, value] : report.per_source)
        out += name + "," + format_double(value) + "\n";
    return out;
}

}  // namespace hlsqor
