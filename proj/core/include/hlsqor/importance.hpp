#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hlsqor/feature_vector.hpp"
#include "hlsqor/regressor.hpp"

namespace hlsqor {

/// Gain-based feature importances of a tree ensemble, rescaled so the
/// largest value is 100. per_slot covers all 70 model inputs in schema
/// order; per_source sums the 69 schema slots by family (the frequency
/// input belongs to no family).
struct ImportanceReport {
    std::vector<std::pair<std::string, double>> per_slot;
    std::vector<std::pair<std::string, double>> per_source;  // HLS code, IR, CDFG, callgraph
};

/// Throws UnsupportedModelKind for the perceptron (no split gains exist).
ImportanceReport importance_report(const TrainedModel& model);

/// Two-section CSV: per-slot rows, a blank line, then per-source rows.
std::string importance_csv(const ImportanceReport& report);

}  // namespace hlsqor
