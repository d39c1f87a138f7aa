#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlsqor/feature_vector.hpp"

namespace hlsqor {

struct Labels {
    std::optional<double> cp_ns;
    std::optional<std::int64_t> latency_cycles;
    std::optional<std::int64_t> luts;
};

/// One labeled design variant. At least one label must be present.
struct DesignRecord {
    std::string design;
    std::string variant;
    std::string device;
    FeatureVector features;
    Labels labels;
};

struct Dataset {
    int schema_version = kSchemaVersion;
    std::vector<DesignRecord> records;
};

/// CSV schema (bit-exact): header
///   design,variant,device,<69 slot names>,target_freq_mhz,cp_ns,latency_cycles,luts
/// UTF-8, '.' decimal separator, missing labels as empty cells. Numbers are
/// written in shortest round-trip form, so save/load is lossless.
Dataset load_csv(const std::string& path);
void save_csv(const Dataset& dataset, const std::string& path);
std::string to_csv(const Dataset& dataset);
Dataset from_csv(std::string_view text);

/// Deterministic shuffle-split. Records whose feature vectors are identical
/// (frequency included) never straddle the split: any test-side copy of a
/// training key is moved to the training side, so train may exceed
/// train_count. An empty test set is reported through `warnings`.
std::pair<Dataset, Dataset> split(const Dataset& dataset, int train_count, std::uint64_t seed,
                                  std::vector<std::string>* warnings = nullptr);

/// Synthetic labeled dataset for desk-scale validation. Features are drawn
/// from ranges mimicking the reference-corpus spreads and labels follow the
/// fixed generator documented in docs/synthetic-data.md, with multiplicative
/// uniform noise of the given level. Byte-identical across runs for a fixed
/// (n, seed, noise_level).
Dataset synthetic_generate(int n, std::uint64_t seed, double noise_level);

/// The noiseless ground-truth labels for a feature vector plus device, i.e.
/// the documented generator function itself. Exposed so tests can verify
/// synthetic labels against it.
Labels synthetic_ground_truth(const FeatureVector& features);

}  // namespace hlsqor
