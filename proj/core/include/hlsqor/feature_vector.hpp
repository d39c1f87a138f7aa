#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "hlsqor/callgraph.hpp"
#include "hlsqor/cdfg.hpp"
#include "hlsqor/ir_features.hpp"
#include "hlsqor/source_scanner.hpp"

namespace hlsqor {

inline constexpr int kSchemaVersion = 1;

/// 13 source + 44 IR + 6 CDFG + 6 callgraph schema slots.
inline constexpr int kSlotCount = 69;

/// Schema slots plus the target-frequency input fed to the models.
inline constexpr int kInputCount = 70;

enum class FeatureSource { HlsCode, IrCode, Cdfg, CallGraph };

std::string to_string(FeatureSource source);

/// Which family a schema slot belongs to.
FeatureSource slot_source(int slot);

/// Fixed slot names in schema order.
const std::array<std::string, kSlotCount>& slot_names();

/// Slot names plus "target_freq_mhz": the names of the full model input.
const std::array<std::string, kInputCount>& input_names();

struct FeatureVector {
    int schema_version = kSchemaVersion;
    std::array<double, kSlotCount> slots{};
    double target_freq_mhz = 0.0;

    /// The 70-wide model input: schema slots with the frequency appended.
    std::array<double, kInputCount> as_input() const;

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

/// Concatenate the four families in schema order [13 | 44 | 6 | 6] and
/// append the frequency input. Throws NonFiniteFeature naming the offending
/// slot when a value is not finite or the frequency is not positive.
FeatureVector assemble(const SourceFeatures& src, const IrFeatures& ir, const CdfgFeatures& cdfg,
                       const CallGraphFeatures& cg, double target_freq_mhz);

/// Feature CSV: the 70 input names as header, one lossless (shortest
/// round-trip) numeric row per vector.
std::string feature_csv_header();
std::string feature_csv_row(const FeatureVector& v);

/// Parses a feature CSV (header + rows). Throws SchemaMismatch on a foreign
/// header and BadValue (with the row number) on bad cells.
std::vector<FeatureVector> parse_feature_csv(std::string_view text);

}  // namespace hlsqor
