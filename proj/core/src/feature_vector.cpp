#include "hlsqor/feature_vector.hpp"

#include <cmath>

#include "detail/csv.hpp"
#include "hlsqor/numeric.hpp"
#include "hlsqor/errors.hpp"

namespace hlsqor {

std::string to_string(FeatureSource source) {
    switch (source) {
        case FeatureSource::HlsCode: return "hls_code";
        case FeatureSource::IrCode: return "ir_code";
        case FeatureSource::Cdfg: return "cdfg";
        case FeatureSource::CallGraph: return "callgraph";
    }
    return "?";
}

FeatureSource slot_source(int slot) {
    if (slot < SourceFeatures::kCount) return FeatureSource::HlsCode;
    if (slot < SourceFeatures::kCount + IrFeatures::kCount) return FeatureSource::IrCode;
    if (slot < SourceFeatures::kCount + IrFeatures::kCount + CdfgFeatures::kCount)
        return FeatureSource::Cdfg;
    return FeatureSource::CallGraph;
}

const std::array<std::string, kSlotCount>& slot_names() {
    static const std::array<std::string, kSlotCount> names = [] {
        std::array<std::string, kSlotCount> out;
        std::size_t i = 0;
        for (const std::string& n : SourceFeatures::names()) out[i++] = n;
        for (const std::string& n : IrFeatures::names()) out[i++] = n;
        for (const std::string& n : CdfgFeatures::names()) out[i++] = n;
        for (const std::string& n : CallGraphFeatures::names()) out[i++] = n;
        return out;
    }();
    return names;
}

const std::array<std::string, kInputCount>& input_names() {
    static const std::array<std::string, kInputCount> names = [] {
        std::array<std::string, kInputCount> out;
        for (int i = 0; i < kSlotCount; ++i) out[static_cast<std::size_t>(i)] = slot_names()[static_cast<std::size_t>(i)];
        out[kSlotCount] = "target_freq_mhz";
        return out;
    }();
    return names;
}

std::array<double, kInputCount> FeatureVector::as_input() const {
    std::array<double, kInputCount> out;
    for (int i = 0; i < kSlotCount; ++i) out[static_cast<std::size_t>(i)] = slots[static_cast<std::size_t>(i)];
    out[kSlotCount] = target_freq_mhz;
    return out;
}

FeatureVector assemble(const SourceFeatures& src, const IrFeatures& ir, const CdfgFeatures& cdfg,
                       const CallGraphFeatures& cg, double target_freq_mhz) {
    FeatureVector v;
    std::size_t i = 0;
    for (double x : src.as_array()) v.slots[i++] = x;
    for (double x : ir.as_array()) v.slots[i++] = x;
    for (double x : cdfg.as_array()) v.slots[i++] = x;
    for (double x : cg.as_array()) v.slots[i++] = x;

    for (int s = 0; s < kSlotCount; ++s)
        if (!std::isfinite(v.slots[static_cast<std::size_t>(s)]))
            throw NonFiniteFeature(slot_names()[static_cast<std::size_t>(s)]);
    if (!std::isfinite(target_freq_mhz) || target_freq_mhz <= 0)
        throw NonFiniteFeature("target_freq_mhz");
    v.target_freq_mhz = target_freq_mhz;
    return v;
}

std::string feature_csv_header() {
    std::string out;
    const auto& names = input_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ',';
        out += names[i];
    }
    out += '\n';
    return out;
}

std::string feature_csv_row(const FeatureVector& v) {
    std::string out;
    auto input = v.as_input();
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (i) out += ',';
        out += format_double(input[i]);
    }
    out += '\n';
    return out;
}

std::vector<FeatureVector> parse_feature_csv(std::string_view text) {
    std::size_t eol = text.find('\n');
    std::string header(text.substr(0, eol == std::string_view::npos ? text.size() : eol));
    if (!header.empty() && header.back() == '\r') header.pop_back();
    std::string expected = feature_csv_header();
    expected.pop_back();  // trailing newline
    if (header != expected) throw SchemaMismatch("feature CSV header does not match the schema");

    std::vector<FeatureVector> rows;
    std::size_t pos = eol == std::string_view::npos ? text.size() : eol + 1;
    int row_no = 1;
    while (pos < text.size()) {
        std::size_t next = text.find('\n', pos);
        if (next == std::string_view::npos) next = text.size();
        std::string_view line = text.substr(pos, next - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = next + 1;
        ++row_no;
        if (line.empty()) continue;

        std::vector<std::string> cells = detail::split_csv_line(line);
        if (cells.size() != static_cast<std::size_t>(kInputCount))
            throw BadValue(row_no, "expected " + std::to_string(kInputCount) + " cells, got " +
                                       std::to_string(cells.size()));
        FeatureVector v;
        for (int s = 0; s < kSlotCount; ++s) {
            auto value = parse_double(cells[static_cast<std::size_t>(s)]);
            if (!value || !std::isfinite(*value))
                throw BadValue(row_no, "bad number '" + cells[static_cast<std::size_t>(s)] + "'");
            v.slots[static_cast<std::size_t>(s)] = *value;
        }
        auto freq = parse_double(cells.back());
        if (!freq || !std::isfinite(*freq) || *freq <= 0)
            throw BadValue(row_no, "bad target_freq_mhz");
        v.target_freq_mhz = *freq;
        rows.push_back(v);
    }
    return rows;
}

}  // namespace hlsqor
