#include "hlsqor/dataset.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "detail/csv.hpp"
#include "hlsqor/numeric.hpp"
#include "hlsqor/errors.hpp"
#include "hlsqor/rng.hpp"

namespace hlsqor {

namespace {

std::vector<std::string> expected_header() {
    std::vector<std::string> header = {"design", "variant", "device"};
    for (const std::string& name : slot_names()) header.push_back(name);
    header.push_back("target_freq_mhz");
    header.push_back("cp_ns");
    header.push_back("latency_cycles");
    header.push_back("luts");
    return header;
}

}  // namespace

std::string to_csv(const Dataset& dataset) {
    std::string out;
    const std::vector<std::string> header = expected_header();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += header[i];
    }
    out += '\n';

    for (const DesignRecord& r : dataset.records) {
        out += detail::csv_escape(r.design);
        out += ',';
        out += detail::csv_escape(r.variant);
        out += ',';
        out += detail::csv_escape(r.device);
        for (double slot : r.features.slots) {
            out += ',';
            out += format_double(slot);
        }
        out += ',';
        out += format_double(r.features.target_freq_mhz);
        out += ',';
        if (r.labels.cp_ns) out += format_double(*r.labels.cp_ns);
        out += ',';
        if (r.labels.latency_cycles) out += std::to_string(*r.labels.latency_cycles);
        out += ',';
        if (r.labels.luts) out += std::to_string(*r.labels.luts);
        out += '\n';
    }
    return out;
}

Dataset from_csv(std::string_view text) {
    Dataset dataset;
    std::vector<std::string> lines;
    {
        std::size_t i = 0;
        while (i < text.size()) {
            std::size_t eol = text.find('\n', i);
            if (eol == std::string_view::npos) {
                lines.emplace_back(text.substr(i));
                break;
            }
            std::string_view line = text.substr(i, eol - i);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            lines.emplace_back(line);
            i = eol + 1;
        }
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw SchemaMismatch("empty file, header row is mandatory");

    const std::vector<std::string> header = expected_header();
    std::vector<std::string> got = detail::split_csv_line(lines[0]);
    if (got != header) {
        std::string msg = "header row does not match the dataset schema";
        if (got.size() != header.size())
            msg += " (" + std::to_string(got.size()) + " columns, expected " +
                   std::to_string(header.size()) + ")";
        throw SchemaMismatch(msg);
    }

    std::set<std::string> keys;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        if (lines[row].empty()) continue;
        std::vector<std::string> cells = detail::split_csv_line(lines[row]);
        int row_no = static_cast<int>(row) + 1;
        if (cells.size() != header.size())
            throw BadValue(row_no, "expected " + std::to_string(header.size()) + " cells, got " +
                                       std::to_string(cells.size()));

        DesignRecord r;
        r.design = cells[0];
        r.variant = cells[1];
        r.device = cells[2];
        std::string key = r.design + "\x1f" + r.variant + "\x1f" + r.device;
        if (!keys.insert(key).second)
            throw DuplicateKey(r.design + "/" + r.variant + "/" + r.device);

        for (int s = 0; s < kSlotCount; ++s) {
            auto v = parse_double(cells[static_cast<std::size_t>(3 + s)]);
            if (!v || !std::isfinite(*v))
                throw BadValue(row_no, "bad number in column '" + header[static_cast<std::size_t>(3 + s)] + "'");
            r.features.slots[static_cast<std::size_t>(s)] = *v;
        }
        auto freq = parse_double(cells[3 + kSlotCount]);
        if (!freq || !std::isfinite(*freq) || *freq <= 0)
            throw BadValue(row_no, "bad target_freq_mhz");
        r.features.target_freq_mhz = *freq;

        const std::string& cp_cell = cells[4 + kSlotCount];
        const std::string& lat_cell = cells[5 + kSlotCount];
        const std::string& lut_cell = cells[6 + kSlotCount];
        if (!cp_cell.empty()) {
            auto v = parse_double(cp_cell);
            if (!v || *v <= 0) throw BadValue(row_no, "cp_ns must be a positive number");
            r.labels.cp_ns = *v;
        }
        if (!lat_cell.empty()) {
            auto v = parse_int(lat_cell);
            if (!v || *v <= 0) throw BadValue(row_no, "latency_cycles must be a positive integer");
            r.labels.latency_cycles = *v;
        }
        if (!lut_cell.empty()) {
            auto v = parse_int(lut_cell);
            if (!v || *v <= 0) throw BadValue(row_no, "luts must be a positive integer");
            r.labels.luts = *v;
        }
        if (!r.labels.cp_ns && !r.labels.latency_cycles && !r.labels.luts)
            throw BadValue(row_no, "at least one label must be present");

        dataset.records.push_back(std::move(r));
    }
    return dataset;
}

Dataset load_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BadValue(0, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_csv(buffer.str());
}

void save_csv(const Dataset& dataset, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw BadValue(0, "cannot open '" + path + "' for writing");
    out << to_csv(dataset);
}

std::pair<Dataset, Dataset> split(const Dataset& dataset, int train_count, std::uint64_t seed,
                                  std::vector<std::string>* warnings) {
    const int n = static_cast<int>(dataset.records.size());
    if (train_count < 1 || train_count >= n)
        throw InsufficientData("train_count " + std::to_string(train_count) +
                               " must be in [1, " + std::to_string(n) + ")");

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    Rng rng(seed);
    rng.shuffle(order);

    // Identical feature vectors (frequency included) must not straddle the
    // split; every test-side copy of a training key moves to train.
    auto feature_key = [&](int i) {
        const FeatureVector& f = dataset.records[static_cast<std::size_t>(i)].features;
        std::string key;
        for (double v : f.as_input()) {
            key += format_double(v);
            key += ';';
        }
        return key;
    };

    std::set<std::string> train_keys;
    for (int i = 0; i < train_count; ++i)
        train_keys.insert(feature_key(order[static_cast<std::size_t>(i)]));

    std::vector<int> train_idx(order.begin(), order.begin() + train_count);
    std::vector<int> test_idx;
    for (int i = train_count; i < n; ++i) {
        int rec = order[static_cast<std::size_t>(i)];
        if (train_keys.count(feature_key(rec)) > 0) train_idx.push_back(rec);
        else test_idx.push_back(rec);
    }

    Dataset train{dataset.schema_version, {}};
    Dataset test{dataset.schema_version, {}};
    for (int i : train_idx) train.records.push_back(dataset.records[static_cast<std::size_t>(i)]);
    for (int i : test_idx) test.records.push_back(dataset.records[static_cast<std::size_t>(i)]);
    if (test.records.empty() && warnings)
        warnings->push_back("test set is empty: every record duplicates a training feature vector");
    return {std::move(train), std::move(test)};
}

}  // namespace hlsqor
