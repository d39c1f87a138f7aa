#include <algorithm>
#include <cmath>
#include <cstdio>

#include "hlsqor/dataset.hpp"
#include "hlsqor/errors.hpp"
#include "hlsqor/rng.hpp"

namespace hlsqor {

namespace {

// Slot offsets into the assembled vector.
constexpr int kSrc = 0;
constexpr int kIr = SourceFeatures::kCount;
constexpr int kCdfg = kIr + IrFeatures::kCount;
constexpr int kCg = kCdfg + CdfgFeatures::kCount;

double clampd(double v, double lo, double hi) { return std::min(hi, std::max(lo, v)); }

// Draw one plausible design variant. The label drivers (max batch size,
// pipeline II, unroll factor, instruction total, longest path, FCU count,
// child count, partition pragmas, frequency) are independent latents written
// straight into their schema slots; all remaining slots are either exact
// derived ratios of those latents or independent filler, so they carry no
// extra label information. Documented in docs/synthetic-data.md.
FeatureVector draw_features(Rng& rng) {
    FeatureVector v;
    auto slot = [&v](int i) -> double& { return v.slots[static_cast<std::size_t>(i)]; };

    // --- independent label drivers ---
    static const std::int64_t unroll_choices[] = {1, 2, 4, 8, 16, 32};
    const double max_unroll =
        static_cast<double>(unroll_choices[rng.next_below(std::size(unroll_choices))]);
    const double max_batch = std::round(std::exp(rng.uniform(std::log(16.0), std::log(1024.0))));
    const double loops = static_cast<double>(rng.uniform_int(1, 13));
    const double pipelined = static_cast<double>(rng.uniform_int(0, static_cast<std::int64_t>(loops)));
    const double avg_ii = pipelined > 0 ? rng.uniform(1.0, 8.0) : 0.0;
    const double partition_pragmas = static_cast<double>(rng.uniform_int(0, 6));

    const double blocks = static_cast<double>(rng.uniform_int(8, 96));
    const double instr_per_bb = rng.uniform(5.0, 20.0);
    const double instr_total = std::floor(blocks * instr_per_bb);
    const double longest = std::max(1.0, std::floor(blocks * rng.uniform(0.25, 0.95)));
    const double fcu = std::max(1.0, std::round(std::exp(rng.uniform(std::log(1.0), std::log(64.0)))));
    const double children = static_cast<double>(rng.uniform_int(0, 10));

    // --- source slots ---
    slot(kSrc + 0) = max_unroll;
    slot(kSrc + 1) = 1.0 + (max_unroll - 1.0) * 0.5;  // avg unroll, exact ratio
    slot(kSrc + 2) = max_batch;
    slot(kSrc + 3) = std::round(max_batch * 0.7 * 4.0) / 4.0;  // avg batch, exact ratio
    slot(kSrc + 4) = std::floor(loops * rng.uniform(0.0, 0.8));  // unrolled loops (filler)
    slot(kSrc + 5) = pipelined;
    slot(kSrc + 6) = pipelined > 0 ? std::ceil(avg_ii * 1.25) : 0.0;  // max II, exact ratio
    slot(kSrc + 7) = avg_ii;
    slot(kSrc + 8) =
        pipelined > 0 ? static_cast<double>(rng.uniform_int(1, static_cast<std::int64_t>(loops))) : 0.0;
    slot(kSrc + 9) = partition_pragmas;
    slot(kSrc + 10) = static_cast<double>(rng.uniform_int(0, 4));  // reshape pragmas (filler)
    slot(kSrc + 11) = static_cast<double>(rng.uniform_int(0, 5));  // inlined functions (filler)
    slot(kSrc + 12) = loops;

    // --- IR slots: family triples as exact shares of the instruction total ---
    static const double family_share[7] = {0.30, 0.02, 0.03, 0.12, 0.25, 0.01, 0.12};
    const double instr_max = std::floor(instr_per_bb * 1.8);
    for (int k = 0; k < 7; ++k) {
        const double total = std::floor(instr_total * family_share[k]);
        const double avg = total / blocks;
        slot(kIr + 3 * k + 0) = total > 0 ? std::max(1.0, std::floor(instr_max * family_share[k] * 1.5)) : 0;
        slot(kIr + 3 * k + 1) = avg;
        slot(kIr + 3 * k + 2) = total;
    }
    slot(kIr + 21) = instr_max;
    slot(kIr + 22) = instr_total / blocks;
    slot(kIr + 23) = instr_total;
    slot(kIr + 24) = blocks;
    slot(kIr + 25) = instr_total;
    const double memory_total = slot(kIr + 3 * 4 + 2);
    slot(kIr + 26) = std::floor(memory_total * 0.55);  // loads
    slot(kIr + 27) = std::floor(memory_total * 0.30);  // stores
    slot(kIr + 28) = static_cast<double>(rng.uniform_int(0, 12));  // calls (filler)
    slot(kIr + 29) = std::floor(blocks * 0.9);          // branches
    slot(kIr + 30) = static_cast<double>(rng.uniform_int(2, 8));   // distinct types (filler)
    static const double widths[] = {8, 16, 32, 64};
    slot(kIr + 31) = widths[rng.next_below(std::size(widths))];    // widest int (filler)
    const bool uses_float = rng.next_below(4) == 0;
    slot(kIr + 32) = uses_float ? std::floor(instr_total * 0.15) : 0;  // float ops
    slot(kIr + 33) = uses_float && rng.next_below(2) == 0 ? std::floor(instr_total * 0.1) : 0;
    slot(kIr + 34) = std::floor(memory_total * 0.35);   // geps
    slot(kIr + 35) = std::floor(blocks * 0.6);          // phis
    slot(kIr + 36) = static_cast<double>(rng.uniform_int(0, 10));  // selects (filler)
    slot(kIr + 37) = std::floor(blocks * 0.8);          // cmps
    slot(kIr + 38) = static_cast<double>(rng.uniform_int(0, 2));   // switches (filler)
    slot(kIr + 39) = 1;                                 // rets
    slot(kIr + 40) = static_cast<double>(rng.uniform_int(0, 4));   // allocas (filler)
    slot(kIr + 41) = static_cast<double>(rng.uniform_int(0, 30));  // global accesses (filler)
    slot(kIr + 42) = static_cast<double>(rng.uniform_int(2, 6));   // max operands (filler)
    slot(kIr + 43) = rng.uniform(1.5, 3.0);                        // avg operands (filler)

    // --- CDFG slots ---
    slot(kCdfg + 0) = blocks;
    slot(kCdfg + 1) = longest;
    slot(kCdfg + 2) = fcu;
    const double max_degree = static_cast<double>(rng.uniform_int(2, 6));
    slot(kCdfg + 3) = max_degree;                                  // filler
    slot(kCdfg + 4) = rng.uniform(1.5, max_degree);                // filler
    slot(kCdfg + 5) = std::floor(blocks * rng.uniform(1.0, 4.0));  // data edges (filler)

    // --- callgraph slots ---
    slot(kCg + 0) = children;
    if (children > 0) {
        const double max_child_fcu = static_cast<double>(rng.uniform_int(1, 40));
        slot(kCg + 1) = max_child_fcu;
        slot(kCg + 2) = std::floor(rng.uniform(0.0, max_child_fcu));
        slot(kCg + 3) = static_cast<double>(rng.uniform_int(1, 400));
        const double max_cp = rng.uniform(1.5, 9.0);
        slot(kCg + 4) = max_cp;
        slot(kCg + 5) = rng.uniform(0.0, max_cp);
    }

    static const double freqs[] = {100, 125, 150, 175, 200, 225, 300, 500};
    v.target_freq_mhz = freqs[rng.next_below(std::size(freqs))];
    return v;
}

struct RawLabels {
    double cp = 0;
    double latency = 0;
    double luts = 0;
};

// The documented ground-truth surface, before rounding and clamping.
RawLabels raw_labels(const FeatureVector& v) {
    auto slot = [&v](int i) { return v.slots[static_cast<std::size_t>(i)]; };
    const double max_unroll = slot(kSrc + 0);
    const double max_batch = slot(kSrc + 2);
    const double avg_ii = slot(kSrc + 7);
    const double partition_pragmas = slot(kSrc + 9);
    const double instr_max = slot(kIr + 21);
    const double instr_total = slot(kIr + 23);
    const double longest = slot(kCdfg + 1);
    const double fcu = slot(kCdfg + 2);
    const double children = slot(kCg + 0);
    const double freq = v.target_freq_mhz;

    RawLabels raw;
    raw.cp = 0.9 + 0.55 * std::pow(1000.0 / freq, 0.85) + 0.015 * longest + 0.12 * std::sqrt(fcu) +
             0.004 * instr_max;
    raw.latency = 2.0 + max_batch * (1.5 + 0.15 * avg_ii) + 0.5 * longest;
    raw.luts = 4.0 + instr_total * (12.0 + 0.2 * max_unroll + 0.3 * partition_pragmas) +
               2.0 * fcu + 60.0 * children;
    return raw;
}

Labels finalize_labels(const RawLabels& raw) {
    Labels labels;
    labels.cp_ns = clampd(raw.cp, 1.4, 9.4);
    labels.latency_cycles =
        static_cast<std::int64_t>(clampd(std::round(raw.latency), 2.0, 63536.0));
    labels.luts = static_cast<std::int64_t>(clampd(std::round(raw.luts), 4.0, 60537.0));
    return labels;
}

}  // namespace

Labels synthetic_ground_truth(const FeatureVector& features) {
    return finalize_labels(raw_labels(features));
}

Dataset synthetic_generate(int n, std::uint64_t seed, double noise_level) {
    if (n < 1) throw InsufficientData("synthetic dataset size must be >= 1");
    if (noise_level < 0 || !std::isfinite(noise_level))
        throw BadValue(0, "noise level must be a non-negative fraction");

    static const char* devices[] = {"zynq7000", "virtex7", "kintex7"};

    Dataset dataset;
    dataset.records.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(i)));
        DesignRecord r;
        char name[32];
        std::snprintf(name, sizeof(name), "synth_%03d", i / 400);
        r.design = name;
        std::snprintf(name, sizeof(name), "v%04d", i % 400);
        r.variant = name;
        r.device = devices[rng.next_below(std::size(devices))];
        r.features = draw_features(rng);

        RawLabels raw = raw_labels(r.features);
        raw.cp *= 1.0 + noise_level * rng.uniform(-1.0, 1.0);
        raw.latency *= 1.0 + noise_level * rng.uniform(-1.0, 1.0);
        raw.luts *= 1.0 + noise_level * rng.uniform(-1.0, 1.0);
        r.labels = finalize_labels(raw);
        dataset.records.push_back(std::move(r));
    }
    return dataset;
}

}  // namespace hlsqor
