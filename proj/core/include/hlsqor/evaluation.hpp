#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hlsqor/dataset.hpp"
#include "hlsqor/regressor.hpp"

namespace hlsqor {

/// Mean absolute percentage error: (1/N) * sum |(y - yhat) / y| * 100.
/// Throws LengthMismatch and ZeroActual.
double mape(std::span<const double> actual, std::span<const double> predicted);

/// 1 - SS_res / SS_tot with mean-centered SS_tot; may be negative.
/// Throws DegenerateActual when N < 2 or all actuals are equal.
double r_squared(std::span<const double> actual, std::span<const double> predicted);

struct EvalReport {
    struct TargetStats {
        std::optional<double> mape_percent;  // absent when no labeled rows
        std::optional<double> r_squared;
        int rows_evaluated = 0;
        int rows_skipped = 0;  // label absent
    };
    std::map<Target, TargetStats> per_target;
    // design -> target -> MAPE; absent = NA (no labeled rows for that design)
    std::map<std::string, std::map<Target, std::optional<double>>> per_design;

    std::string to_csv() const;  // includes an empty baseline_estimate column
    std::string to_text() const;
};

/// Predict every test row with the per-target models and aggregate MAPE/R².
/// Rows lacking a target label are skipped for that target only.
EvalReport evaluate(const std::map<Target, TrainedModel>& models, const Dataset& test);

/// Train at nested subsets of a fixed 75% pool and score R² on the held-out
/// 25%. Fractions are relative to the pool and must lie in (0, 1].
std::vector<std::pair<double, double>> learning_curve(const Dataset& dataset, ModelKind kind,
                                                      Target target,
                                                      std::span<const double> fractions,
                                                      std::uint64_t seed);

/// Per-design train/predict protocol (default 120 train rows per design),
/// averaged across designs, for all three model kinds.
struct ComparisonTable {
    std::vector<ModelKind> kinds;
    std::vector<Target> targets;
    // kinds x targets; absent = NA (no design had usable labels)
    std::vector<std::vector<std::optional<double>>> mape_percent;

    std::string to_csv() const;
    std::string to_text() const;
};

ComparisonTable model_comparison(const Dataset& dataset, std::span<const Target> targets,
                                 std::uint64_t seed, int train_count = 120);

/// One row per frequency: the frequency input is substituted, every schema
/// slot held fixed.
struct SweepRow {
    double freq_mhz = 0;
    double cp_ns = 0;
    double latency_cycles = 0;
    double luts = 0;
};

std::vector<SweepRow> frequency_sweep(const std::map<Target, TrainedModel>& models,
                                      const FeatureVector& base_features,
                                      std::span<const double> freqs_mhz);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_text(const std::vector<SweepRow>& rows);

}  // namespace hlsqor
