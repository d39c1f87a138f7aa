#include "hlsqor/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

#include "hlsqor/numeric.hpp"
#include "hlsqor/errors.hpp"
#include "hlsqor/rng.hpp"

namespace hlsqor {

double mape(std::span<const double> actual, std::span<const double> predicted) {
    if (actual.size() != predicted.size()) throw LengthMismatch(actual.size(), predicted.size());
    if (actual.empty()) throw LengthMismatch(0, 0);
    double sum = 0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        if (actual[i] == 0) throw ZeroActual();
        sum += std::abs((actual[i] - predicted[i]) / actual[i]);
    }
    return sum / static_cast<double>(actual.size()) * 100.0;
}

double r_squared(std::span<const double> actual, std::span<const double> predicted) {
    if (actual.size() != predicted.size()) throw LengthMismatch(actual.size(), predicted.size());
    if (actual.size() < 2) throw DegenerateActual();
    double mean = 0;
    for (double a : actual) mean += a;
    mean /= static_cast<double>(actual.size());

    double ss_res = 0;
    double ss_tot = 0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        ss_res += (actual[i] - predicted[i]) * (actual[i] - predicted[i]);
        ss_tot += (actual[i] - mean) * (actual[i] - mean);
    }
    if (ss_tot == 0) throw DegenerateActual();
    return 1.0 - ss_res / ss_tot;
}

namespace {

std::optional<double> label_of(const DesignRecord& r, Target target) {
    switch (target) {
        case Target::ClockPeriod: return r.labels.cp_ns;
        case Target::Latency:
            if (!r.labels.latency_cycles) return std::nullopt;
            return static_cast<double>(*r.labels.latency_cycles);
        case Target::Luts:
            if (!r.labels.luts) return std::nullopt;
            return static_cast<double>(*r.labels.luts);
    }
    return std::nullopt;
}

std::string format_cell(const std::optional<double>& v) {
    return v ? format_double(*v) : "NA";
}

}  // namespace

EvalReport evaluate(const std::map<Target, TrainedModel>& models, const Dataset& test) {
    EvalReport report;
    for (const auto& [target, model] : models) {
        std::vector<double> actual;
        std::vector<double> predicted;
        std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> by_design;
        int skipped = 0;
        for (const DesignRecord& r : test.records) {
            std::optional<double> label = label_of(r, target);
            if (!label) {
                ++skipped;
                continue;
            }
            const double p = predict(model, r.features);
            actual.push_back(*label);
            predicted.push_back(p);
            by_design[r.design].first.push_back(*label);
            by_design[r.design].second.push_back(p);
        }

        EvalReport::TargetStats stats;
        stats.rows_evaluated = static_cast<int>(actual.size());
        stats.rows_skipped = skipped;
        if (!actual.empty()) stats.mape_percent = mape(actual, predicted);
        if (actual.size() >= 2) {
            bool degenerate = std::all_of(actual.begin(), actual.end(),
                                          [&](double a) { return a == actual.front(); });
            if (!degenerate) stats.r_squared = r_squared(actual, predicted);
        }
        report.per_target[target] = stats;

        for (const DesignRecord& r : test.records) {
            auto it = by_design.find(r.design);
            if (it == by_design.end())
                report.per_design[r.design][target] = std::nullopt;
            else
                report.per_design[r.design][target] = mape(it->second.first, it->second.second);
        }
    }
    return report;
}

std::string EvalReport::to_csv() const {
    std::string out = "design,target,mape_percent,r_squared,rows_evaluated,rows_skipped,baseline_estimate\n";
    for (const auto& [target, stats] : per_target) {
        out += "ALL," + to_string(target) + "," + format_cell(stats.mape_percent) + "," +
               format_cell(stats.r_squared) + "," + std::to_string(stats.rows_evaluated) + "," +
               std::to_string(stats.rows_skipped) + ",\n";
    }
    for (const auto& [design, targets] : per_design)
        for (const auto& [target, value] : targets)
            out += design + "," + to_string(target) + "," + format_cell(value) + ",,,,\n";
    return out;
}

std::string EvalReport::to_text() const {
    std::ostringstream out;
    auto rounded = [](const std::optional<double>& v) {
        if (!v) return std::string("NA");
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3f", *v);
        return std::string(buf);
    };
    out << "target       MAPE%       R^2   rows  skipped\n";
    for (const auto& [target, stats] : per_target) {
        char line[128];
        std::snprintf(line, sizeof(line), "%-10s %7s %9s %6d %8d\n", to_string(target).c_str(),
                      rounded(stats.mape_percent).c_str(), rounded(stats.r_squared).c_str(),
                      stats.rows_evaluated, stats.rows_skipped);
        out << line;
    }
    if (!per_design.empty()) {
        out << "\nper-design MAPE%:\n";
        for (const auto& [design, targets] : per_design) {
            out << "  " << design << ":";
            for (const auto& [target, value] : targets)
                out << " " << to_string(target) << "=" << rounded(value);
            out << "\n";
        }
    }
    return out.str();
}

std::vector<std::pair<double, double>> learning_curve(const Dataset& dataset, ModelKind kind,
                                                      Target target,
                                                      std::span<const double> fractions,
                                                      std::uint64_t seed) {
    for (double f : fractions)
        if (!(f > 0.0 && f <= 1.0))
            throw BadValue(0, "learning-curve fractions must lie in (0, 1]");

    // Fixed 25% held-out set, chosen before any subsetting.
    const int n = static_cast<int>(dataset.records.size());
    const int holdout = std::max(1, n / 4);
    const int pool = n - holdout;
    if (pool < 10) throw InsufficientData("dataset too small for a learning curve");

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(order);

    Dataset held{dataset.schema_version, {}};
    for (int i = pool; i < n; ++i)
        held.records.push_back(dataset.records[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);

    std::vector<double> actual;
    for (const DesignRecord& r : held.records) {
        std::optional<double> label = label_of(r, target);
        if (label) actual.push_back(*label);
    }
    if (actual.size() < 2) throw InsufficientData("held-out set lacks labeled rows");

    std::vector<std::pair<double, double>> points;
    for (double fraction : fractions) {
        const int take = std::max(1, static_cast<int>(std::ceil(fraction * pool)));
        Dataset train_set{dataset.schema_version, {}};
        for (int i = 0; i < std::min(take, pool); ++i)
            train_set.records.push_back(
                dataset.records[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);

        TrainedModel model = train(kind, train_set, target, {}, seed);
        std::vector<double> a;
        std::vector<double> p;
        for (const DesignRecord& r : held.records) {
            std::optional<double> label = label_of(r, target);
            if (!label) continue;
            a.push_back(*label);
            p.push_back(predict(model, r.features));
        }
        points.emplace_back(fraction, r_squared(a, p));
    }
    return points;
}

ComparisonTable model_comparison(const Dataset& dataset, std::span<const Target> targets,
                                 std::uint64_t seed, int train_count) {
    ComparisonTable table;
    table.kinds = {ModelKind::Perceptron, ModelKind::RandomForest, ModelKind::GradientBoost};
    table.targets.assign(targets.begin(), targets.end());

    std::set<std::string> design_set;
    for (const DesignRecord& r : dataset.records) design_set.insert(r.design);

    // Split each design once, then score every (kind, target) pair on it.
    std::vector<std::pair<Dataset, Dataset>> splits;
    for (const std::string& design : design_set) {
        Dataset subset{dataset.schema_version, {}};
        for (const DesignRecord& r : dataset.records)
            if (r.design == design) subset.records.push_back(r);
        splits.push_back(split(subset, train_count, seed));
    }

    for (ModelKind kind : table.kinds) {
        std::vector<std::optional<double>> row;
        for (Target target : table.targets) {
            double sum = 0;
            int designs_scored = 0;
            for (const auto& [train_set, test_set] : splits) {
                std::vector<double> a;
                std::vector<double> p;
                TrainedModel model = train(kind, train_set, target, {}, seed);
                for (const DesignRecord& r : test_set.records) {
                    std::optional<double> label = label_of(r, target);
                    if (!label) continue;
                    a.push_back(*label);
                    p.push_back(predict(model, r.features));
                }
                if (a.empty()) continue;  // design has no labels for this target
                sum += mape(a, p);
                ++designs_scored;
            }
            if (designs_scored > 0) row.emplace_back(sum / designs_scored);
            else row.emplace_back(std::nullopt);
        }
        table.mape_percent.push_back(std::move(row));
    }
    return table;
}

std::string ComparisonTable::to_csv() const {
    std::string out = "model";
    for (Target t : targets) out += "," + to_string(t);
    out += "\n";
    for (std::size_t k = 0; k < kinds.size(); ++k) {
        out += to_string(kinds[k]);
        for (std::size_t t = 0; t < targets.size(); ++t)
            out += "," + format_cell(mape_percent[k][t]);
        out += "\n";
    }
    return out;
}

std::string ComparisonTable::to_text() const {
    std::ostringstream out;
    out << "MAPE% per model and target\n";
    char line[160];
    std::string header = "model          ";
    for (Target t : targets) {
        std::snprintf(line, sizeof(line), " %10s", to_string(t).c_str());
        header += line;
    }
    out << header << "\n";
    for (std::size_t k = 0; k < kinds.size(); ++k) {
        std::snprintf(line, sizeof(line), "%-15s", to_string(kinds[k]).c_str());
        out << line;
        for (std::size_t t = 0; t < targets.size(); ++t) {
            std::string cell = mape_percent[k][t]
                                   ? format_double(std::round(*mape_percent[k][t] * 100) / 100)
                                   : std::string("NA");
            std::snprintf(line, sizeof(line), " %10s", cell.c_str());
            out << line;
        }
        out << "\n";
    }
    return out.str();
}

std::vector<SweepRow> frequency_sweep(const std::map<Target, TrainedModel>& models,
                                      const FeatureVector& base_features,
                                      std::span<const double> freqs_mhz) {
    for (const auto& [target, model] : models)
        if (model.schema_version != base_features.schema_version)
            throw SchemaMismatch("sweep models must share the feature schema");

    std::vector<SweepRow> rows;
    for (double freq : freqs_mhz) {
        if (!(freq > 0)) throw BadValue(0, "sweep frequencies must be positive");
        FeatureVector v = base_features;
        v.target_freq_mhz = freq;
        SweepRow row;
        row.freq_mhz = freq;
        for (const auto& [target, model] : models) {
            const double p = predict(model, v);
            switch (target) {
                case Target::ClockPeriod: row.cp_ns = p; break;
                case Target::Latency: row.latency_cycles = p; break;
                case Target::Luts: row.luts = p; break;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "target_freq_mhz,cp_ns,latency_cycles,luts\n";
    for (const SweepRow& r : rows) {
        out += format_double(r.freq_mhz) + "," + format_double(r.cp_ns) + "," +
               format_double(r.latency_cycles) + "," + format_double(r.luts) + "\n";
    }
    return out;
}

std::string sweep_text(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "freq (MHz)   clock period (ns)   latency (cycles)      # of LUTs\n";
    for (const SweepRow& r : rows) {
        char line[160];
        std::snprintf(line, sizeof(line), "%10.0f %19.3f %18.0f %14.0f\n", r.freq_mhz, r.cp_ns,
                      std::round(r.latency_cycles), std::round(r.luts));
        out << line;
    }
    return out.str();
}

}  // namespace hlsqor
