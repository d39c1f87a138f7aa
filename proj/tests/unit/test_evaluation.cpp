#include <doctest.h>

#include <cmath>

#include "hlsqor/evaluation.hpp"
#include "hlsqor/errors.hpp"
#include "hlsqor/importance.hpp"
#include "hlsqor/rng.hpp"
#include "test_helpers.hpp"

using namespace hlsqor;

TEST_CASE("mape basics") {
    std::vector<double> same{3.0, 4.0, 5.0};
    CHECK(mape(same, same) == 0.0);

    std::vector<double> a{100.0};
    std::vector<double> p{110.0};
    CHECK(mape(a, p) == doctest::Approx(10.0));

    // frozen from the reference sweep rows at 100 and 125 MHz
    std::vector<double> actual{7.74, 6.64};
    std::vector<double> predicted{7.44, 7.41};
    CHECK(mape(actual, predicted) == doctest::Approx(7.736).epsilon(0.0002));

    CHECK_THROWS_AS(mape(std::vector<double>{1.0}, std::vector<double>{1.0, 2.0}), LengthMismatch);
    CHECK_THROWS_AS(mape(std::vector<double>{0.0}, std::vector<double>{1.0}), ZeroActual);
    CHECK_THROWS_AS(mape(std::vector<double>{}, std::vector<double>{}), LengthMismatch);
}

TEST_CASE("property: mape is scale-invariant") {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 20));
        std::vector<double> a(n);
        std::vector<double> p(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = rng.uniform(0.5, 100.0);
            p[i] = rng.uniform(0.5, 100.0);
        }
        double k = rng.uniform(0.01, 50.0);
        std::vector<double> ka(a);
        std::vector<double> kp(p);
        for (double& x : ka) x *= k;
        for (double& x : kp) x *= k;
        CHECK(mape(ka, kp) == doctest::Approx(mape(a, p)).epsilon(1e-9));
    }
}

TEST_CASE("r_squared basics") {
    std::vector<double> a{1.0, 2.0, 3.0, 4.0};
    CHECK(r_squared(a, a) == 1.0);

    double mean = 2.5;
    std::vector<double> at_mean(4, mean);
    CHECK(std::abs(r_squared(a, at_mean)) < 1e-12);

    std::vector<double> worse{10.0, -10.0, 10.0, -10.0};
    CHECK(r_squared(a, worse) < 0.0);

    CHECK_THROWS_AS(r_squared(std::vector<double>{1.0}, std::vector<double>{1.0}), DegenerateActual);
    CHECK_THROWS_AS(r_squared(std::vector<double>{2.0, 2.0}, std::vector<double>{1.0, 3.0}),
                    DegenerateActual);
}

TEST_CASE("evaluate reports per-target and per-design stats with NA handling") {
    Dataset ds = test::linear_dataset(40, 3);
    // second design with no latency labels at all
    for (int i = 0; i < 10; ++i) {
        DesignRecord r = ds.records[static_cast<std::size_t>(i)];
        r.design = "nolat";
        r.variant = "w" + std::to_string(i);
        r.labels.latency_cycles.reset();
        ds.records.push_back(std::move(r));
    }
    std::map<Target, TrainedModel> models;
    for (Target t : {Target::ClockPeriod, Target::Latency, Target::Luts})
        models[t] = train(ModelKind::GradientBoost, ds, t, {}, 3);

    EvalReport report = evaluate(models, ds);
    CHECK(report.per_target.at(Target::Latency).rows_evaluated == 40);
    CHECK(report.per_target.at(Target::Latency).rows_skipped == 10);
    CHECK(report.per_target.at(Target::ClockPeriod).rows_evaluated == 50);
    CHECK(!report.per_design.at("nolat").at(Target::Latency).has_value());
    CHECK(report.per_design.at("nolat").at(Target::Luts).has_value());

    std::string csv = report.to_csv();
    CHECK(csv.find("nolat,latency,NA") != std::string::npos);
    CHECK(csv.find("baseline_estimate") != std::string::npos);
    std::string text = report.to_text();
    CHECK(text.find("latency") != std::string::npos);
}

TEST_CASE("learning_curve shape and degenerate fraction") {
    Dataset ds = test::linear_dataset(80, 4);
    std::vector<double> fractions{0.5, 1.0};
    auto points = learning_curve(ds, ModelKind::GradientBoost, Target::ClockPeriod, fractions, 4);
    REQUIRE(points.size() == 2);
    CHECK(points[0].first == 0.5);
    CHECK(points[1].first == 1.0);

    // fraction 1.0 equals a plain train/eval on the fixed 75/25 split
    auto single = learning_curve(ds, ModelKind::GradientBoost, Target::ClockPeriod,
                                 std::vector<double>{1.0}, 4);
    CHECK(single[0].second == points[1].second);

    CHECK_THROWS_AS(learning_curve(ds, ModelKind::GradientBoost, Target::ClockPeriod,
                                   std::vector<double>{1.5}, 4),
                    BadValue);
    CHECK_THROWS_AS(learning_curve(ds, ModelKind::GradientBoost, Target::ClockPeriod,
                                   std::vector<double>{0.0}, 4),
                    BadValue);
}

TEST_CASE("model_comparison emits a 3x3 table, deterministic per seed") {
    Dataset ds = synthetic_generate(60, 21, 0.02);
    const Target targets[] = {Target::ClockPeriod, Target::Latency, Target::Luts};
    ComparisonTable table = model_comparison(ds, targets, 21, 20);
    CHECK(table.kinds.size() == 3);
    CHECK(table.targets.size() == 3);
    REQUIRE(table.mape_percent.size() == 3);
    for (const auto& row : table.mape_percent) {
        REQUIRE(row.size() == 3);
        for (const auto& cell : row) CHECK(cell.has_value());
    }
    ComparisonTable again = model_comparison(ds, targets, 21, 20);
    CHECK(table.to_csv() == again.to_csv());
    CHECK(table.to_text().find("gradient_boost") != std::string::npos);
}

TEST_CASE("model_comparison on constant labels is zero for the tree models") {
    Dataset ds;
    Rng rng(61);
    for (int i = 0; i < 40; ++i) {
        DesignRecord r;
        r.design = "const";
        r.variant = "v" + std::to_string(i);
        r.device = "zynq7000";
        r.features.slots[0] = rng.uniform(0, 50);
        r.features.target_freq_mhz = 100;
        r.labels.cp_ns = 4.0;
        r.labels.latency_cycles = 77;
        r.labels.luts = 1234;
        ds.records.push_back(std::move(r));
    }
    const Target targets[] = {Target::ClockPeriod, Target::Latency, Target::Luts};
    ComparisonTable table = model_comparison(ds, targets, 61, 15);
    for (std::size_t k = 0; k < table.kinds.size(); ++k) {
        for (std::size_t t = 0; t < table.targets.size(); ++t) {
            REQUIRE(table.mape_percent[k][t].has_value());
            if (table.kinds[k] == ModelKind::Perceptron)
                CHECK(*table.mape_percent[k][t] < 50.0);  // only approaches the constant
            else
                CHECK(*table.mape_percent[k][t] == doctest::Approx(0.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("frequency sweep substitutes only the frequency input") {
    Dataset ds = synthetic_generate(80, 31, 0.0);
    std::map<Target, TrainedModel> models;
    for (Target t : {Target::ClockPeriod, Target::Latency, Target::Luts})
        models[t] = train(ModelKind::GradientBoost, ds, t, {}, 31);

    const double freqs[] = {100, 125, 150, 175, 200, 225, 300, 500};
    auto rows = frequency_sweep(models, ds.records[0].features, freqs);
    REQUIRE(rows.size() == 8);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].freq_mhz == freqs[i]);

    std::string csv = sweep_csv(rows);
    CHECK(csv.rfind("target_freq_mhz,cp_ns,latency_cycles,luts\n", 0) == 0);
    CHECK(sweep_text(rows).find("clock period") != std::string::npos);
}

TEST_CASE("a frequency-blind model yields identical sweep rows") {
    // single tree splitting on slot 0 only
    TrainedModel m;
    m.kind = ModelKind::RandomForest;
    m.target = Target::ClockPeriod;
    m.floor = 0.1;
    ForestParams params;
    RegressionTree tree;
    tree.nodes.push_back({0, 5.0, 1, 2, 0.0, 1.0});
    tree.nodes.push_back({-1, 0, -1, -1, 3.0, 0});
    tree.nodes.push_back({-1, 0, -1, -1, 6.0, 0});
    params.trees.push_back(tree);
    m.params = params;

    std::map<Target, TrainedModel> models{{Target::ClockPeriod, m}};
    FeatureVector base;
    base.slots[0] = 2.0;
    base.target_freq_mhz = 100;
    auto rows = frequency_sweep(models, base, std::vector<double>{100, 200, 500});
    CHECK(rows[0].cp_ns == rows[1].cp_ns);
    CHECK(rows[1].cp_ns == rows[2].cp_ns);
}

TEST_CASE("random-forest sweep predictions stay within the training label range") {
    Dataset ds = synthetic_generate(100, 41, 0.0);
    TrainedModel m = train(ModelKind::RandomForest, ds, Target::ClockPeriod, {}, 41);
    double lo = 1e30;
    double hi = -1e30;
    for (const DesignRecord& r : ds.records) {
        lo = std::min(lo, *r.labels.cp_ns);
        hi = std::max(hi, *r.labels.cp_ns);
    }
    std::map<Target, TrainedModel> models{{Target::ClockPeriod, m}};
    const double freqs[] = {100, 125, 150, 175, 200, 225, 300, 500};
    for (const SweepRow& row : frequency_sweep(models, ds.records[5].features, freqs)) {
        CHECK(row.cp_ns >= std::max(lo, 0.1));
        CHECK(row.cp_ns <= hi);
    }
}

TEST_CASE("tree models beat the constant-mean baseline on the synthetic protocol") {
    // gradient boost must clear a 2x margin; the forest must be strictly
    // better (under its frozen defaults the sqrt(d) feature subsample dilutes
    // the dominant frequency driver, so 2x is out of reach for it)
    Dataset ds = synthetic_generate(400, 7, 0.05);
    auto parts = split(ds, 120, 7);
    const Dataset& train_set = parts.first;
    const Dataset& test_set = parts.second;
    for (Target t : {Target::ClockPeriod, Target::Latency, Target::Luts}) {
        auto label = [&](const DesignRecord& r) -> std::optional<double> {
            if (t == Target::ClockPeriod) return r.labels.cp_ns;
            if (t == Target::Latency)
                return r.labels.latency_cycles ? std::optional<double>(double(*r.labels.latency_cycles))
                                               : std::nullopt;
            return r.labels.luts ? std::optional<double>(double(*r.labels.luts)) : std::nullopt;
        };
        double mean = 0;
        int n = 0;
        for (const DesignRecord& r : train_set.records)
            if (auto y = label(r)) {
                mean += *y;
                ++n;
            }
        mean /= n;
        std::vector<double> actual;
        std::vector<double> at_mean;
        for (const DesignRecord& r : test_set.records)
            if (auto y = label(r)) {
                actual.push_back(*y);
                at_mean.push_back(mean);
            }
        const double baseline = mape(actual, at_mean);

        auto held_out = [&](ModelKind kind) {
            TrainedModel m = train(kind, train_set, t, {}, 7);
            std::vector<double> p;
            for (const DesignRecord& r : test_set.records)
                if (label(r)) p.push_back(predict(m, r.features));
            return mape(actual, p);
        };
        CHECK(held_out(ModelKind::GradientBoost) <= 0.5 * baseline);
        CHECK(held_out(ModelKind::RandomForest) < baseline);
    }
}

TEST_CASE("importance: single-feature ensembles normalize to 100") {
    TrainedModel m;
    m.kind = ModelKind::GradientBoost;
    m.target = Target::ClockPeriod;
    GbtParams params;
    params.base_score = 0;
    params.learning_rate = 0.1;
    RegressionTree tree;
    tree.nodes.push_back({3, 1.0, 1, 2, 0.0, 42.0});
    tree.nodes.push_back({-1, 0, -1, -1, 1.0, 0});
    tree.nodes.push_back({-1, 0, -1, -1, 2.0, 0});
    params.trees.push_back(tree);
    params.trees.push_back(tree);
    m.params = params;

    ImportanceReport report = importance_report(m);
    REQUIRE(report.per_slot.size() == kInputCount);
    for (const auto& [name, value] : report.per_slot) {
        if (name == slot_names()[3]) CHECK(value == 100.0);
        else CHECK(value == 0.0);
    }
    // per-source sums equal the sum of member slots: slot 3 is HLS code
    REQUIRE(report.per_source.size() == 4);
    CHECK(report.per_source[0].first == "hls_code");
    CHECK(report.per_source[0].second == 100.0);
    CHECK(report.per_source[1].second == 0.0);

    std::string csv = importance_csv(report);
    CHECK(csv.find("source,importance") != std::string::npos);
}

TEST_CASE("importance on the synthetic data: qualitative source ranking") {
    // Dataset-dependent tendencies, reported via WARN rather than asserted:
    // the IR family dominates the LUT model (instruction total is its main
    // driver) and the callgraph family trails the clock-period model (cp has
    // no callgraph driver at all).
    Dataset ds = synthetic_generate(400, 7, 0.05);

    ImportanceReport lut = importance_report(train(ModelKind::GradientBoost, ds, Target::Luts, {}, 7));
    REQUIRE(lut.per_source.size() == 4);
    for (const auto& entry : lut.per_source)
        WARN_MESSAGE(lut.per_source[1].second >= entry.second,
                     "IR family expected to rank first for LUTs, but ", entry.first, " has ",
                     entry.second);

    ImportanceReport cp =
        importance_report(train(ModelKind::GradientBoost, ds, Target::ClockPeriod, {}, 7));
    for (const auto& entry : cp.per_source)
        WARN_MESSAGE(cp.per_source[3].second <= entry.second,
                     "callgraph family expected to rank last for clock period");
}

TEST_CASE("importance is undefined for the perceptron") {
    TrainedModel m;
    m.kind = ModelKind::Perceptron;
    m.params = MlpParams{};
    CHECK_THROWS_AS(importance_report(m), UnsupportedModelKind);
}

TEST_CASE("per-source sums add up over mixed splits") {
    TrainedModel m;
    m.kind = ModelKind::GradientBoost;
    GbtParams params;
    RegressionTree tree;
    tree.nodes.push_back({0, 1.0, 1, 2, 0.0, 10.0});    // hls_code
    tree.nodes.push_back({20, 1.0, 3, 4, 0.0, 30.0});   // ir_code
    tree.nodes.push_back({60, 1.0, 5, 6, 0.0, 20.0});   // cdfg
    tree.nodes.push_back({-1, 0, -1, -1, 0.0, 0});
    tree.nodes.push_back({-1, 0, -1, -1, 0.0, 0});
    tree.nodes.push_back({-1, 0, -1, -1, 0.0, 0});
    tree.nodes.push_back({-1, 0, -1, -1, 0.0, 0});
    params.trees.push_back(tree);
    m.params = params;

    ImportanceReport report = importance_report(m);
    // gains 10/30/20 normalized by 30 -> 33.3/100/66.7
    double slot0 = report.per_slot[0].second;
    double slot20 = report.per_slot[20].second;
    double slot60 = report.per_slot[60].second;
    CHECK(slot20 == 100.0);
    CHECK(report.per_source[0].second == doctest::Approx(slot0));
    CHECK(report.per_source[1].second == doctest::Approx(slot20));
    CHECK(report.per_source[2].second == doctest::Approx(slot60));
    CHECK(report.per_source[3].second == 0.0);
}
