// hlsqor: post-route QoR estimation for HLS designs from source + IR
// features, without running synthesis. One binary, subcommand style; every
// command is deterministic under fixed flags and seed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hlsqor/callgraph.hpp"
#include "hlsqor/cdfg.hpp"
#include "hlsqor/dataset.hpp"
#include "hlsqor/errors.hpp"
#include "hlsqor/evaluation.hpp"
#include "hlsqor/feature_vector.hpp"
#include "hlsqor/importance.hpp"
#include "hlsqor/ir_features.hpp"
#include "hlsqor/ir_parser.hpp"
#include "hlsqor/numeric.hpp"
#include "hlsqor/regressor.hpp"
#include "hlsqor/source_scanner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 2;
constexpr int kExitUsage = 64;
constexpr std::uint64_t kDefaultSeed = 42;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hlsqor::BadValue(0, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw hlsqor::BadValue(0, "cannot open '" + out_path + "' for writing");
    out << content;
}

struct ExtractArgs {
    std::string source_path;
    std::string ir_path;
    std::string top;
    double freq_mhz = 100.0;
    std::string out_path;
    std::string dump_graph_path;
    bool key_value = false;
};

int cmd_extract(const ExtractArgs& args) {
    using namespace hlsqor;
    SourceFeatures src;
    if (!args.source_path.empty()) {
        std::string text = read_file(args.source_path);
        std::vector<ScanWarning> warnings;
        std::vector<PragmaDirective> pragmas = scan_pragmas(text, &warnings);
        std::vector<LoopInfo> loops = analyze_loops(text, pragmas, &warnings);
        for (const ScanWarning& w : warnings)
            std::cerr << args.source_path << ":" << w.line << ": warning: " << w.message << "\n";
        src = source_features(loops, pragmas);
    } else {
        std::cerr << "warning: no --source given, HLS-code feature slots are 0\n";
    }

    IrFeatures ir;
    CdfgFeatures cdfg;
    CallGraphFeatures cg;
    if (!args.ir_path.empty()) {
        IrModule module = parse_module(read_file(args.ir_path));
        const IrFunction* top = module.find_function(args.top);
        if (!top || !top->is_defined) throw UnknownTop(args.top);
        ir = ir_features(*top);
        Cdfg graph = build_cdfg(*top);
        cdfg = cdfg_features(graph, count_fcus(*top));
        CallGraph callgraph = build_callgraph(module);
        cg = callgraph_features(callgraph, args.top);
        if (!args.dump_graph_path.empty()) {
            std::ofstream dump(args.dump_graph_path, std::ios::binary);
            if (!dump) throw BadValue(0, "cannot open '" + args.dump_graph_path + "' for writing");
            dump << to_dot(graph) << to_dot(callgraph);
        }
    } else {
        std::cerr << "warning: no --ir given, IR/CDFG/callgraph feature slots are 0\n";
    }

    FeatureVector v = assemble(src, ir, cdfg, cg, args.freq_mhz);
    std::cerr << "slots: source=" << SourceFeatures::kCount << " ir=" << IrFeatures::kCount
              << " cdfg=" << CdfgFeatures::kCount << " callgraph=" << CallGraphFeatures::kCount
              << " total=" << kSlotCount << " (+1 frequency input)\n";

    if (args.key_value) {
        std::string out = "slot,value\n";
        auto input = v.as_input();
        for (int i = 0; i < kInputCount; ++i)
            out += input_names()[static_cast<std::size_t>(i)] + "," +
                   format_double(input[static_cast<std::size_t>(i)]) + "\n";
        write_output(args.out_path, out);
    } else {
        write_output(args.out_path, feature_csv_header() + feature_csv_row(v));
    }
    return kExitOk;
}

// Feature rows for predict/sweep: either the extract output (70 input
// columns) or a full dataset CSV (labels ignored).
std::vector<hlsqor::FeatureVector> load_feature_rows(const std::string& path) {
    using namespace hlsqor;
    std::string text = read_file(path);
    try {
        return parse_feature_csv(text);
    } catch (const SchemaMismatch&) {
        Dataset dataset = from_csv(text);
        std::vector<FeatureVector> rows;
        for (const DesignRecord& r : dataset.records) rows.push_back(r.features);
        return rows;
    }
}

std::map<hlsqor::Target, hlsqor::TrainedModel> load_models(const std::vector<std::string>& paths) {
    std::map<hlsqor::Target, hlsqor::TrainedModel> models;
    for (const std::string& path : paths) {
        hlsqor::TrainedModel model = hlsqor::load_model(path);
        models[model.target] = std::move(model);
    }
    return models;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace hlsqor;

    CLI::App app{"Post-route QoR estimation for HLS designs (clock period, latency, LUTs)\n"
                 "predicted from behavioral source and textual IR, without synthesis."};
    app.name("hlsqor");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Print full help for every subcommand");
    app.set_config("--config", "", "Read flags from an INI file (command line wins)");

    // ---- extract ----
    ExtractArgs extract_args;
    CLI::App* extract = app.add_subcommand(
        "extract", "Extract the 13/44/6/6 feature slots from a source/IR pair into a feature CSV row");
    extract->add_option("--source", extract_args.source_path, "Behavioral C-like source file");
    extract->add_option("--ir", extract_args.ir_path, "Textual IR file");
    extract->add_option("--top", extract_args.top, "Top function name");
    extract->add_option("--freq-mhz", extract_args.freq_mhz, "Target frequency input (MHz)")
        ->default_val(100.0);
    extract->add_option("--dump-graph", extract_args.dump_graph_path,
                        "Also write the CDFG and callgraph as DOT to this path");
    extract->add_flag("--kv", extract_args.key_value,
                      "Emit a slot,value table instead of one wide feature row");
    extract->add_option("--out", extract_args.out_path, "Output path (default: stdout)");

    // ---- train ----
    std::string train_dataset;
    std::string train_kind = "gbt";
    std::string train_target = "cp";
    std::uint64_t train_seed = kDefaultSeed;
    std::string train_out;
    std::vector<std::string> train_hyper;
    CLI::App* train_cmd = app.add_subcommand("train", "Train one regressor for one target label");
    train_cmd->add_option("--dataset", train_dataset, "Labeled dataset CSV")->required();
    train_cmd->add_option("--kind", train_kind, "Model kind: gbt, rf or mlp")
        ->default_val("gbt")
        ->check(CLI::IsMember({"gbt", "rf", "mlp"}));
    train_cmd->add_option("--target", train_target, "Target label: cp, latency or lut")
        ->default_val("cp")
        ->check(CLI::IsMember({"cp", "latency", "lut"}));
    train_cmd->add_option("--seed", train_seed, "Training seed")->default_val(kDefaultSeed);
    train_cmd->add_option("--set", train_hyper, "Hyperparameter override key=value (repeatable)");
    train_cmd->add_option("--out", train_out, "Model file path")->required();

    // ---- predict ----
    std::string predict_model;
    std::string predict_dataset;
    std::string predict_out;
    CLI::App* predict_cmd =
        app.add_subcommand("predict", "Predict a target for every row of a feature/dataset CSV");
    predict_cmd->add_option("--model", predict_model, "Model file")->required();
    predict_cmd->add_option("--dataset", predict_dataset, "Feature CSV (extract output) or dataset CSV")
        ->required();
    predict_cmd->add_option("--out", predict_out, "Output path (default: stdout)");

    // ---- eval ----
    std::vector<std::string> eval_models;
    std::string eval_dataset;
    std::string eval_out;
    std::string eval_fractions;
    std::string eval_kind = "gbt";
    std::string eval_target = "cp";
    std::uint64_t eval_seed = kDefaultSeed;
    bool eval_text = false;
    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "Evaluate models on a labeled dataset (MAPE/R^2), or emit a learning curve");
    eval_cmd->add_option("--model", eval_models, "Model file (repeat for several targets)");
    eval_cmd->add_option("--dataset", eval_dataset, "Labeled dataset CSV")->required();
    eval_cmd->add_option("--fractions", eval_fractions,
                         "Comma-separated training fractions; runs the learning curve instead");
    eval_cmd->add_option("--kind", eval_kind, "Model kind for --fractions mode")
        ->default_val("gbt")
        ->check(CLI::IsMember({"gbt", "rf", "mlp"}));
    eval_cmd->add_option("--target", eval_target, "Target for --fractions mode")
        ->default_val("cp")
        ->check(CLI::IsMember({"cp", "latency", "lut"}));
    eval_cmd->add_option("--seed", eval_seed, "Seed for --fractions mode")->default_val(kDefaultSeed);
    eval_cmd->add_flag("--text", eval_text, "Aligned text table instead of CSV");
    eval_cmd->add_option("--out", eval_out, "Output path (default: stdout)");

    // ---- sweep ----
    std::vector<std::string> sweep_models;
    std::string sweep_dataset;
    std::vector<double> sweep_freqs{100, 125, 150, 175, 200, 225, 300, 500};
    std::string sweep_out;
    bool sweep_text_flag = false;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Predict QoR over a target-frequency sweep with all other features held fixed");
    sweep_cmd->add_option("--model", sweep_models, "Model file (repeat for several targets)")
        ->required();
    sweep_cmd->add_option("--dataset", sweep_dataset, "Feature CSV with the base row (first row used)")
        ->required();
    sweep_cmd->add_option("--freq-mhz", sweep_freqs, "Frequencies to sweep (MHz)")
        ->delimiter(',');
    sweep_cmd->add_flag("--text", sweep_text_flag, "Aligned text table instead of CSV");
    sweep_cmd->add_option("--out", sweep_out, "Output path (default: stdout)");

    // ---- importance ----
    std::string importance_model;
    std::string importance_out;
    CLI::App* importance_cmd = app.add_subcommand(
        "importance", "Per-slot and per-source normalized feature importance of a tree model");
    importance_cmd->add_option("--model", importance_model, "Model file")->required();
    importance_cmd->add_option("--out", importance_out, "Output path (default: stdout)");

    // ---- synth-data ----
    int synth_n = 400;
    std::uint64_t synth_seed = kDefaultSeed;
    double synth_noise = 0.05;
    std::string synth_out;
    CLI::App* synth_cmd = app.add_subcommand(
        "synth-data", "Generate the synthetic labeled dataset used for desk-scale validation");
    synth_cmd->add_option("--n", synth_n, "Number of records")->default_val(400);
    synth_cmd->add_option("--seed", synth_seed, "Generator seed")->default_val(kDefaultSeed);
    synth_cmd->add_option("--noise", synth_noise, "Multiplicative label noise fraction")
        ->default_val(0.05);
    synth_cmd->add_option("--out", synth_out, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (extract->parsed()) {
            if (extract_args.source_path.empty() && extract_args.ir_path.empty()) {
                std::cerr << "usage error: extract needs --source and/or --ir\n";
                return kExitUsage;
            }
            return cmd_extract(extract_args);
        }

        if (train_cmd->parsed()) {
            std::map<std::string, double> overrides;
            for (const std::string& kv : train_hyper) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) {
                    std::cerr << "usage error: --set expects key=value\n";
                    return kExitUsage;
                }
                overrides[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
            }
            ModelKind kind = model_kind_from_string(train_kind);
            Target target = target_from_string(train_target);
            Dataset dataset = load_csv(train_dataset);
            TrainedModel model = train(kind, dataset, target, overrides, train_seed);
            save_model(model, train_out);

            std::vector<double> a;
            std::vector<double> p;
            for (const DesignRecord& r : dataset.records) {
                std::optional<double> label;
                if (target == Target::ClockPeriod) label = r.labels.cp_ns;
                else if (target == Target::Latency && r.labels.latency_cycles)
                    label = static_cast<double>(*r.labels.latency_cycles);
                else if (target == Target::Luts && r.labels.luts)
                    label = static_cast<double>(*r.labels.luts);
                if (!label) continue;
                a.push_back(*label);
                p.push_back(predict(model, r.features));
            }
            std::cerr << "trained " << to_string(kind) << " for " << to_string(target) << " on "
                      << a.size() << " rows; train MAPE=" << mape(a, p) << "%";
            try {
                std::cerr << " R^2=" << r_squared(a, p);
            } catch (const DegenerateActual&) {
            }
            std::cerr << "\n";
            return kExitOk;
        }

        if (predict_cmd->parsed()) {
            TrainedModel model = load_model(predict_model);
            std::vector<FeatureVector> rows = load_feature_rows(predict_dataset);
            std::string out = "prediction\n";
            for (const FeatureVector& row : rows) out += format_double(predict(model, row)) + "\n";
            write_output(predict_out, out);
            return kExitOk;
        }

        if (eval_cmd->parsed()) {
            Dataset dataset = load_csv(eval_dataset);
            if (!eval_fractions.empty()) {
                std::vector<double> fractions;
                std::stringstream ss(eval_fractions);
                std::string cell;
                while (std::getline(ss, cell, ',')) fractions.push_back(std::stod(cell));
                auto points = learning_curve(dataset, model_kind_from_string(eval_kind),
                                             target_from_string(eval_target), fractions, eval_seed);
                std::string out = "fraction,r_squared\n";
                for (const auto& [fraction, r2] : points) {
                    char buf[64];
                    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", fraction, r2);
                    out += buf;
                }
                write_output(eval_out, out);
                return kExitOk;
            }
            if (eval_models.empty()) {
                std::cerr << "usage error: eval needs --model (or --fractions)\n";
                return kExitUsage;
            }
            EvalReport report = evaluate(load_models(eval_models), dataset);
            write_output(eval_out, eval_text ? report.to_text() : report.to_csv());
            return kExitOk;
        }

        if (sweep_cmd->parsed()) {
            auto models = load_models(sweep_models);
            std::vector<FeatureVector> rows = load_feature_rows(sweep_dataset);
            if (rows.empty()) throw BadValue(0, "no feature rows in '" + sweep_dataset + "'");
            auto table = frequency_sweep(models, rows.front(), sweep_freqs);
            write_output(sweep_out, sweep_text_flag ? sweep_text(table) : sweep_csv(table));
            return kExitOk;
        }

        if (importance_cmd->parsed()) {
            TrainedModel model = load_model(importance_model);
            write_output(importance_out, importance_csv(importance_report(model)));
            return kExitOk;
        }

        if (synth_cmd->parsed()) {
            Dataset dataset = synthetic_generate(synth_n, synth_seed, synth_noise);
            write_output(synth_out, to_csv(dataset));
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    }
    return kExitUsage;
}
