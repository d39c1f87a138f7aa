#include <benchmark/benchmark.h>

#include <string>

#include "hlsqor/callgraph.hpp"
#include "hlsqor/cdfg.hpp"
#include "hlsqor/dataset.hpp"
#include "hlsqor/evaluation.hpp"
#include "hlsqor/feature_vector.hpp"
#include "hlsqor/ir_features.hpp"
#include "hlsqor/ir_parser.hpp"
#include "hlsqor/regressor.hpp"
#include "hlsqor/source_scanner.hpp"

namespace {

// Synthesizes a module with `blocks` chained basic blocks of straight-line
// arithmetic, a realistic size for HLS kernels.
std::string make_ir(int blocks) {
    std::string text = "define i32 @kernel(i32 %seed) {\nentry:\n  br label %b0\n";
    for (int b = 0; b < blocks; ++b) {
        std::string label = "b" + std::to_string(b);
        std::string prev = b == 0 ? "%seed" : "%v" + std::to_string(b - 1);
        text += label + ":\n";
        text += "  %m" + std::to_string(b) + " = mul i32 " + prev + ", 3\n";
        text += "  %a" + std::to_string(b) + " = add i32 %m" + std::to_string(b) + ", 7\n";
        text += "  %v" + std::to_string(b) + " = xor i32 %a" + std::to_string(b) + ", 255\n";
        if (b + 1 < blocks) {
            text += "  br label %b" + std::to_string(b + 1) + "\n";
        } else {
            text += "  ret i32 %v" + std::to_string(b) + "\n";
        }
    }
    text += "}\n";
    return text;
}

std::string make_source(int loops) {
    std::string text = "int kernel(const int a[1024]) {\n  int acc = 0;\n";
    for (int l = 0; l < loops; ++l) {
        text += "  l" + std::to_string(l) + ": for (int i = 0; i < 64; i++) {\n";
        text += "#pragma HLS unroll factor=4\n";
        text += "    acc += a[i];\n  }\n";
    }
    text += "  return acc;\n}\n";
    return text;
}

void BM_parse_ir(benchmark::State& state) {
    std::string text = make_ir(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        hlsqor::IrModule m = hlsqor::parse_module(text);
        benchmark::DoNotOptimize(m);
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_parse_ir)->Arg(16)->Arg(128)->Arg(1024);

void BM_extract_features(benchmark::State& state) {
    std::string ir = make_ir(static_cast<int>(state.range(0)));
    std::string source = make_source(8);
    hlsqor::IrModule module = hlsqor::parse_module(ir);
    const hlsqor::IrFunction& top = module.functions[0];
    for (auto _ : state) {
        auto pragmas = hlsqor::scan_pragmas(source);
        auto loops = hlsqor::analyze_loops(source, pragmas);
        auto src = hlsqor::source_features(loops, pragmas);
        auto irf = hlsqor::ir_features(top);
        auto graph = hlsqor::build_cdfg(top);
        auto cdfg = hlsqor::cdfg_features(graph, hlsqor::count_fcus(top));
        auto cg = hlsqor::callgraph_features(hlsqor::build_callgraph(module), "kernel");
        auto v = hlsqor::assemble(src, irf, cdfg, cg, 100.0);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_extract_features)->Arg(64)->Arg(512);

void BM_train_gbt(benchmark::State& state) {
    hlsqor::Dataset ds = hlsqor::synthetic_generate(static_cast<int>(state.range(0)), 7, 0.05);
    for (auto _ : state) {
        hlsqor::TrainedModel m =
            hlsqor::train(hlsqor::ModelKind::GradientBoost, ds, hlsqor::Target::ClockPeriod, {}, 7);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_train_gbt)->Arg(120)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_predict(benchmark::State& state) {
    hlsqor::Dataset ds = hlsqor::synthetic_generate(200, 7, 0.05);
    hlsqor::TrainedModel m =
        hlsqor::train(hlsqor::ModelKind::GradientBoost, ds, hlsqor::Target::ClockPeriod, {}, 7);
    std::size_t i = 0;
    for (auto _ : state) {
        double p = hlsqor::predict(m, ds.records[i % ds.records.size()].features);
        benchmark::DoNotOptimize(p);
        ++i;
    }
}
BENCHMARK(BM_predict);

void BM_longest_path(benchmark::State& state) {
    hlsqor::IrModule module = hlsqor::parse_module(make_ir(static_cast<int>(state.range(0))));
    hlsqor::Cdfg g = hlsqor::build_cdfg(module.functions[0]);
    for (auto _ : state) {
        int length = hlsqor::longest_path(g);
        benchmark::DoNotOptimize(length);
    }
}
BENCHMARK(BM_longest_path)->Arg(128)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
