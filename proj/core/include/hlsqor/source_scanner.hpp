#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hlsqor {

/// The six directive kinds recognized by the scanner. Anything else in a
/// `#pragma HLS` line is skipped with a warning.
enum class PragmaKind { Unroll, Pipeline, ArrayPartition, ArrayReshape, Inline, FunctionInstantiate };

enum class PartitionStyle { Block, Cyclic, Complete };

std::string to_string(PragmaKind kind);
std::string to_string(PartitionStyle style);

struct PragmaDirective {
    PragmaKind kind;
    std::optional<std::int64_t> factor;                // unroll / partition / reshape
    std::optional<std::int64_t> initiation_interval;   // pipeline only
    std::optional<std::int64_t> dimension;             // partition / reshape, 0 = all dims
    std::optional<PartitionStyle> partition_style;     // partition / reshape
    std::string enclosing_function;
    std::optional<std::string> attached_loop_label;    // innermost enclosing loop
    int source_line = 1;                               // 1-based
};

/// Exact loop-bound / unroll-factor ratio. Kept rational so that
/// bound == batch_size * unroll_factor holds without rounding.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Reduce num/den by their gcd.
Rational make_rational(std::int64_t num, std::int64_t den);

struct LoopInfo {
    std::string label;                              // explicit label or synthesized "L<line>"
    std::optional<std::int64_t> loop_bound;         // trip count when statically known
    std::int64_t unroll_factor = 1;
    std::optional<Rational> batch_size;             // loop_bound / unroll_factor
    bool pipelined = false;
    std::optional<std::int64_t> initiation_interval;
    int nesting_depth = 0;                          // 0 = outermost
    int source_line = 1;
};

/// The 13 feature slots extracted from behavioral source. Aggregates over
/// empty sets are 0.
struct SourceFeatures {
    double max_unroll_factor = 0;
    double avg_unroll_factor = 0;
    double max_batch_size = 0;
    double avg_batch_size = 0;
    double num_unrolled_loops = 0;
    double num_pipelined_loops = 0;
    double max_pipeline_ii = 0;
    double avg_pipeline_ii = 0;
    double max_pipelined_loop_index = 0;  // 1-based source-order index, 0 = none
    double num_array_partition_pragmas = 0;
    double num_array_reshape_pragmas = 0;
    double num_inlined_functions = 0;
    double total_loop_count = 0;

    static constexpr int kCount = 13;
    std::array<double, kCount> as_array() const;
    static const std::array<std::string, kCount>& names();
};

struct ScanWarning {
    int line = 0;
    std::string message;
};

/// One directive per recognized `#pragma HLS` line, in file order.
/// Unrecognized pragma kinds are skipped and reported through `warnings`.
/// Throws MalformedPragma when a recognized kind has unparsable arguments.
std::vector<PragmaDirective> scan_pragmas(std::string_view source_text,
                                          std::vector<ScanWarning>* warnings = nullptr);

/// One LoopInfo per `for` loop recognized by the constrained grammar, in
/// file order. `pragmas` must come from the same text; directives are
/// attached to their innermost enclosing loop by label.
std::vector<LoopInfo> analyze_loops(std::string_view source_text,
                                    const std::vector<PragmaDirective>& pragmas,
                                    std::vector<ScanWarning>* warnings = nullptr);

SourceFeatures source_features(const std::vector<LoopInfo>& loops,
                               const std::vector<PragmaDirective>& pragmas);

}  // namespace hlsqor
