#pragma once

#include <array>
#include <string>

#include "hlsqor/ir.hpp"

namespace hlsqor {

struct PerBbStats {
    double max_per_bb = 0;
    double avg_per_bb = 0;
    double total = 0;
};

/// The 44 feature slots computed from one defined function: a
/// {max, avg, total} triple for each of the seven counted instruction
/// families, the same triple for instructions per block, and 20 standalone
/// counters. Schema order is fixed; see names().
struct IrFeatures {
    // Triples, in family order math, sign_ext, zero_ext, logic, memory, vector, other.
    std::array<PerBbStats, 7> families{};
    PerBbStats instructions{};

    double block_count = 0;
    double instruction_count = 0;
    double load_count = 0;
    double store_count = 0;
    double call_count = 0;
    double branch_count = 0;
    double distinct_operand_type_count = 0;
    double widest_int_width = 0;
    double float_op_total = 0;
    double double_op_total = 0;
    double getelementptr_count = 0;
    double phi_count = 0;
    double select_count = 0;
    double cmp_count = 0;  // icmp + fcmp
    double switch_count = 0;
    double ret_count = 0;
    double alloca_count = 0;
    double global_access_count = 0;
    double max_operands_per_instruction = 0;
    double avg_operands_per_instruction = 0;

    static constexpr int kCount = 44;
    std::array<double, kCount> as_array() const;
    static const std::array<std::string, kCount>& names();
};

/// Throws EmptyFunction when the function has no blocks (declarations).
IrFeatures ir_features(const IrFunction& function);

}  // namespace hlsqor
