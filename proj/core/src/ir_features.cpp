#include "hlsqor/ir_features.hpp"

#include <algorithm>
#include <set>

#include "hlsqor/numeric.hpp"
#include "hlsqor/errors.hpp"

namespace hlsqor {

namespace {

// i<N> -> N, otherwise 0. Vector/array element widths count too, so
// "<4 x i16>" reports 16.
int int_width(std::string_view type) {
    auto x = type.rfind(" x ");
    if (x != std::string_view::npos) {
        std::string_view inner = type.substr(x + 3);
        if (!inner.empty() && (inner.back() == '>' || inner.back() == ']')) inner.remove_suffix(1);
        return int_width(inner);
    }
    if (type.size() < 2 || type[0] != 'i') return 0;
    auto parsed = parse_int(type.substr(1));
    return parsed && *parsed > 0 ? static_cast<int>(*parsed) : 0;
}

bool mentions_scalar(std::string_view type, std::string_view scalar) {
    if (type == scalar) return true;
    auto x = type.rfind(" x ");
    if (x == std::string_view::npos) return false;
    std::string_view inner = type.substr(x + 3);
    if (!inner.empty() && (inner.back() == '>' || inner.back() == ']')) inner.remove_suffix(1);
    return inner == scalar;
}

}  // namespace

IrFeatures ir_features(const IrFunction& function) {
    if (function.blocks.empty()) throw EmptyFunction(function.name);

    IrFeatures f;
    const double block_count = static_cast<double>(function.blocks.size());
    f.block_count = block_count;

    // Per-family and per-block tallies. Families Control and Cast are not
    // counted in the seven triples but still feed the standalone counters.
    std::array<double, 7> family_total{};
    std::array<double, 7> family_max{};
    double instr_max = 0;
    std::set<std::string> operand_types;
    std::size_t max_operands = 0;
    std::size_t operand_total = 0;
    std::size_t instr_total = 0;

    auto family_index = [](OpCategory c) -> int {
        switch (c) {
            case OpCategory::Math: return 0;
            case OpCategory::SignExt: return 1;
            case OpCategory::ZeroExt: return 2;
            case OpCategory::Logic: return 3;
            case OpCategory::Memory: return 4;
            case OpCategory::Vector: return 5;
            case OpCategory::Other: return 6;
            default: return -1;  // Control, Cast
        }
    };

    for (const BasicBlock& block : function.blocks) {
        std::array<double, 7> in_block{};
        for (const IrInstruction& in : block.instructions) {
            ++instr_total;
            int family = family_index(in.category);
            if (family >= 0) in_block[static_cast<std::size_t>(family)] += 1;

            if (in.opcode == "load") f.load_count += 1;
            else if (in.opcode == "store") f.store_count += 1;
            else if (in.opcode == "call") f.call_count += 1;
            else if (in.opcode == "br") f.branch_count += 1;
            else if (in.opcode == "getelementptr") f.getelementptr_count += 1;
            else if (in.opcode == "phi") f.phi_count += 1;
            else if (in.opcode == "select") f.select_count += 1;
            else if (in.opcode == "icmp" || in.opcode == "fcmp") f.cmp_count += 1;
            else if (in.opcode == "switch") f.switch_count += 1;
            else if (in.opcode == "ret") f.ret_count += 1;
            else if (in.opcode == "alloca") f.alloca_count += 1;

            if (in.result_type != "void") {
                operand_types.insert(in.result_type);
                f.widest_int_width = std::max(f.widest_int_width,
                                              static_cast<double>(int_width(in.result_type)));
            }
            if (mentions_scalar(in.result_type, "float")) f.float_op_total += 1;
            if (mentions_scalar(in.result_type, "double")) f.double_op_total += 1;

            for (const IrOperand& op : in.operands) {
                if (!op.type.empty() && op.type != "void") {
                    operand_types.insert(op.type);
                    f.widest_int_width =
                        std::max(f.widest_int_width, static_cast<double>(int_width(op.type)));
                }
                if (!op.value.empty() && op.value[0] == '@') f.global_access_count += 1;
            }
            if (!in.callee.empty() && in.callee[0] == '@') f.global_access_count += 1;

            max_operands = std::max(max_operands, in.operands.size());
            operand_total += in.operands.size();
        }
        for (std::size_t k = 0; k < 7; ++k) {
            family_total[k] += in_block[k];
            family_max[k] = std::max(family_max[k], in_block[k]);
        }
        instr_max = std::max(instr_max, static_cast<double>(block.instructions.size()));
    }

    for (std::size_t k = 0; k < 7; ++k) {
        f.families[k].max_per_bb = family_max[k];
        f.families[k].total = family_total[k];
        f.families[k].avg_per_bb = family_total[k] / block_count;
    }
    f.instructions.max_per_bb = instr_max;
    f.instructions.total = static_cast<double>(instr_total);
    f.instructions.avg_per_bb = static_cast<double>(instr_total) / block_count;

    f.instruction_count = static_cast<double>(instr_total);
    f.distinct_operand_type_count = static_cast<double>(operand_types.size());
    f.max_operands_per_instruction = static_cast<double>(max_operands);
    f.avg_operands_per_instruction =
        instr_total > 0 ? static_cast<double>(operand_total) / static_cast<double>(instr_total) : 0;
    return f;
}

std::array<double, IrFeatures::kCount> IrFeatures::as_array() const {
    std::array<double, kCount> out{};
    std::size_t i = 0;
    for (const PerBbStats& family : families) {
        out[i++] = family.max_per_bb;
        out[i++] = family.avg_per_bb;
        out[i++] = family.total;
    }
    out[i++] = instructions.max_per_bb;
    out[i++] = instructions.avg_per_bb;
    out[i++] = instructions.total;
    out[i++] = block_count;
    out[i++] = instruction_count;
    out[i++] = load_count;
    out[i++] = store_count;
    out[i++] = call_count;
    out[i++] = branch_count;
    out[i++] = distinct_operand_type_count;
    out[i++] = widest_int_width;
    out[i++] = float_op_total;
    out[i++] = double_op_total;
    out[i++] = getelementptr_count;
    out[i++] = phi_count;
    out[i++] = select_count;
    out[i++] = cmp_count;
    out[i++] = switch_count;
    out[i++] = ret_count;
    out[i++] = alloca_count;
    out[i++] = global_access_count;
    out[i++] = max_operands_per_instruction;
    out[i++] = avg_operands_per_instruction;
    return out;
}

const std::array<std::string, IrFeatures::kCount>& IrFeatures::names() {
    static const std::array<std::string, kCount> names = [] {
        std::array<std::string, kCount> out;
        const char* families[] = {"math", "sign_ext", "zero_ext", "logic", "memory", "vector", "other"};
        std::size_t i = 0;
        for (const char* family : families) {
            out[i++] = std::string("ir_") + family + "_max_per_bb";
            out[i++] = std::string("ir_") + family + "_avg_per_bb";
            out[i++] = std::string("ir_") + family + "_total";
        }
        out[i++] = "ir_instr_max_per_bb";
        out[i++] = "ir_instr_avg_per_bb";
        out[i++] = "ir_instr_total";
        out[i++] = "ir_block_count";
        out[i++] = "ir_instruction_count";
        out[i++] = "ir_load_count";
        out[i++] = "ir_store_count";
        out[i++] = "ir_call_count";
        out[i++] = "ir_branch_count";
        out[i++] = "ir_distinct_operand_type_count";
        out[i++] = "ir_widest_int_width";
        out[i++] = "ir_float_op_total";
        out[i++] = "ir_double_op_total";
        out[i++] = "ir_getelementptr_count";
        out[i++] = "ir_phi_count";
        out[i++] = "ir_select_count";
        out[i++] = "ir_cmp_count";
        out[i++] = "ir_switch_count";
        out[i++] = "ir_ret_count";
        out[i++] = "ir_alloca_count";
        out[i++] = "ir_global_access_count";
        out[i++] = "ir_max_operands_per_instruction";
        out[i++] = "ir_avg_operands_per_instruction";
        return out;
    }();
    return names;
}

}  // namespace hlsqor
