#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hlsqor {

/// Instruction families. The first seven are counted per basic block in the
/// IR feature schema; Control and Cast are tracked but folded into the
/// remaining counters.
enum class OpCategory { Math, SignExt, ZeroExt, Logic, Memory, Vector, Control, Cast, Other };

std::string to_string(OpCategory category);

/// Total, deterministic opcode -> category mapping over the supported
/// textual subset. Throws UnknownOpcode for anything else.
OpCategory classify_instruction(std::string_view opcode);

/// All opcodes of the supported subset, in classification-table order.
const std::vector<std::string>& supported_opcodes();

struct IrOperand {
    std::string type;   // type token as written ("i32", "ptr", "<4 x float>", ...)
    std::string value;  // "%id", "@global", or a literal
    friend bool operator==(const IrOperand&, const IrOperand&) = default;
};

struct IrInstruction {
    std::string opcode;
    OpCategory category = OpCategory::Other;
    std::string result_id;    // without the leading '%'; empty when none
    std::string result_type;  // "void" when the instruction produces nothing
    std::vector<IrOperand> operands;

    // Per-family extras needed to reprint the instruction.
    std::string callee;                        // call: "@name"
    std::string aggregate_type;                // getelementptr source type / alloca allocated type
    std::string predicate;                     // icmp / fcmp
    std::vector<std::string> incoming_blocks;  // phi, parallel to operands
    std::vector<std::string> successors;       // br / switch targets, in written order

    bool is_terminator() const { return category == OpCategory::Control; }
    /// Operand values that are local identifiers (start with '%'), stripped.
    std::vector<std::string> operand_ids() const;
};

struct BasicBlock {
    std::string label;
    std::vector<IrInstruction> instructions;
    std::vector<std::string> successor_labels;  // the terminator's targets
};

struct IrFunction {
    std::string name;
    std::string return_type = "void";
    std::vector<std::pair<std::string, std::string>> params;  // (name, type); name may be empty
    std::vector<BasicBlock> blocks;                           // first block is the entry
    bool is_defined = true;

    const BasicBlock* find_block(std::string_view label) const;
};

struct IrModule {
    std::vector<IrFunction> functions;

    const IrFunction* find_function(std::string_view name) const;
};

/// Canonical text for the supported subset; parse_module(print_module(m)) is
/// structurally identical to m.
std::string print_module(const IrModule& module);

bool structurally_equal(const IrInstruction& a, const IrInstruction& b);
bool structurally_equal(const IrModule& a, const IrModule& b);

}  // namespace hlsqor
