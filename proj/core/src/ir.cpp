#include "hlsqor/ir.hpp"

#include <map>

#include "hlsqor/errors.hpp"

namespace hlsqor {

namespace {

// The frozen opcode -> family table. The seven counted families are Math,
// SignExt, ZeroExt, Logic, Memory, Vector and Other; Control and Cast are
// tracked for block structure and type bookkeeping.
const std::map<std::string, OpCategory, std::less<>>& opcode_table() {
    static const std::map<std::string, OpCategory, std::less<>> table = {
        {"add", OpCategory::Math},     {"sub", OpCategory::Math},
        {"mul", OpCategory::Math},     {"sdiv", OpCategory::Math},
        {"udiv", OpCategory::Math},    {"srem", OpCategory::Math},
        {"urem", OpCategory::Math},    {"fadd", OpCategory::Math},
        {"fsub", OpCategory::Math},    {"fmul", OpCategory::Math},
        {"fdiv", OpCategory::Math},    {"frem", OpCategory::Math},
        {"fneg", OpCategory::Math},

        {"sext", OpCategory::SignExt},
        {"zext", OpCategory::ZeroExt},

        {"and", OpCategory::Logic},    {"or", OpCategory::Logic},
        {"xor", OpCategory::Logic},    {"shl", OpCategory::Logic},
        {"lshr", OpCategory::Logic},   {"ashr", OpCategory::Logic},

        {"load", OpCategory::Memory},  {"store", OpCategory::Memory},
        {"alloca", OpCategory::Memory},{"getelementptr", OpCategory::Memory},

        {"extractelement", OpCategory::Vector},
        {"insertelement", OpCategory::Vector},
        {"shufflevector", OpCategory::Vector},

        {"br", OpCategory::Control},   {"ret", OpCategory::Control},
        {"switch", OpCategory::Control}, {"unreachable", OpCategory::Control},

        {"trunc", OpCategory::Cast},   {"fptrunc", OpCategory::Cast},
        {"fpext", OpCategory::Cast},   {"bitcast", OpCategory::Cast},
        {"ptrtoint", OpCategory::Cast},{"inttoptr", OpCategory::Cast},
        {"sitofp", OpCategory::Cast},  {"uitofp", OpCategory::Cast},
        {"fptosi", OpCategory::Cast},  {"fptoui", OpCategory::Cast},

        {"call", OpCategory::Other},   {"phi", OpCategory::Other},
        {"select", OpCategory::Other}, {"icmp", OpCategory::Other},
        {"fcmp", OpCategory::Other},
    };
    return table;
}

}  // namespace

std::string to_string(OpCategory category) {
    switch (category) {
        case OpCategory::Math: return "math";
        case OpCategory::SignExt: return "sign_ext";
        case OpCategory::ZeroExt: return "zero_ext";
        case OpCategory::Logic: return "logic";
        case OpCategory::Memory: return "memory";
        case OpCategory::Vector: return "vector";
        case OpCategory::Control: return "control";
        case OpCategory::Cast: return "cast";
        case OpCategory::Other: return "other";
    }
    return "?";
}

OpCategory classify_instruction(std::string_view opcode) {
    const auto& table = opcode_table();
    auto it = table.find(opcode);
    if (it == table.end()) throw UnknownOpcode(std::string(opcode));
    return it->second;
}

const std::vector<std::string>& supported_opcodes() {
    static const std::vector<std::string> opcodes = [] {
        std::vector<std::string> out;
        for (const auto& [op, cat] : opcode_table()) out.push_back(op);
        return out;
    }();
    return opcodes;
}

std::vector<std::string> IrInstruction::operand_ids() const {
    std::vector<std::string> ids;
    for (const IrOperand& op : operands)
        if (!op.value.empty() && op.value[0] == '%') ids.push_back(op.value.substr(1));
    return ids;
}

const BasicBlock* IrFunction::find_block(std::string_view label) const {
    for (const BasicBlock& block : blocks)
        if (block.label == label) return &block;
    return nullptr;
}

const IrFunction* IrModule::find_function(std::string_view name) const {
    for (const IrFunction& f : functions)
        if (f.name == name) return &f;
    return nullptr;
}

namespace {

void print_instruction(std::string& out, const IrInstruction& in) {
    out += "  ";
    if (!in.result_id.empty()) {
        out += '%';
        out += in.result_id;
        out += " = ";
    }

    const std::string& op = in.opcode;
    auto operand = [&](std::size_t i, bool with_type = true) {
        std::string s;
        if (with_type && !in.operands[i].type.empty()) {
            s += in.operands[i].type;
            s += ' ';
        }
        s += in.operands[i].value;
        return s;
    };

    if (op == "ret") {
        out += in.operands.empty() ? "ret void" : "ret " + operand(0);
    } else if (op == "br") {
        if (in.operands.empty()) {
            out += "br label %" + in.successors.at(0);
        } else {
            out += "br " + operand(0) + ", label %" + in.successors.at(0) + ", label %" +
                   in.successors.at(1);
        }
    } else if (op == "switch") {
        out += "switch " + operand(0) + ", label %" + in.successors.at(0) + " [";
        for (std::size_t i = 1; i < in.operands.size(); ++i)
            out += "\n    " + operand(i) + ", label %" + in.successors.at(i);
        out += "\n  ]";
    } else if (op == "unreachable") {
        out += "unreachable";
    } else if (op == "phi") {
        out += "phi " + in.result_type + " ";
        for (std::size_t i = 0; i < in.operands.size(); ++i) {
            if (i) out += ", ";
            out += "[ " + in.operands[i].value + ", %" + in.incoming_blocks[i] + " ]";
        }
    } else if (op == "call") {
        out += "call " + in.result_type + " " + in.callee + "(";
        for (std::size_t i = 0; i < in.operands.size(); ++i) {
            if (i) out += ", ";
            out += operand(i);
        }
        out += ")";
    } else if (op == "getelementptr") {
        out += "getelementptr " + in.aggregate_type;
        for (std::size_t i = 0; i < in.operands.size(); ++i) out += ", " + operand(i);
    } else if (op == "alloca") {
        out += "alloca " + in.aggregate_type;
    } else if (op == "load") {
        out += "load " + in.result_type + ", " + operand(0);
    } else if (op == "store") {
        out += "store " + operand(0) + ", " + operand(1);
    } else if (in.category == OpCategory::Cast || op == "sext" || op == "zext") {
        out += op + " " + operand(0) + " to " + in.result_type;
    } else if (op == "icmp" || op == "fcmp") {
        out += op + " " + in.predicate + " " + operand(0) + ", " + in.operands[1].value;
    } else if (op == "select" || in.category == OpCategory::Vector) {
        for (std::size_t i = 0; i < in.operands.size(); ++i)
            out += (i ? ", " : op + " ") + operand(i);
    } else {
        // Binary math/logic and fneg: shared operand type written once.
        out += op + " " + in.result_type + " ";
        for (std::size_t i = 0; i < in.operands.size(); ++i) {
            if (i) out += ", ";
            out += in.operands[i].value;
        }
    }
    out += '\n';
}

void print_params(std::string& out, const IrFunction& f) {
    out += '(';
    for (std::size_t i = 0; i < f.params.size(); ++i) {
        if (i) out += ", ";
        out += f.params[i].second;
        if (!f.params[i].first.empty()) {
            out += " %";
            out += f.params[i].first;
        }
    }
    out += ')';
}

}  // namespace

std::string print_module(const IrModule& module) {
    std::string out;
    bool first = true;
    for (const IrFunction& f : module.functions) {
        if (!first) out += '\n';
        first = false;
        out += (f.is_defined ? "define " : "declare ") + f.return_type + " @" + f.name;
        print_params(out, f);
        if (!f.is_defined) {
            out += '\n';
            continue;
        }
        out += " {\n";
        for (std::size_t b = 0; b < f.blocks.size(); ++b) {
            const BasicBlock& block = f.blocks[b];
            if (b) out += '\n';
            out += block.label + ":\n";
            for (const IrInstruction& in : block.instructions) print_instruction(out, in);
        }
        out += "}\n";
    }
    return out;
}

bool structurally_equal(const IrInstruction& a, const IrInstruction& b) {
    return a.opcode == b.opcode && a.category == b.category && a.result_id == b.result_id &&
           a.result_type == b.result_type && a.operands == b.operands && a.callee == b.callee &&
           a.aggregate_type == b.aggregate_type && a.predicate == b.predicate &&
           a.incoming_blocks == b.incoming_blocks && a.successors == b.successors;
}

bool structurally_equal(const IrModule& a, const IrModule& b) {
    if (a.functions.size() != b.functions.size()) return false;
    for (std::size_t i = 0; i < a.functions.size(); ++i) {
        const IrFunction& fa = a.functions[i];
        const IrFunction& fb = b.functions[i];
        if (fa.name != fb.name || fa.params != fb.params || fa.is_defined != fb.is_defined ||
            fa.return_type != fb.return_type || fa.blocks.size() != fb.blocks.size())
            return false;
        for (std::size_t j = 0; j < fa.blocks.size(); ++j) {
            const BasicBlock& ba = fa.blocks[j];
            const BasicBlock& bb = fb.blocks[j];
            if (ba.label != bb.label || ba.successor_labels != bb.successor_labels ||
                ba.instructions.size() != bb.instructions.size())
                return false;
            for (std::size_t k = 0; k < ba.instructions.size(); ++k)
                if (!structurally_equal(ba.instructions[k], bb.instructions[k])) return false;
        }
    }
    return true;
}

}  // namespace hlsqor
