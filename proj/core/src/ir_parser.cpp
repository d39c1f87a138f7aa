#include "hlsqor/ir_parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <span>

#include "hlsqor/errors.hpp"

namespace hlsqor {

namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

struct Token {
    enum class Kind { Word, LocalId, GlobalId, Number, String, Punct, Meta, AttrRef, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 0;
    int col = 0;

    bool is(std::string_view s) const { return kind != Kind::End && text == s; }
    bool is_punct(char c) const { return kind == Kind::Punct && text.size() == 1 && text[0] == c; }
};

bool id_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '$' || c == '-';
}

// Tokenizes one line; metadata (!...) and attribute group (#N) tokens
// terminate the useful part of the line.
std::vector<Token> lex_line(std::string_view line, int line_no) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == ';') break;  // comment
        if (c == '!' || c == '#') {
            // metadata reference / attribute group; lexed so it can be
            // filtered together with its leading comma
            std::size_t j = i + 1;
            while (j < line.size() && (id_char(line[j]) || line[j] == '{' )) {
                if (line[j] == '{') {  // metadata node body: swallow the rest
                    j = line.size();
                    break;
                }
                ++j;
            }
            tokens.push_back({c == '!' ? Token::Kind::Meta : Token::Kind::AttrRef,
                              std::string(line.substr(i, j - i)), line_no, col});
            i = j;
            continue;
        }
        if (c == '%' || c == '@') {
            std::size_t j = i + 1;
            if (j < line.size() && line[j] == '"') {  // quoted identifier
                std::size_t end = line.find('"', j + 1);
                if (end == std::string_view::npos) end = line.size() - 1;
                tokens.push_back({c == '%' ? Token::Kind::LocalId : Token::Kind::GlobalId,
                                  std::string(1, c) + std::string(line.substr(j + 1, end - j - 1)),
                                  line_no, col});
                i = end + 1;
                continue;
            }
            while (j < line.size() && id_char(line[j])) ++j;
            tokens.push_back({c == '%' ? Token::Kind::LocalId : Token::Kind::GlobalId,
                              std::string(line.substr(i, j - i)), line_no, col});
            i = j;
            continue;
        }
        if (c == '"') {
            std::size_t end = line.find('"', i + 1);
            if (end == std::string_view::npos) end = line.size() - 1;
            tokens.push_back({Token::Kind::String, std::string(line.substr(i + 1, end - i - 1)),
                              line_no, col});
            i = end + 1;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i + 1;
            while (j < line.size() && id_char(line[j])) ++j;
            tokens.push_back({Token::Kind::Word, std::string(line.substr(i, j - i)), line_no, col});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && i + 1 < line.size() && std::isdigit(static_cast<unsigned char>(line[i + 1])))) {
            std::size_t j = i + 1;
            while (j < line.size()) {
                char d = line[j];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '.') {
                    ++j;
                } else if ((d == '+' || d == '-') && (line[j - 1] == 'e' || line[j - 1] == 'E')) {
                    ++j;
                } else {
                    break;
                }
            }
            tokens.push_back({Token::Kind::Number, std::string(line.substr(i, j - i)), line_no, col});
            i = j;
            continue;
        }
        tokens.push_back({Token::Kind::Punct, std::string(1, c), line_no, col});
        ++i;
    }
    return tokens;
}

// Removes ", align N" clauses, metadata references and attribute-group
// references (with their leading commas) anywhere in the token stream.
void drop_tolerated_clauses(std::vector<Token>& tokens) {
    std::vector<Token> out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].is("align") && i + 1 < tokens.size() &&
            tokens[i + 1].kind == Token::Kind::Number) {
            if (!out.empty() && out.back().is_punct(',')) out.pop_back();
            ++i;
            continue;
        }
        if (tokens[i].kind == Token::Kind::Meta || tokens[i].kind == Token::Kind::AttrRef) {
            if (!out.empty() && out.back().is_punct(',')) out.pop_back();
            continue;
        }
        out.push_back(tokens[i]);
    }
    tokens = std::move(out);
}

// ---------------------------------------------------------------------------
// Token cursor
// ---------------------------------------------------------------------------

class Cursor {
public:
    Cursor(std::span<const Token> tokens, int line) : tokens_(tokens), line_(line) {}

    const Token& peek(std::size_t ahead = 0) const {
        static const Token end_token{};
        return pos_ + ahead < tokens_.size() ? tokens_[pos_ + ahead] : end_token;
    }
    bool done() const { return pos_ >= tokens_.size(); }
    const Token& next() {
        const Token& t = peek();
        if (!done()) ++pos_;
        return t;
    }
    bool accept(std::string_view text) {
        if (peek().is(text)) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(std::string_view text, std::string_view what) {
        if (!accept(text)) fail(std::string("expected '") + std::string(text) + "' in " + std::string(what));
    }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw ParseError(t.kind == Token::Kind::End ? line_ : t.line,
                         t.kind == Token::Kind::End ? 0 : t.col,
                         t.kind == Token::Kind::End ? "" : t.text, msg);
    }

private:
    std::span<const Token> tokens_;
    std::size_t pos_ = 0;
    int line_;
};

const std::set<std::string, std::less<>> kSkippableWords = {
    "nuw", "nsw", "exact", "inbounds", "volatile", "tail", "musttail", "notail",
    "fast", "nnan", "ninf", "nsz", "arcp", "contract", "afn", "reassoc",
    "noundef", "nonnull", "nocapture", "readonly", "readnone", "writeonly",
    "signext", "zeroext", "returned", "dereferenceable",
    "fastcc", "ccc", "coldcc", "dso_local", "dso_preemptable", "internal",
    "external", "private", "linkonce", "linkonce_odr", "weak", "weak_odr",
    "hidden", "protected", "local_unnamed_addr", "unnamed_addr", "nounwind",
    "willreturn", "norecurse", "memory", "uwtable", "nofree", "nosync", "mustprogress"};

void skip_modifiers(Cursor& cur) {
    while (cur.peek().kind == Token::Kind::Word && kSkippableWords.count(cur.peek().text) > 0) {
        cur.next();
        // attribute argument, e.g. dereferenceable(8)
        if (cur.peek().is_punct('(') && cur.peek(1).kind == Token::Kind::Number &&
            cur.peek(2).is_punct(')')) {
            cur.next();
            cur.next();
            cur.next();
        }
    }
}

bool is_int_type(std::string_view word) {
    if (word.size() < 2 || word[0] != 'i') return false;
    return std::all_of(word.begin() + 1, word.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool is_type_start(const Token& t) {
    if (t.is_punct('<') || t.is_punct('[')) return true;
    if (t.kind != Token::Kind::Word) return false;
    return is_int_type(t.text) || t.text == "float" || t.text == "double" || t.text == "void" ||
           t.text == "ptr" || t.text == "label";
}

// Parses one type token of the subset and returns its canonical spelling.
std::string parse_type(Cursor& cur) {
    std::string out;
    const Token& t = cur.peek();
    if (t.is_punct('<') || t.is_punct('[')) {
        char open = t.text[0];
        char close = open == '<' ? '>' : ']';
        cur.next();
        const Token& n = cur.peek();
        if (n.kind != Token::Kind::Number) cur.fail("expected element count in composite type");
        std::string count = cur.next().text;
        cur.expect("x", "composite type");
        std::string element = parse_type(cur);
        if (!cur.peek().is_punct(close)) cur.fail("unterminated composite type");
        cur.next();
        out = std::string(1, open) + count + " x " + element + std::string(1, close);
    } else if (t.kind == Token::Kind::Word && is_type_start(t)) {
        out = cur.next().text;
    } else {
        cur.fail("expected a type");
    }
    while (cur.peek().is_punct('*')) {
        cur.next();
        out += '*';
    }
    return out;
}

// A value token: local/global id, literal, or a constant vector "<...>".
std::string parse_value(Cursor& cur) {
    const Token& t = cur.peek();
    if (t.kind == Token::Kind::LocalId || t.kind == Token::Kind::GlobalId ||
        t.kind == Token::Kind::Number) {
        return cur.next().text;
    }
    if (t.is("true") || t.is("false") || t.is("null") || t.is("undef") || t.is("poison") ||
        t.is("zeroinitializer")) {
        return cur.next().text;
    }
    if (t.is_punct('<')) {  // constant vector, captured verbatim
        std::string out = "<";
        cur.next();
        int depth = 1;
        bool first = true;
        while (depth > 0 && !cur.done()) {
            const Token& inner = cur.peek();
            if (inner.is_punct('<')) ++depth;
            if (inner.is_punct('>') && --depth == 0) {
                cur.next();
                break;
            }
            if (!first && !inner.is_punct(',')) out += ' ';
            out += cur.next().text;
            first = false;
        }
        return out + ">";
    }
    cur.fail("expected a value");
}

struct Operand {
    std::string type;
    std::string value;
};

Operand parse_typed_operand(Cursor& cur) {
    Operand op;
    op.type = parse_type(cur);
    skip_modifiers(cur);
    op.value = parse_value(cur);
    return op;
}

std::string element_type(const std::string& vector_type, Cursor& cur) {
    // "<N x T>" -> T
    auto x = vector_type.find(" x ");
    if (vector_type.empty() || vector_type.front() != '<' || x == std::string::npos)
        cur.fail("expected a vector type, got '" + vector_type + "'");
    return vector_type.substr(x + 3, vector_type.size() - x - 4);
}

// ---------------------------------------------------------------------------
// Instruction parsing
// ---------------------------------------------------------------------------

const std::set<std::string, std::less<>> kBinaryOps = {
    "add", "sub", "mul", "sdiv", "udiv", "srem", "urem",
    "fadd", "fsub", "fmul", "fdiv", "frem",
    "and", "or", "xor", "shl", "lshr", "ashr"};

const std::set<std::string, std::less<>> kCastOps = {
    "sext", "zext", "trunc", "fptrunc", "fpext", "bitcast", "ptrtoint",
    "inttoptr", "sitofp", "uitofp", "fptosi", "fptoui"};

const std::set<std::string, std::less<>> kCmpPredicates = {
    "eq", "ne", "ugt", "uge", "ult", "ule", "sgt", "sge", "slt", "sle",
    "oeq", "ogt", "oge", "olt", "ole", "one", "ord", "false", "true",
    "ueq", "une", "uno"};

IrInstruction parse_instruction(Cursor& cur) {
    IrInstruction in;

    if (cur.peek().kind == Token::Kind::LocalId && cur.peek(1).is_punct('=')) {
        in.result_id = cur.next().text.substr(1);
        cur.next();  // '='
    }
    skip_modifiers(cur);
    if (cur.peek().kind != Token::Kind::Word) cur.fail("expected an opcode");
    const Token op_tok = cur.next();
    std::string opcode = op_tok.text;
    skip_modifiers(cur);

    in.opcode = opcode;
    try {
        in.category = classify_instruction(opcode);
    } catch (const UnknownOpcode&) {
        throw ParseError(op_tok.line, op_tok.col, opcode, "unsupported opcode");
    }
    in.result_type = "void";

    if (kBinaryOps.count(opcode) > 0) {
        std::string type = parse_type(cur);
        std::string lhs = parse_value(cur);
        cur.expect(",", "binary operation");
        std::string rhs = parse_value(cur);
        in.result_type = type;
        in.operands = {{type, lhs}, {type, rhs}};
        return in;
    }
    if (opcode == "fneg") {
        Operand op = parse_typed_operand(cur);
        in.result_type = op.type;
        in.operands = {{op.type, op.value}};
        return in;
    }
    if (kCastOps.count(opcode) > 0) {
        Operand src = parse_typed_operand(cur);
        cur.expect("to", "cast");
        in.result_type = parse_type(cur);
        in.operands = {{src.type, src.value}};
        return in;
    }
    if (opcode == "icmp" || opcode == "fcmp") {
        if (cur.peek().kind != Token::Kind::Word || kCmpPredicates.count(cur.peek().text) == 0)
            cur.fail("expected a comparison predicate");
        in.predicate = cur.next().text;
        std::string type = parse_type(cur);
        std::string lhs = parse_value(cur);
        cur.expect(",", "comparison");
        std::string rhs = parse_value(cur);
        in.result_type = "i1";
        in.operands = {{type, lhs}, {type, rhs}};
        return in;
    }
    if (opcode == "select") {
        Operand cond = parse_typed_operand(cur);
        cur.expect(",", "select");
        Operand a = parse_typed_operand(cur);
        cur.expect(",", "select");
        Operand b = parse_typed_operand(cur);
        in.result_type = a.type;
        in.operands = {{cond.type, cond.value}, {a.type, a.value}, {b.type, b.value}};
        return in;
    }
    if (opcode == "load") {
        std::string first = parse_type(cur);
        if (cur.accept(",")) {
            Operand ptr = parse_typed_operand(cur);
            in.result_type = first;
            in.operands = {{ptr.type, ptr.value}};
        } else {
            // pre-opaque-pointer syntax: load T* %p
            if (first.size() < 2 || first.back() != '*') cur.fail("expected a pointer operand type");
            std::string value = parse_value(cur);
            in.result_type = first.substr(0, first.size() - 1);
            in.operands = {{first, value}};
        }
        return in;
    }
    if (opcode == "store") {
        Operand value = parse_typed_operand(cur);
        cur.expect(",", "store");
        Operand ptr = parse_typed_operand(cur);
        in.operands = {{value.type, value.value}, {ptr.type, ptr.value}};
        return in;
    }
    if (opcode == "alloca") {
        in.aggregate_type = parse_type(cur);
        in.result_type = "ptr";
        return in;
    }
    if (opcode == "getelementptr") {
        std::string first = parse_type(cur);
        if (cur.accept(",")) {
            in.aggregate_type = first;
            Operand base = parse_typed_operand(cur);
            in.operands.push_back({base.type, base.value});
        } else {
            // pre-opaque-pointer syntax: getelementptr T* %base, ...
            if (first.size() < 2 || first.back() != '*')
                cur.fail("expected a pointer base operand");
            in.aggregate_type = first.substr(0, first.size() - 1);
            in.operands.push_back({first, parse_value(cur)});
        }
        while (cur.accept(",")) {
            Operand index = parse_typed_operand(cur);
            in.operands.push_back({index.type, index.value});
        }
        in.result_type = "ptr";
        return in;
    }
    if (opcode == "phi") {
        in.result_type = parse_type(cur);
        do {
            cur.expect("[", "phi incoming pair");
            std::string value = parse_value(cur);
            cur.expect(",", "phi incoming pair");
            const Token& block = cur.peek();
            if (block.kind != Token::Kind::LocalId) cur.fail("expected an incoming block");
            cur.next();
            cur.expect("]", "phi incoming pair");
            in.operands.push_back({in.result_type, value});
            in.incoming_blocks.push_back(block.text.substr(1));
        } while (cur.accept(","));
        return in;
    }
    if (opcode == "call") {
        in.result_type = parse_type(cur);
        if (cur.peek().kind != Token::Kind::GlobalId) cur.fail("expected a callee");
        in.callee = cur.next().text;
        cur.expect("(", "call");
        if (!cur.peek().is_punct(')')) {
            do {
                Operand arg = parse_typed_operand(cur);
                in.operands.push_back({arg.type, arg.value});
            } while (cur.accept(","));
        }
        cur.expect(")", "call");
        return in;
    }
    if (opcode == "extractelement") {
        Operand vec = parse_typed_operand(cur);
        cur.expect(",", "extractelement");
        Operand idx = parse_typed_operand(cur);
        in.result_type = element_type(vec.type, cur);
        in.operands = {{vec.type, vec.value}, {idx.type, idx.value}};
        return in;
    }
    if (opcode == "insertelement") {
        Operand vec = parse_typed_operand(cur);
        cur.expect(",", "insertelement");
        Operand elt = parse_typed_operand(cur);
        cur.expect(",", "insertelement");
        Operand idx = parse_typed_operand(cur);
        in.result_type = vec.type;
        in.operands = {{vec.type, vec.value}, {elt.type, elt.value}, {idx.type, idx.value}};
        return in;
    }
    if (opcode == "shufflevector") {
        Operand a = parse_typed_operand(cur);
        cur.expect(",", "shufflevector");
        Operand b = parse_typed_operand(cur);
        cur.expect(",", "shufflevector");
        Operand mask = parse_typed_operand(cur);
        auto x = mask.type.find(" x ");
        in.result_type = x == std::string::npos
                             ? a.type
                             : mask.type.substr(0, x + 3) + element_type(a.type, cur) + ">";
        in.operands = {{a.type, a.value}, {b.type, b.value}, {mask.type, mask.value}};
        return in;
    }
    if (opcode == "br") {
        if (cur.accept("label")) {
            const Token& target = cur.peek();
            if (target.kind != Token::Kind::LocalId) cur.fail("expected a branch target");
            in.successors.push_back(cur.next().text.substr(1));
            return in;
        }
        Operand cond = parse_typed_operand(cur);
        in.operands = {{cond.type, cond.value}};
        for (int k = 0; k < 2; ++k) {
            cur.expect(",", "conditional branch");
            cur.expect("label", "conditional branch");
            const Token& target = cur.peek();
            if (target.kind != Token::Kind::LocalId) cur.fail("expected a branch target");
            in.successors.push_back(cur.next().text.substr(1));
        }
        return in;
    }
    if (opcode == "ret") {
        if (cur.accept("void")) return in;
        Operand value = parse_typed_operand(cur);
        in.result_type = "void";
        in.operands = {{value.type, value.value}};
        return in;
    }
    if (opcode == "switch") {
        Operand scrutinee = parse_typed_operand(cur);
        in.operands.push_back({scrutinee.type, scrutinee.value});
        cur.expect(",", "switch");
        cur.expect("label", "switch");
        if (cur.peek().kind != Token::Kind::LocalId) cur.fail("expected the default target");
        in.successors.push_back(cur.next().text.substr(1));
        cur.expect("[", "switch case list");
        while (!cur.accept("]")) {
            Operand case_value = parse_typed_operand(cur);
            cur.expect(",", "switch case");
            cur.expect("label", "switch case");
            if (cur.peek().kind != Token::Kind::LocalId) cur.fail("expected a case target");
            in.successors.push_back(cur.next().text.substr(1));
            in.operands.push_back({case_value.type, case_value.value});
        }
        return in;
    }
    if (opcode == "unreachable") return in;

    cur.fail("unsupported opcode '" + opcode + "'");
}

// ---------------------------------------------------------------------------
// Module parsing
// ---------------------------------------------------------------------------

struct Line {
    std::vector<Token> tokens;
    int number = 0;
};

std::vector<Line> lex_lines(std::string_view text) {
    std::vector<Line> lines;
    int line_no = 1;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t eol = text.find('\n', i);
        if (eol == std::string_view::npos) eol = text.size();
        std::vector<Token> tokens = lex_line(text.substr(i, eol - i), line_no);
        // Standalone metadata definitions ("!0 = !{...}") are module noise.
        if (!tokens.empty() && tokens.front().kind == Token::Kind::Meta) tokens.clear();
        drop_tolerated_clauses(tokens);
        if (!tokens.empty()) lines.push_back({std::move(tokens), line_no});
        ++line_no;
        if (eol == text.size()) break;
        i = eol + 1;
    }
    return lines;
}

// Function header after the define/declare keyword.
void parse_function_header(Cursor& cur, IrFunction& f) {
    skip_modifiers(cur);
    f.return_type = parse_type(cur);
    if (cur.peek().kind != Token::Kind::GlobalId) cur.fail("expected a function name");
    f.name = cur.next().text.substr(1);
    cur.expect("(", "function header");
    if (!cur.peek().is_punct(')')) {
        do {
            std::string type = parse_type(cur);
            skip_modifiers(cur);
            std::string name;
            if (cur.peek().kind == Token::Kind::LocalId) name = cur.next().text.substr(1);
            f.params.emplace_back(name, type);
        } while (cur.accept(","));
    }
    cur.expect(")", "function header");
}

bool is_module_level_noise(const Line& line) {
    const Token& t = line.tokens.front();
    return t.is("source_filename") || t.is("target") || t.is("attributes") ||
           t.kind == Token::Kind::GlobalId;  // global variable definitions are skipped
}

}  // namespace

IrModule parse_module(std::string_view ir_text) {
    IrModule module;
    std::vector<Line> lines = lex_lines(ir_text);

    std::size_t i = 0;
    while (i < lines.size()) {
        Line& line = lines[i];
        Cursor cur(line.tokens, line.number);

        if (is_module_level_noise(line)) {
            ++i;
            continue;
        }

        if (cur.accept("declare")) {
            IrFunction f;
            f.is_defined = false;
            parse_function_header(cur, f);
            if (module.find_function(f.name))
                throw ParseError(line.number, 1, f.name, "duplicate function name");
            module.functions.push_back(std::move(f));
            ++i;
            continue;
        }

        if (!cur.accept("define")) cur.fail("expected 'define', 'declare' or module metadata");

        IrFunction f;
        f.is_defined = true;
        parse_function_header(cur, f);
        skip_modifiers(cur);
        cur.expect("{", "function definition");
        if (module.find_function(f.name))
            throw ParseError(line.number, 1, f.name, "duplicate function name");
        ++i;

        BasicBlock block;
        bool block_open = false;
        bool block_terminated = false;
        bool saw_any_block = false;
        std::set<std::string> defined_values;
        for (const auto& [param_name, param_type] : f.params)
            if (!param_name.empty()) defined_values.insert(param_name);

        auto finish_block = [&](int at_line) {
            if (!block_open) return;
            if (!block_terminated)
                throw ParseError(at_line, 1, block.label, "basic block lacks a terminator");
            f.blocks.push_back(std::move(block));
            block = BasicBlock{};
            block_open = false;
            block_terminated = false;
        };

        bool closed = false;
        while (i < lines.size() && !closed) {
            Line& body_line = lines[i];
            Cursor body(body_line.tokens, body_line.number);

            if (body.peek().is_punct('}')) {
                finish_block(body_line.number);
                closed = true;
                ++i;
                continue;
            }

            // Label line: "name:" (a bare word or number followed by ':').
            if ((body.peek().kind == Token::Kind::Word || body.peek().kind == Token::Kind::Number) &&
                body.peek(1).is_punct(':')) {
                finish_block(body_line.number);
                block.label = body.peek().text;
                if (f.find_block(block.label))
                    throw ParseError(body_line.number, 1, block.label, "duplicate block label");
                block_open = true;
                saw_any_block = true;
                ++i;
                continue;
            }

            if (!block_open) {
                if (saw_any_block)
                    throw ParseError(body_line.number, body.peek().col, body.peek().text,
                                     "instruction outside a labeled block");
                block.label = "entry";
                block_open = true;
                saw_any_block = true;
            }
            if (block_terminated)
                throw ParseError(body_line.number, body.peek().col, body.peek().text,
                                 "instruction after the block terminator");

            // Multi-line switch: join lines until the case list closes.
            std::vector<Token> joined = body_line.tokens;
            bool is_switch = !joined.empty() && joined.front().is("switch");
            if (is_switch) {
                auto open_brackets = [](const std::vector<Token>& ts) {
                    int n = 0;
                    for (const Token& t : ts) {
                        if (t.is_punct('[')) ++n;
                        if (t.is_punct(']')) --n;
                    }
                    return n;
                };
                int balance = open_brackets(joined);
                while (balance > 0 && i + 1 < lines.size()) {
                    ++i;
                    balance += open_brackets(lines[i].tokens);
                    joined.insert(joined.end(), lines[i].tokens.begin(), lines[i].tokens.end());
                }
            }

            Cursor instr_cur(joined, body_line.number);
            IrInstruction in = parse_instruction(instr_cur);
            if (!instr_cur.done()) instr_cur.fail("trailing tokens after instruction");
            if (!in.result_id.empty() && !defined_values.insert(in.result_id).second)
                throw ParseError(body_line.number, 1, in.result_id, "value redefined");
            if (in.is_terminator()) {
                block.successor_labels = in.successors;
                block_terminated = true;
            }
            block.instructions.push_back(std::move(in));
            ++i;
        }

        if (!closed) throw ParseError(lines.back().number, 1, "", "missing '}' at end of function");
        if (f.blocks.empty()) throw ParseError(line.number, 1, f.name, "defined function has no blocks");

        for (const BasicBlock& b : f.blocks)
            for (const std::string& target : b.successor_labels)
                if (!f.find_block(target)) throw UnresolvedLabel(f.name, target);

        module.functions.push_back(std::move(f));
    }

    // Calls must reference module functions (defined or declared).
    for (const IrFunction& f : module.functions) {
        for (const BasicBlock& b : f.blocks) {
            for (const IrInstruction& in : b.instructions) {
                if (in.opcode != "call") continue;
                std::string callee = in.callee.substr(1);
                if (!module.find_function(callee))
                    throw ParseError(0, 0, in.callee, "call to undeclared function in @" + f.name);
            }
        }
    }
    return module;
}

}  // namespace hlsqor
