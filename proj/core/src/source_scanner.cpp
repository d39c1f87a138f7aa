#include "hlsqor/source_scanner.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <span>

#include "hlsqor/numeric.hpp"
#include "hlsqor/errors.hpp"

namespace hlsqor {

namespace {

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// ---------------------------------------------------------------------------
// Pass 1: strip comments, char/string literals and pragma lines, remembering
// the pragma lines for separate parsing. Columns are preserved with blanks so
// line numbers and brace positions survive.
// ---------------------------------------------------------------------------

struct PragmaLine {
    int line = 1;
    std::string text;  // the pragma line, comments stripped
};

struct StrippedSource {
    std::string code;  // same length/lines as input, pragmas and comments blanked
    std::vector<PragmaLine> pragma_lines;
};

StrippedSource strip_source(std::string_view text) {
    StrippedSource out;
    out.code.reserve(text.size());

    enum class State { Code, LineComment, BlockComment, String, Char };
    State state = State::Code;

    std::size_t i = 0;
    while (i < text.size()) {
        // Examine one full line at a time so pragma lines can be lifted out.
        std::size_t eol = text.find('\n', i);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(i, eol - i);

        std::string cleaned(line.size(), ' ');
        for (std::size_t j = 0; j < line.size(); ++j) {
            char c = line[j];
            char next = j + 1 < line.size() ? line[j + 1] : '\0';
            switch (state) {
                case State::Code:
                    if (c == '/' && next == '/') {
                        j = line.size();  // rest of line is comment
                    } else if (c == '/' && next == '*') {
                        state = State::BlockComment;
                        ++j;
                    } else if (c == '"') {
                        state = State::String;
                    } else if (c == '\'') {
                        state = State::Char;
                    } else {
                        cleaned[j] = c;
                    }
                    break;
                case State::BlockComment:
                    if (c == '*' && next == '/') {
                        state = State::Code;
                        ++j;
                    }
                    break;
                case State::String:
                    if (c == '\\') ++j;
                    else if (c == '"') state = State::Code;
                    break;
                case State::Char:
                    if (c == '\\') ++j;
                    else if (c == '\'') state = State::Code;
                    break;
                case State::LineComment:
                    break;
            }
        }

        // Pragma lines never continue across newlines in the constrained
        // grammar; lift them out before tokenization.
        std::size_t first = cleaned.find_first_not_of(" \t");
        if (first != std::string::npos && cleaned.compare(first, 7, "#pragma") == 0) {
            int line_no = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(i), '\n'));
            out.pragma_lines.push_back({line_no, cleaned.substr(first)});
            cleaned.assign(cleaned.size(), ' ');
        }

        out.code += cleaned;
        if (eol < text.size()) out.code += '\n';
        i = eol + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Pass 2: tokenize the cleaned code.
// ---------------------------------------------------------------------------

struct Token {
    enum class Kind { Ident, Number, Punct };
    Kind kind;
    std::string text;
    int line;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view code) {
    std::vector<Token> tokens;
    int line = 1;
    std::size_t i = 0;
    while (i < code.size()) {
        char c = code[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (ident_start(c)) {
            std::size_t j = i + 1;
            while (j < code.size() && ident_char(code[j])) ++j;
            tokens.push_back({Token::Kind::Ident, std::string(code.substr(i, j - i)), line});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i + 1;
            while (j < code.size() && (std::isalnum(static_cast<unsigned char>(code[j])) || code[j] == '.')) ++j;
            tokens.push_back({Token::Kind::Number, std::string(code.substr(i, j - i)), line});
            i = j;
        } else {
            tokens.push_back({Token::Kind::Punct, std::string(1, c), line});
            ++i;
        }
    }
    return tokens;
}

// ---------------------------------------------------------------------------
// Pass 3: a scope walk that records function and loop body line ranges.
// ---------------------------------------------------------------------------

struct RawLoop {
    std::string label;
    std::optional<std::int64_t> bound;
    int nesting_depth = 0;
    int source_line = 1;
    int body_begin = 0;  // inclusive line range of the loop body
    int body_end = 0;
};

struct RawFunction {
    std::string name;
    int body_begin = 0;
    int body_end = 0;
};

struct ScanModel {
    std::vector<RawLoop> loops;
    std::vector<RawFunction> functions;
    std::vector<PragmaLine> pragma_lines;
};

// Trip count of "for (init; cond; inc)" when init start, cond limit and inc
// step are all integer literals; nullopt otherwise.
std::optional<std::int64_t> trip_count(std::span<const Token> header) {
    // Split at top-level semicolons.
    std::vector<std::span<const Token>> parts;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string& t = header[i].text;
        if (header[i].kind == Token::Kind::Punct) {
            if (t == "(" || t == "[") ++depth;
            else if (t == ")" || t == "]") --depth;
            else if (t == ";" && depth == 0) {
                parts.push_back(header.subspan(start, i - start));
                start = i + 1;
            }
        }
    }
    parts.push_back(header.subspan(start));
    if (parts.size() != 3) return std::nullopt;

    auto literal = [](const Token& t) -> std::optional<std::int64_t> {
        if (t.kind != Token::Kind::Number) return std::nullopt;
        return parse_int(t.text);
    };

    // init: [type tokens] ident = INT
    std::span<const Token> init = parts[0];
    if (init.size() < 3) return std::nullopt;
    if (!(init[init.size() - 2].kind == Token::Kind::Punct && init[init.size() - 2].text == "=")) return std::nullopt;
    auto start_val = literal(init.back());
    const Token& var = init[init.size() - 3];
    if (!start_val || var.kind != Token::Kind::Ident) return std::nullopt;

    // cond: ident OP INT  with OP in  < <= > >=
    std::span<const Token> cond = parts[1];
    if (cond.empty() || cond[0].kind != Token::Kind::Ident || cond[0].text != var.text) return std::nullopt;
    std::string op;
    std::size_t k = 1;
    while (k < cond.size() && cond[k].kind == Token::Kind::Punct &&
           (cond[k].text == "<" || cond[k].text == ">" || cond[k].text == "=")) {
        op += cond[k].text;
        ++k;
    }
    if (k != cond.size() - 1) return std::nullopt;
    auto limit = literal(cond[k]);
    if (!limit) return std::nullopt;
    if (op != "<" && op != "<=" && op != ">" && op != ">=") return std::nullopt;

    // inc: var++ / ++var / var-- / --var / var += INT / var -= INT
    std::span<const Token> inc = parts[2];
    std::int64_t step = 0;
    auto is = [](const Token& t, std::string_view s) { return t.kind == Token::Kind::Punct && t.text == s; };
    if (inc.size() == 3 && inc[0].kind == Token::Kind::Ident && inc[0].text == var.text) {
        if (is(inc[1], "+") && is(inc[2], "+")) step = 1;
        else if (is(inc[1], "-") && is(inc[2], "-")) step = -1;
    } else if (inc.size() == 3 && inc[2].kind == Token::Kind::Ident && inc[2].text == var.text) {
        if (is(inc[0], "+") && is(inc[1], "+")) step = 1;
        else if (is(inc[0], "-") && is(inc[1], "-")) step = -1;
    } else if (inc.size() == 4 && inc[0].kind == Token::Kind::Ident && inc[0].text == var.text &&
               is(inc[2], "=")) {
        auto amount = literal(inc[3]);
        if (!amount || *amount == 0) return std::nullopt;
        if (is(inc[1], "+")) step = *amount;
        else if (is(inc[1], "-")) step = -*amount;
    }
    if (step == 0) return std::nullopt;

    std::int64_t lo = *start_val, hi = *limit;
    std::int64_t span = 0;
    if (op == "<") span = hi - lo;
    else if (op == "<=") span = hi - lo + 1;
    else if (op == ">") span = lo - hi;
    else span = lo - hi + 1;
    if (span <= 0) return std::nullopt;
    if ((op[0] == '<') != (step > 0)) return std::nullopt;  // direction mismatch never terminates

    std::int64_t mag = step > 0 ? step : -step;
    return (span + mag - 1) / mag;
}

ScanModel scan_source(std::string_view text) {
    ScanModel model;
    StrippedSource stripped = strip_source(text);
    model.pragma_lines = std::move(stripped.pragma_lines);
    std::vector<Token> tokens = tokenize(stripped.code);

    struct Scope {
        enum class Body { Brace, Statement };
        enum class Role { Plain, Function, Loop };
        Body body;
        Role role;
        int index = -1;  // into model.loops / model.functions
    };
    std::vector<Scope> scopes;

    auto loop_depth = [&]() {
        int d = 0;
        for (const Scope& s : scopes)
            if (s.role == Scope::Role::Loop) ++d;
        return d;
    };
    auto close_scope = [&](const Scope& s, int line) {
        if (s.role == Scope::Role::Loop) model.loops[static_cast<std::size_t>(s.index)].body_end = line;
        if (s.role == Scope::Role::Function) model.functions[static_cast<std::size_t>(s.index)].body_end = line;
    };
    // Statement-bodied loops (no braces) end with the statement.
    auto pop_statement_scopes = [&](int line) {
        while (!scopes.empty() && scopes.back().body == Scope::Body::Statement) {
            close_scope(scopes.back(), line);
            scopes.pop_back();
        }
    };

    // -1 = none; otherwise index of a just-parsed header waiting for its body.
    int pending_loop = -1;
    int pending_function = -1;

    std::size_t i = 0;
    auto skip_parens = [&](std::size_t from) {
        // from points at '('; returns index one past the matching ')'.
        int depth = 0;
        std::size_t j = from;
        for (; j < tokens.size(); ++j) {
            if (tokens[j].kind != Token::Kind::Punct) continue;
            if (tokens[j].text == "(") ++depth;
            else if (tokens[j].text == ")" && --depth == 0) return j + 1;
        }
        return j;
    };

    while (i < tokens.size()) {
        const Token& tok = tokens[i];

        if (tok.kind == Token::Kind::Ident && tok.text == "for" && i + 1 < tokens.size() &&
            tokens[i + 1].kind == Token::Kind::Punct && tokens[i + 1].text == "(") {
            // Optional label: "ident :" immediately before.
            std::string label;
            if (i >= 2 && tokens[i - 1].kind == Token::Kind::Punct && tokens[i - 1].text == ":" &&
                tokens[i - 2].kind == Token::Kind::Ident) {
                label = tokens[i - 2].text;
            }
            std::size_t end = skip_parens(i + 1);
            std::span<const Token> header(tokens.data() + i + 2, end > i + 3 ? end - i - 3 : 0);

            // A pending statement-bodied loop encloses this one.
            if (pending_loop >= 0) {
                scopes.push_back({Scope::Body::Statement, Scope::Role::Loop, pending_loop});
                pending_loop = -1;
            }

            RawLoop loop;
            loop.label = label.empty() ? "L" + std::to_string(tok.line) : label;
            loop.bound = trip_count(header);
            loop.nesting_depth = loop_depth();
            loop.source_line = tok.line;
            loop.body_begin = tok.line;  // refined to the '{' line for brace bodies
            loop.body_end = tok.line;
            model.loops.push_back(loop);
            pending_loop = static_cast<int>(model.loops.size()) - 1;
            i = end;
            continue;
        }

        if (tok.kind == Token::Kind::Punct && tok.text == "{") {
            Scope s{Scope::Body::Brace, Scope::Role::Plain, -1};
            if (pending_loop >= 0) {
                s.role = Scope::Role::Loop;
                s.index = pending_loop;
                model.loops[static_cast<std::size_t>(pending_loop)].body_begin = tok.line;
                pending_loop = -1;
            } else if (pending_function >= 0) {
                s.role = Scope::Role::Function;
                s.index = pending_function;
                model.functions[static_cast<std::size_t>(pending_function)].body_begin = tok.line;
                pending_function = -1;
            }
            scopes.push_back(s);
            ++i;
            continue;
        }

        if (tok.kind == Token::Kind::Punct && tok.text == "}") {
            if (!scopes.empty()) {
                close_scope(scopes.back(), tok.line);
                scopes.pop_back();
            }
            pop_statement_scopes(tok.line);
            ++i;
            continue;
        }

        if (tok.kind == Token::Kind::Punct && tok.text == ";") {
            if (pending_loop >= 0) {
                // "for (...);" with an empty body
                model.loops[static_cast<std::size_t>(pending_loop)].body_end = tok.line;
                pending_loop = -1;
            }
            pop_statement_scopes(tok.line);
            ++i;
            continue;
        }

        // Function header: "ident ( ... ) {" outside any function body, with
        // at least one type token before the name.
        if (tok.kind == Token::Kind::Ident && scopes.empty() && pending_loop < 0 && i + 1 < tokens.size() &&
            tokens[i + 1].kind == Token::Kind::Punct && tokens[i + 1].text == "(" &&
            i >= 1 && (tokens[i - 1].kind == Token::Kind::Ident ||
                       (tokens[i - 1].kind == Token::Kind::Punct && tokens[i - 1].text == "*"))) {
            std::size_t end = skip_parens(i + 1);
            if (end < tokens.size() && tokens[end].kind == Token::Kind::Punct && tokens[end].text == "{") {
                model.functions.push_back({tok.text, tokens[end].line, 0});
                pending_function = static_cast<int>(model.functions.size()) - 1;
            }
            i = end;
            continue;
        }

        if (pending_loop >= 0) {
            // Statement-bodied loop: the statement starting here is the body.
            scopes.push_back({Scope::Body::Statement, Scope::Role::Loop, pending_loop});
            pending_loop = -1;
            continue;
        }
        ++i;
    }

    int last_line = tokens.empty() ? 1 : tokens.back().line;
    while (!scopes.empty()) {  // unbalanced braces: close at EOF
        close_scope(scopes.back(), last_line);
        scopes.pop_back();
    }
    return model;
}

// ---------------------------------------------------------------------------
// Pragma line parsing.
// ---------------------------------------------------------------------------

struct PragmaArgs {
    std::vector<std::pair<std::string, std::string>> keyed;  // key=value, keys lowercased
    std::vector<std::string> bare;                           // lowercased
};

PragmaArgs parse_pragma_args(std::span<const Token> args) {
    PragmaArgs out;
    std::size_t i = 0;
    while (i < args.size()) {
        if (args[i].kind != Token::Kind::Punct && i + 1 < args.size() &&
            args[i + 1].kind == Token::Kind::Punct && args[i + 1].text == "=") {
            std::string value = i + 2 < args.size() ? args[i + 2].text : "";
            out.keyed.emplace_back(lowercase(args[i].text), value);
            i += 3;
        } else if (args[i].kind != Token::Kind::Punct) {
            out.bare.push_back(lowercase(args[i].text));
            ++i;
        } else {
            ++i;
        }
    }
    return out;
}

std::optional<std::string> find_key(const PragmaArgs& args, std::string_view key) {
    for (const auto& [k, v] : args.keyed)
        if (k == key) return v;
    return std::nullopt;
}

std::int64_t require_positive_int(const std::optional<std::string>& value, int line,
                                  std::string_view what) {
    if (!value) throw MalformedPragma(line, std::string(what) + " is required");
    auto parsed = parse_int(*value);
    if (!parsed || *parsed < 1)
        throw MalformedPragma(line, std::string(what) + " must be a positive integer, got '" + *value + "'");
    return *parsed;
}

// Parses one recognized pragma line; nullopt = skip (with a warning already
// emitted by the caller for unrecognized kinds, or an "off" directive here).
std::optional<PragmaDirective> parse_hls_pragma(const PragmaLine& line, const std::string& kind_word,
                                                std::span<const Token> args,
                                                std::vector<ScanWarning>& warnings) {
    PragmaArgs parsed = parse_pragma_args(args);
    auto has_bare = [&](std::string_view word) {
        return std::find(parsed.bare.begin(), parsed.bare.end(), word) != parsed.bare.end();
    };

    PragmaDirective directive;
    directive.source_line = line.line;

    if (kind_word == "unroll") {
        directive.kind = PragmaKind::Unroll;
        directive.factor = require_positive_int(find_key(parsed, "factor"), line.line, "unroll factor");
        return directive;
    }
    if (kind_word == "pipeline") {
        if (has_bare("off")) {
            warnings.push_back({line.line, "'pipeline off' disables pipelining; ignored"});
            return std::nullopt;
        }
        directive.kind = PragmaKind::Pipeline;
        if (auto ii = find_key(parsed, "ii"))
            directive.initiation_interval = require_positive_int(ii, line.line, "pipeline II");
        return directive;
    }
    if (kind_word == "array_partition" || kind_word == "array_reshape") {
        directive.kind =
            kind_word == "array_partition" ? PragmaKind::ArrayPartition : PragmaKind::ArrayReshape;
        if (!find_key(parsed, "variable"))
            throw MalformedPragma(line.line, kind_word + " requires variable=<name>");
        PartitionStyle style = PartitionStyle::Complete;
        if (has_bare("block")) style = PartitionStyle::Block;
        else if (has_bare("cyclic")) style = PartitionStyle::Cyclic;
        else if (has_bare("complete")) style = PartitionStyle::Complete;
        directive.partition_style = style;
        auto factor = find_key(parsed, "factor");
        if (style == PartitionStyle::Complete) {
            if (factor)
                throw MalformedPragma(line.line, "factor is not allowed with complete " + kind_word);
        } else {
            directive.factor = require_positive_int(factor, line.line, kind_word + " factor");
        }
        if (auto dim = find_key(parsed, "dim")) {
            auto parsed_dim = parse_int(*dim);
            if (!parsed_dim || *parsed_dim < 0)
                throw MalformedPragma(line.line, "dim must be a non-negative integer, got '" + *dim + "'");
            directive.dimension = *parsed_dim;
        }
        return directive;
    }
    if (kind_word == "inline") {
        if (has_bare("off")) {
            warnings.push_back({line.line, "'inline off' disables inlining; ignored"});
            return std::nullopt;
        }
        directive.kind = PragmaKind::Inline;
        return directive;
    }
    if (kind_word == "function_instantiate") {
        directive.kind = PragmaKind::FunctionInstantiate;
        if (!find_key(parsed, "variable"))
            throw MalformedPragma(line.line, "function_instantiate requires variable=<name>");
        return directive;
    }
    warnings.push_back({line.line, "unrecognized HLS pragma kind '" + kind_word + "'; skipped"});
    return std::nullopt;
}

void attach_context(PragmaDirective& directive, const ScanModel& model) {
    for (const RawFunction& f : model.functions) {
        if (directive.source_line >= f.body_begin && directive.source_line <= f.body_end)
            directive.enclosing_function = f.name;
    }
    const RawLoop* innermost = nullptr;
    for (const RawLoop& loop : model.loops) {
        if (directive.source_line >= loop.body_begin && directive.source_line <= loop.body_end) {
            if (!innermost || loop.nesting_depth >= innermost->nesting_depth) innermost = &loop;
        }
    }
    if (innermost) directive.attached_loop_label = innermost->label;
}

}  // namespace

std::string to_string(PragmaKind kind) {
    switch (kind) {
        case PragmaKind::Unroll: return "unroll";
        case PragmaKind::Pipeline: return "pipeline";
        case PragmaKind::ArrayPartition: return "array_partition";
        case PragmaKind::ArrayReshape: return "array_reshape";
        case PragmaKind::Inline: return "inline";
        case PragmaKind::FunctionInstantiate: return "function_instantiate";
    }
    return "?";
}

std::string to_string(PartitionStyle style) {
    switch (style) {
        case PartitionStyle::Block: return "block";
        case PartitionStyle::Cyclic: return "cyclic";
        case PartitionStyle::Complete: return "complete";
    }
    return "?";
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    std::int64_t g = std::gcd(num, den);
    if (g == 0) return {num, den == 0 ? 1 : den};
    return {num / g, den / g};
}

std::vector<PragmaDirective> scan_pragmas(std::string_view source_text,
                                          std::vector<ScanWarning>* warnings) {
    ScanModel model = scan_source(source_text);
    std::vector<ScanWarning> local_warnings;
    std::vector<PragmaDirective> directives;

    for (const PragmaLine& line : model.pragma_lines) {
        std::vector<Token> tokens = tokenize(line.text);
        // tokens: '#' 'pragma' <ns> <kind> <args...>
        if (tokens.size() < 3) continue;
        std::size_t k = 0;
        if (tokens[k].kind == Token::Kind::Punct && tokens[k].text == "#") ++k;
        if (k < tokens.size() && lowercase(tokens[k].text) == "pragma") ++k;
        if (k >= tokens.size() || lowercase(tokens[k].text) != "hls") continue;  // not an HLS pragma
        ++k;
        if (k >= tokens.size()) {
            local_warnings.push_back({line.line, "empty #pragma HLS line; skipped"});
            continue;
        }
        std::string kind_word = lowercase(tokens[k].text);
        std::span<const Token> args(tokens.data() + k + 1, tokens.size() - k - 1);
        if (auto directive = parse_hls_pragma({line.line, line.text}, kind_word, args, local_warnings)) {
            attach_context(*directive, model);
            directives.push_back(std::move(*directive));
        }
    }

    if (warnings) warnings->insert(warnings->end(), local_warnings.begin(), local_warnings.end());
    return directives;
}

std::vector<LoopInfo> analyze_loops(std::string_view source_text,
                                    const std::vector<PragmaDirective>& pragmas,
                                    std::vector<ScanWarning>* warnings) {
    ScanModel model = scan_source(source_text);
    std::vector<LoopInfo> loops;
    loops.reserve(model.loops.size());
    for (const RawLoop& raw : model.loops) {
        LoopInfo info;
        info.label = raw.label;
        info.loop_bound = raw.bound;
        info.nesting_depth = raw.nesting_depth;
        info.source_line = raw.source_line;
        loops.push_back(std::move(info));
    }

    auto loop_by_label = [&](const std::string& label) -> LoopInfo* {
        for (LoopInfo& loop : loops)
            if (loop.label == label) return &loop;
        return nullptr;
    };

    for (const PragmaDirective& directive : pragmas) {
        if (!directive.attached_loop_label) continue;
        LoopInfo* loop = loop_by_label(*directive.attached_loop_label);
        if (!loop) continue;
        if (directive.kind == PragmaKind::Unroll && directive.factor) {
            if (loop->unroll_factor != 1 && warnings)
                warnings->push_back({directive.source_line,
                                     "loop '" + loop->label + "' already has an unroll factor; overriding"});
            loop->unroll_factor = *directive.factor;
        } else if (directive.kind == PragmaKind::Pipeline) {
            loop->pipelined = true;
            if (directive.initiation_interval) loop->initiation_interval = directive.initiation_interval;
        }
    }

    for (LoopInfo& loop : loops) {
        if (loop.loop_bound) loop.batch_size = make_rational(*loop.loop_bound, loop.unroll_factor);
    }
    return loops;
}

SourceFeatures source_features(const std::vector<LoopInfo>& loops,
                               const std::vector<PragmaDirective>& pragmas) {
    SourceFeatures f;
    f.total_loop_count = static_cast<double>(loops.size());

    double unroll_sum = 0;
    double batch_sum = 0;
    int batch_n = 0;
    double ii_sum = 0;
    int ii_n = 0;
    for (const LoopInfo& loop : loops) {
        double factor = static_cast<double>(loop.unroll_factor);
        f.max_unroll_factor = std::max(f.max_unroll_factor, factor);
        unroll_sum += factor;
        if (factor > 1) f.num_unrolled_loops += 1;
        if (loop.batch_size) {
            double batch = loop.batch_size->value();
            f.max_batch_size = std::max(f.max_batch_size, batch);
            batch_sum += batch;
            ++batch_n;
        }
        if (loop.pipelined) {
            f.num_pipelined_loops += 1;
            if (loop.initiation_interval) {
                double ii = static_cast<double>(*loop.initiation_interval);
                f.max_pipeline_ii = std::max(f.max_pipeline_ii, ii);
                ii_sum += ii;
                ++ii_n;
            }
        }
    }
    if (!loops.empty()) f.avg_unroll_factor = unroll_sum / static_cast<double>(loops.size());
    if (batch_n > 0) f.avg_batch_size = batch_sum / batch_n;
    if (ii_n > 0) f.avg_pipeline_ii = ii_sum / ii_n;

    // 1-based source-order index of the pipelined loop with the largest known
    // bound; first pipelined loop when no bound is known; 0 when none.
    std::int64_t best_bound = -1;
    int best_index = 0;
    int first_pipelined = 0;
    for (std::size_t i = 0; i < loops.size(); ++i) {
        if (!loops[i].pipelined) continue;
        if (first_pipelined == 0) first_pipelined = static_cast<int>(i) + 1;
        if (loops[i].loop_bound && *loops[i].loop_bound > best_bound) {
            best_bound = *loops[i].loop_bound;
            best_index = static_cast<int>(i) + 1;
        }
    }
    f.max_pipelined_loop_index = best_index != 0 ? best_index : first_pipelined;

    std::set<std::string> inlined;
    for (const PragmaDirective& p : pragmas) {
        switch (p.kind) {
            case PragmaKind::ArrayPartition: f.num_array_partition_pragmas += 1; break;
            case PragmaKind::ArrayReshape: f.num_array_reshape_pragmas += 1; break;
            case PragmaKind::Inline: inlined.insert(p.enclosing_function); break;
            default: break;
        }
    }
    f.num_inlined_functions = static_cast<double>(inlined.size());
    return f;
}

std::array<double, SourceFeatures::kCount> SourceFeatures::as_array() const {
    return {max_unroll_factor,
            avg_unroll_factor,
            max_batch_size,
            avg_batch_size,
            num_unrolled_loops,
            num_pipelined_loops,
            max_pipeline_ii,
            avg_pipeline_ii,
            max_pipelined_loop_index,
            num_array_partition_pragmas,
            num_array_reshape_pragmas,
            num_inlined_functions,
            total_loop_count};
}

const std::array<std::string, SourceFeatures::kCount>& SourceFeatures::names() {
    static const std::array<std::string, kCount> names = {
        "src_max_unroll_factor",
        "src_avg_unroll_factor",
        "src_max_batch_size",
        "src_avg_batch_size",
        "src_num_unrolled_loops",
        "src_num_pipelined_loops",
        "src_max_pipeline_ii",
        "src_avg_pipeline_ii",
        "src_max_pipelined_loop_index",
        "src_num_array_partition_pragmas",
        "src_num_array_reshape_pragmas",
        "src_num_inlined_functions",
        "src_total_loop_count"};
    return names;
}

}  // namespace hlsqor
