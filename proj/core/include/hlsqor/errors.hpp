#pragma once

#include <stdexcept>
#include <string>

namespace hlsqor {

/// Base class for every error raised by the toolkit. The CLI maps these to
/// exit code 2 (data error).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- source scanning ---

class MalformedPragma : public Error {
public:
    MalformedPragma(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": malformed pragma: " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// --- IR parsing ---

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& token, const std::string& msg)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + msg +
                (token.empty() ? std::string() : " (at '" + token + "')")),
          line_(line),
          column_(column),
          token_(token) {}
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& token() const { return token_; }

private:
    int line_;
    int column_;
    std::string token_;
};

class UnresolvedLabel : public Error {
public:
    UnresolvedLabel(const std::string& function, const std::string& label)
        : Error("function @" + function + ": branch to undefined label %" + label),
          label_(label) {}
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

class UnknownOpcode : public Error {
public:
    explicit UnknownOpcode(const std::string& opcode)
        : Error("unknown opcode '" + opcode + "'"), opcode_(opcode) {}
    const std::string& opcode() const { return opcode_; }

private:
    std::string opcode_;
};

class EmptyFunction : public Error {
public:
    explicit EmptyFunction(const std::string& name)
        : Error("function @" + name + " has no basic blocks") {}
};

// --- graphs ---

class UnknownTop : public Error {
public:
    explicit UnknownTop(const std::string& name)
        : Error("top function '" + name + "' not found in module") {}
};

// --- feature assembly ---

class NonFiniteFeature : public Error {
public:
    explicit NonFiniteFeature(const std::string& slot)
        : Error("feature slot '" + slot + "' is not finite"), slot_(slot) {}
    const std::string& slot() const { return slot_; }

private:
    std::string slot_;
};

class UnsupportedModelKind : public Error {
public:
    explicit UnsupportedModelKind(const std::string& what) : Error(what) {}
};

// --- dataset / model files ---

class SchemaMismatch : public Error {
public:
    explicit SchemaMismatch(const std::string& msg) : Error("schema mismatch: " + msg) {}
};

class DuplicateKey : public Error {
public:
    explicit DuplicateKey(const std::string& key)
        : Error("duplicate (design, variant, device) key: " + key) {}
};

class BadValue : public Error {
public:
    BadValue(int row, const std::string& msg)
        : Error("row " + std::to_string(row) + ": " + msg), row_(row) {}
    int row() const { return row_; }

private:
    int row_;
};

class InsufficientData : public Error {
public:
    explicit InsufficientData(const std::string& msg) : Error(msg) {}
};

class BadHyperparam : public Error {
public:
    BadHyperparam(const std::string& key, const std::string& allowed)
        : Error("hyperparameter '" + key + "' out of range; allowed: " + allowed) {}
};

class VersionMismatch : public Error {
public:
    explicit VersionMismatch(const std::string& msg) : Error(msg) {}
};

class CorruptModel : public Error {
public:
    explicit CorruptModel(const std::string& msg) : Error("corrupt model file: " + msg) {}
};

// --- evaluation ---

class ZeroActual : public Error {
public:
    ZeroActual() : Error("MAPE undefined: an actual value is zero") {}
};

class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t a, std::size_t b)
        : Error("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class DegenerateActual : public Error {
public:
    DegenerateActual() : Error("R^2 undefined: actual values are all equal or too few") {}
};

}  // namespace hlsqor
