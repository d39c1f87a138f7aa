#pragma once

#include <string_view>

#include "hlsqor/ir.hpp"

namespace hlsqor {

/// Parse the supported textual-IR subset: define/declare headers with typed
/// parameters, labeled blocks, the opcode table from ir.hpp, integer types
/// i1..i64, float, double, pointers (`ptr` or `T*`), arrays `[N x T]` and
/// vectors `<N x T>`. Metadata, attribute groups and align clauses are
/// skipped tolerantly; `;` comments are ignored.
///
/// Throws ParseError (with line/column and offending token) on text outside
/// the subset and UnresolvedLabel when a branch target does not exist.
IrModule parse_module(std::string_view ir_text);

}  // namespace hlsqor
