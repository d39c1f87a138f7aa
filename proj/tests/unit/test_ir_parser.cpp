#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hlsqor/errors.hpp"
#include "hlsqor/ir_parser.hpp"

using namespace hlsqor;

TEST_CASE("minimal module: one function, one block, ret void") {
    IrModule m = parse_module("define void @f() {\n  ret void\n}\n");
    REQUIRE(m.functions.size() == 1);
    const IrFunction& f = m.functions[0];
    CHECK(f.name == "f");
    CHECK(f.is_defined);
    REQUIRE(f.blocks.size() == 1);
    CHECK(f.blocks[0].label == "entry");
    REQUIRE(f.blocks[0].instructions.size() == 1);
    CHECK(f.blocks[0].instructions[0].opcode == "ret");
    CHECK(f.blocks[0].successor_labels.empty());
}

TEST_CASE("conditional branch successors") {
    IrModule m = parse_module(
        "define void @f(i1 %c) {\n"
        "entry:\n"
        "  br i1 %c, label %t, label %f\n"
        "t:\n"
        "  ret void\n"
        "f:\n"
        "  ret void\n"
        "}\n");
    const BasicBlock& entry = m.functions[0].blocks[0];
    CHECK(entry.successor_labels == std::vector<std::string>{"t", "f"});
}

TEST_CASE("undefined branch target raises UnresolvedLabel") {
    CHECK_THROWS_AS(parse_module("define void @f() {\n  br label %nowhere\n}\n"), UnresolvedLabel);
}

TEST_CASE("parser rejects malformed input with positions") {
    CHECK_THROWS_AS(parse_module("define void @f() {\n  frobnicate i32 %a\n}\n"), ParseError);
    CHECK_THROWS_AS(parse_module("define void @f() {\n  add i32 %a %b\n}\n"), ParseError);
    CHECK_THROWS_AS(parse_module("define void @f() {\n  ret void\n"), ParseError);
    CHECK_THROWS_AS(parse_module("definitely not ir"), ParseError);
    try {
        parse_module("define void @f() {\n  %x = bogus i32 %a\n}\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.token() == "bogus");
    }
}

TEST_CASE("blocks must terminate, and nothing may follow the terminator") {
    CHECK_THROWS_AS(parse_module("define void @f() {\nentry:\n  %x = add i32 1, 2\nnext:\n  ret void\n}\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_module("define void @f() {\n  ret void\n  %x = add i32 1, 2\n}\n"),
                    ParseError);
}

TEST_CASE("declarations are retained undefined") {
    IrModule m = parse_module("declare i32 @ext(i32, i8)\ndefine void @f() {\n  ret void\n}\n");
    REQUIRE(m.functions.size() == 2);
    CHECK(!m.functions[0].is_defined);
    CHECK(m.functions[0].name == "ext");
    CHECK(m.functions[0].params.size() == 2);
    CHECK(m.functions[0].params[1].second == "i8");
    CHECK(m.find_function("ext") != nullptr);
    CHECK(m.find_function("missing") == nullptr);
}

TEST_CASE("classify_instruction covers the published families") {
    CHECK(classify_instruction("add") == OpCategory::Math);
    CHECK(classify_instruction("fmul") == OpCategory::Math);
    CHECK(classify_instruction("sext") == OpCategory::SignExt);
    CHECK(classify_instruction("zext") == OpCategory::ZeroExt);
    CHECK(classify_instruction("load") == OpCategory::Memory);
    CHECK(classify_instruction("and") == OpCategory::Logic);
    CHECK(classify_instruction("extractelement") == OpCategory::Vector);
    CHECK(classify_instruction("br") == OpCategory::Control);
    CHECK(classify_instruction("bitcast") == OpCategory::Cast);
    CHECK(classify_instruction("phi") == OpCategory::Other);
    CHECK_THROWS_AS(classify_instruction("fence"), UnknownOpcode);
}

TEST_CASE("classify_instruction is total over the published subset") {
    for (const std::string& opcode : supported_opcodes()) CHECK_NOTHROW(classify_instruction(opcode));
    CHECK(supported_opcodes().size() == 47);
}

TEST_CASE("metadata, attribute groups and align clauses are skipped tolerantly") {
    IrModule m = parse_module(
        "; ModuleID = 'x'\n"
        "source_filename = \"x.c\"\n"
        "target datalayout = \"e-m:e\"\n"
        "@g = global [4 x i32] zeroinitializer\n"
        "define dso_local i32 @f(i32 noundef %a) local_unnamed_addr #0 {\n"
        "  %p = alloca i32, align 4\n"
        "  store i32 %a, ptr %p, align 4\n"
        "  %v = load i32, ptr %p, align 4, !tbaa !5\n"
        "  ret i32 %v\n"
        "}\n"
        "attributes #0 = { nounwind }\n"
        "!5 = !{!\"int\"}\n");
    REQUIRE(m.functions.size() == 1);
    CHECK(m.functions[0].blocks[0].instructions.size() == 4);
}

TEST_CASE("switch spans multiple lines") {
    IrModule m = parse_module(
        "define void @f(i32 %v) {\n"
        "entry:\n"
        "  switch i32 %v, label %d [\n"
        "    i32 0, label %a\n"
        "    i32 1, label %b\n"
        "  ]\n"
        "a:\n  ret void\n"
        "b:\n  ret void\n"
        "d:\n  ret void\n"
        "}\n");
    const BasicBlock& entry = m.functions[0].blocks[0];
    CHECK(entry.successor_labels == std::vector<std::string>{"d", "a", "b"});
    CHECK(entry.instructions[0].operands.size() == 3);  // scrutinee + 2 case values
}

TEST_CASE("operand ids strip the sigil; globals are kept distinct") {
    IrModule m = parse_module(
        "define i32 @f(i32 %a) {\n"
        "  %x = add i32 %a, 1\n"
        "  %y = call i32 @f(i32 %x)\n"
        "  ret i32 %y\n"
        "}\n");
    const auto& ins = m.functions[0].blocks[0].instructions;
    CHECK(ins[0].operand_ids() == std::vector<std::string>{"a"});
    CHECK(ins[1].callee == "@f");
    CHECK(ins[1].operand_ids() == std::vector<std::string>{"x"});
}

TEST_CASE("parse-print round trip is structurally identical") {
    const char* text =
        "define i32 @kernel(ptr %a, i32 %n, float %scale) {\n"
        "entry:\n"
        "  %wide = sext i32 %n to i64\n"
        "  %fp = sitofp i32 %n to float\n"
        "  %scaled = fmul float %fp, %scale\n"
        "  %neg = fneg float %scaled\n"
        "  %lanes0 = insertelement <4 x float> undef, float %neg, i32 0\n"
        "  %lanes = shufflevector <4 x float> %lanes0, <4 x float> undef, <4 x i32> zeroinitializer\n"
        "  %slot = alloca [4 x float]\n"
        "  store <4 x float> %lanes, ptr %slot\n"
        "  br label %loop\n"
        "loop:\n"
        "  %i = phi i64 [ 0, %entry ], [ %i.next, %loop ]\n"
        "  %p = getelementptr [64 x i32], ptr %a, i64 0, i64 %i\n"
        "  %v = load i32, ptr %p\n"
        "  %lane = extractelement <4 x float> %lanes, i32 1\n"
        "  %sel = select i1 true, i32 %v, i32 0\n"
        "  %masked = and i32 %sel, 255\n"
        "  %i.next = add i64 %i, 1\n"
        "  %done = icmp eq i64 %i.next, %wide\n"
        "  br i1 %done, label %exit, label %loop\n"
        "exit:\n"
        "  %r = call i32 @helper(i32 %v, float %lane)\n"
        "  ret i32 %r\n"
        "}\n"
        "declare i32 @helper(i32, float)\n";
    IrModule first = parse_module(text);
    std::string printed = print_module(first);
    IrModule second = parse_module(printed);
    CHECK(structurally_equal(first, second));
    // printing is a fixed point after one round
    CHECK(print_module(second) == printed);
}

TEST_CASE("duplicate names are rejected") {
    CHECK_THROWS_AS(parse_module("define void @f() {\n  ret void\n}\ndefine void @f() {\n  ret void\n}\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_module("define void @f() {\nx:\n  br label %x\nx:\n  ret void\n}\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_module("define i32 @f() {\n  %x = add i32 1, 1\n  %x = add i32 2, 2\n"
                                 "  ret i32 %x\n}\n"),
                    ParseError);
}

TEST_CASE("the bundled corpus parses and round-trips") {
    for (const char* name : {"dotprod", "fir", "matmul", "histogram", "saxpy", "topmulti"}) {
        std::ifstream in(std::string(HLSQOR_TEST_DATA_DIR) + "/minicorpus/" + name + ".ll");
        REQUIRE(in.good());
        std::ostringstream buffer;
        buffer << in.rdbuf();
        IrModule first = parse_module(buffer.str());
        std::string printed = print_module(first);
        IrModule second = parse_module(printed);
        CHECK(structurally_equal(first, second));
        CHECK(print_module(second) == printed);
    }
}

TEST_CASE("calls must reference module functions") {
    CHECK_THROWS_AS(parse_module("define void @f() {\n  call void @ghost()\n  ret void\n}\n"),
                    ParseError);
    // forward reference to a later definition is fine
    CHECK_NOTHROW(parse_module("define void @f() {\n  call void @g()\n  ret void\n}\n"
                               "define void @g() {\n  ret void\n}\n"));
}
