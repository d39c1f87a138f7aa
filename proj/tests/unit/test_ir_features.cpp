#include <doctest.h>

#include "hlsqor/errors.hpp"
#include "hlsqor/ir_features.hpp"
#include "hlsqor/ir_parser.hpp"

using namespace hlsqor;

TEST_CASE("single block counting") {
    IrModule m = parse_module(
        "define i32 @f(i32 %a) {\n"
        "  %x = add i32 %a, 1\n"
        "  %y = add i32 %x, 2\n"
        "  ret i32 %y\n"
        "}\n");
    IrFeatures f = ir_features(m.functions[0]);
    CHECK(f.instructions.total == 3);
    CHECK(f.instructions.max_per_bb == 3);
    CHECK(f.instructions.avg_per_bb == 3);
    CHECK(f.families[0].total == 2);  // math
    CHECK(f.block_count == 1);
    CHECK(f.ret_count == 1);
}

TEST_CASE("two blocks with math counts 1 and 3") {
    IrModule m = parse_module(
        "define i32 @f(i32 %a) {\n"
        "entry:\n"
        "  %x = add i32 %a, 1\n"
        "  br label %next\n"
        "next:\n"
        "  %y = add i32 %x, 1\n"
        "  %z = mul i32 %y, 2\n"
        "  %w = sub i32 %z, 3\n"
        "  ret i32 %w\n"
        "}\n");
    IrFeatures f = ir_features(m.functions[0]);
    CHECK(f.families[0].max_per_bb == 3);
    CHECK(f.families[0].avg_per_bb == 2);
    CHECK(f.families[0].total == 4);
}

TEST_CASE("ret-void-only function") {
    IrModule m = parse_module("define void @f() {\n  ret void\n}\n");
    IrFeatures f = ir_features(m.functions[0]);
    for (const PerBbStats& family : f.families) CHECK(family.total == 0);
    CHECK(f.instructions.total == 1);
    CHECK(f.ret_count == 1);
}

TEST_CASE("EmptyFunction for declarations") {
    IrModule m = parse_module("declare void @f()\n");
    CHECK_THROWS_AS(ir_features(m.functions[0]), EmptyFunction);
}

TEST_CASE("exactly 44 slots, names fixed") {
    CHECK(IrFeatures::kCount == 44);
    CHECK(IrFeatures::names().size() == 44);
    CHECK(IrFeatures::names()[0] == "ir_math_max_per_bb");
    CHECK(IrFeatures::names()[43] == "ir_avg_operands_per_instruction");
    IrModule m = parse_module("define void @f() {\n  ret void\n}\n");
    CHECK(ir_features(m.functions[0]).as_array().size() == 44);
}

TEST_CASE("counted families plus control and cast account for every instruction") {
    const char* text =
        "define i64 @f(ptr %p, i32 %a, i1 %c) {\n"
        "entry:\n"
        "  %v = load i32, ptr %p\n"
        "  %w = sext i32 %v to i64\n"
        "  %t = trunc i64 %w to i8\n"
        "  %z = zext i8 %t to i64\n"
        "  %m = mul i64 %w, %z\n"
        "  %l = and i64 %m, 255\n"
        "  br i1 %c, label %a, label %b\n"
        "a:\n"
        "  %q = call i64 @g(i64 %l)\n"
        "  br label %b\n"
        "b:\n"
        "  %r = phi i64 [ %l, %entry ], [ %q, %a ]\n"
        "  ret i64 %r\n"
        "}\n"
        "declare i64 @g(i64)\n";
    IrModule m = parse_module(text);
    const IrFunction& fn = m.functions[0];
    IrFeatures f = ir_features(fn);

    double counted = 0;
    for (const PerBbStats& family : f.families) counted += family.total;
    int control = 0;
    int cast = 0;
    for (const BasicBlock& block : fn.blocks) {
        for (const IrInstruction& in : block.instructions) {
            if (in.category == OpCategory::Control) ++control;
            if (in.category == OpCategory::Cast) ++cast;
        }
    }
    CHECK(counted + control + cast == f.instructions.total);
    CHECK(f.widest_int_width == 64);
    CHECK(f.global_access_count == 1);  // callee @g
}

TEST_CASE("float and double tallies track result element types") {
    IrModule m = parse_module(
        "define void @f(float %x, double %d, ptr %p) {\n"
        "  %a = fadd float %x, 1.0\n"
        "  %v0 = insertelement <4 x float> undef, float %a, i32 0\n"
        "  %b = fmul double %d, 2.0\n"
        "  store double %b, ptr %p\n"
        "  ret void\n"
        "}\n");
    IrFeatures f = ir_features(m.functions[0]);
    CHECK(f.float_op_total == 2);   // fadd float + insertelement <4 x float>
    CHECK(f.double_op_total == 1);  // fmul double
}
