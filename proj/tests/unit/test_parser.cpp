#include <doctest.h>

#include "nameflow/parser.hpp"

#include "helpers.hpp"

using namespace nameflow;

namespace testutil {

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.literal != b.literal || a.name != b.name || a.op != b.op)
        return false;
    if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
    if (a.lhs && !expr_equal(*a.lhs, *b.lhs)) return false;
    if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
    if (a.rhs && !expr_equal(*a.rhs, *b.rhs)) return false;
    if (a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!expr_equal(*a.args[i], *b.args[i])) return false;
    return true;
}

bool stmt_equal(const Stmt& a, const Stmt& b) {
    if (a.kind != b.kind) return false;
    if (a.body.size() != b.body.size()) return false;
    for (std::size_t i = 0; i < a.body.size(); ++i)
        if (!stmt_equal(*a.body[i], *b.body[i])) return false;
    auto opt_expr = [](const ExprPtr& x, const ExprPtr& y) {
        if (static_cast<bool>(x) != static_cast<bool>(y)) return false;
        return !x || expr_equal(*x, *y);
    };
    auto opt_stmt = [](const std::unique_ptr<Stmt>& x, const std::unique_ptr<Stmt>& y) {
        if (static_cast<bool>(x) != static_cast<bool>(y)) return false;
        return !x || stmt_equal(*x, *y);
    };
    if (static_cast<bool>(a.decl) != static_cast<bool>(b.decl)) return false;
    if (a.decl && (a.decl->name != b.decl->name || a.decl->declared_type != b.decl->declared_type))
        return false;
    return opt_expr(a.target, b.target) && opt_expr(a.value, b.value) &&
           opt_expr(a.cond, b.cond) && opt_stmt(a.then_branch, b.then_branch) &&
           opt_stmt(a.else_branch, b.else_branch) && opt_stmt(a.init, b.init) &&
           opt_stmt(a.update, b.update) && opt_stmt(a.loop_body, b.loop_body);
}

bool unit_equal(const SourceUnit& a, const SourceUnit& b) {
    if (a.types.size() != b.types.size()) return false;
    for (std::size_t i = 0; i < a.types.size(); ++i) {
        const TypeDecl& x = *a.types[i];
        const TypeDecl& y = *b.types[i];
        if (x.name != y.name || x.superclass != y.superclass) return false;
        if (x.fields.size() != y.fields.size() || x.methods.size() != y.methods.size())
            return false;
        for (std::size_t j = 0; j < x.fields.size(); ++j)
            if (x.fields[j]->name != y.fields[j]->name ||
                x.fields[j]->declared_type != y.fields[j]->declared_type)
                return false;
        for (std::size_t j = 0; j < x.methods.size(); ++j) {
            const MethodDecl& m = *x.methods[j];
            const MethodDecl& n = *y.methods[j];
            if (m.name != n.name || m.return_type != n.return_type || m.arity() != n.arity())
                return false;
            for (int k = 0; k < m.arity(); ++k)
                if (m.params[static_cast<std::size_t>(k)]->name !=
                    n.params[static_cast<std::size_t>(k)]->name)
                    return false;
            if (static_cast<bool>(m.body) != static_cast<bool>(n.body)) return false;
            if (m.body && !stmt_equal(*m.body, *n.body)) return false;
        }
    }
    return true;
}

} // namespace testutil

using testutil::read_fixture;

TEST_CASE("fig3 function parses with 3 params, 2 locals, 3 statements") {
    auto unit = parse_source(read_fixture("fig3.java"), "fig3.java");
    REQUIRE(unit->types.size() == 1);
    REQUIRE(unit->types[0]->methods.size() == 1);
    const MethodDecl& f = *unit->types[0]->methods[0];
    CHECK(f.arity() == 3);
    CHECK(f.locals.size() == 2);
    REQUIRE(f.body);
    CHECK(f.body->body.size() == 3);
}

TEST_CASE("empty input yields zero types") {
    auto unit = parse_source("", "empty.java");
    CHECK(unit->types.empty());
}

TEST_CASE("fig9 listing parses to one implicit type with 1 field and 4 methods") {
    auto unit = parse_source(read_fixture("fig9.java"), "fig9.java");
    REQUIRE(unit->types.size() == 1);
    CHECK(unit->types[0]->implicit);
    CHECK(unit->types[0]->fields.size() == 1);
    CHECK(unit->types[0]->fields[0]->name == "fp");
    REQUIRE(unit->types[0]->methods.size() == 4);
    CHECK(unit->types[0]->methods[0]->name == "getName");
    CHECK(unit->types[0]->methods[1]->name == "show");
    CHECK(unit->types[0]->methods[2]->name == "getField");
    CHECK(unit->types[0]->methods[3]->name == "getColumn");
}

TEST_CASE("parse determinism: identical input yields structurally identical ASTs") {
    for (const char* fix : {"fig3.java", "fig4.java", "fig5.java", "fig7.java", "fig8.java",
                            "fig9.java"}) {
        CAPTURE(fix);
        std::string text = read_fixture(fix);
        auto a = parse_source(text, fix);
        auto b = parse_source(text, fix);
        CHECK(testutil::unit_equal(*a, *b));
    }
}

TEST_CASE("loc soundness: byte spans re-lex to the node's own tokens") {
    std::string text = read_fixture("fig9.java");
    auto toks = lexer::tokenize(text, "fig9.java");
    for (const auto& t : toks) {
        if (t.kind == lexer::TokKind::End) continue;
        CHECK(text.substr(t.loc.span_begin, t.loc.span_end - t.loc.span_begin) == t.text);
    }
}

TEST_CASE("syntax errors carry the offending location") {
    try {
        parse_source("class A { void f() { int x = ; } }", "bad.java");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.loc().line == 1);
        CHECK(e.loc().col > 0);
    }
}

TEST_CASE("out-of-subset constructs are rejected by name") {
    auto expect_unsupported = [](const char* src, const char* what) {
        try {
            parse_source(src, "u.java");
            FAIL_CHECK("expected UnsupportedConstruct for ", what);
        } catch (const UnsupportedConstruct& e) {
            CHECK(e.construct() == what);
        }
    };
    expect_unsupported("class A { void f() { int[] a; a[0] = 1; } }", "array-store");
    expect_unsupported("class A { void f(int i) { i++; } }", "increment-operator");
    expect_unsupported("class A { void f() { int x = 1.5; } }", "floating-point-literal");
    expect_unsupported("class A { void f() { int a, b; } }", "multiple-declarators");
    expect_unsupported("class A { A() {} }", "constructor");
}

TEST_CASE("compound assignment desugars to binary op plus assignment") {
    auto unit = parse_source("class A { void f(int balance, int income) { balance += income; } }",
                             "c.java");
    const Stmt& body = *unit->types[0]->methods[0]->body;
    REQUIRE(body.body.size() == 1);
    const Stmt& s = *body.body[0];
    CHECK(s.kind == StmtKind::Assign);
    REQUIRE(s.value);
    CHECK(s.value->kind == ExprKind::Binary);
    CHECK(s.value->op == "+");
    CHECK(s.value->lhs->name == "balance");
    CHECK(s.value->rhs->name == "income");
}

TEST_CASE("array index expressions parse") {
    auto unit = parse_source("class A { int f(int[] t, int i) { return t[i]; } }", "ix.java");
    const Stmt& ret = *unit->types[0]->methods[0]->body->body[0];
    REQUIRE(ret.value);
    CHECK(ret.value->kind == ExprKind::Index);
    CHECK(unit->types[0]->methods[0]->params[0]->declared_type == "int[]");
}
