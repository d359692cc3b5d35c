#include "symcoh/expr.hpp"
#include "symcoh/format.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace symcoh;

namespace {

std::string parse_error(const std::string& text) {
    try {
        parse_expression(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

std::string random_expr(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 8 : 3), small(1, 5);
    switch (pick(rng)) {
        case 0: return std::to_string(small(rng));
        case 1: return "eta@" + std::to_string(small(rng) % 2 + 1);
        case 2: return "xi(" + std::to_string(small(rng)) + ")@2";
        case 3: return "sigma(" + std::to_string(small(rng)) + ")";
        case 4: return random_expr(rng, depth - 1) + " + " + random_expr(rng, depth - 1);
        case 5: return random_expr(rng, depth - 1) + " - " + random_expr(rng, depth - 1);
        case 6: return "(" + random_expr(rng, depth - 1) + ")*" + random_expr(rng, depth - 1);
        case 7: return "-(" + random_expr(rng, depth - 1) + ")^" + std::to_string(small(rng) % 3);
        default: return "delta(1, 2) / " + std::to_string(small(rng));
    }
}

}  // namespace

TEST(Parse, Precedence) {
    auto e = parse_expression("1 + 2*theta^2");
    EXPECT_EQ(e->kind, Expr::Kind::Add);
    EXPECT_EQ(e->args[1]->kind, Expr::Kind::Mul);
    EXPECT_EQ(e->args[1]->args[1]->kind, Expr::Kind::Pow);
    EXPECT_EQ(print_expression(*parse_expression("eta - (theta - eta)")),
              "eta - (theta - eta)");
    EXPECT_EQ(print_expression(*parse_expression("(eta - theta) - eta")), "eta - theta - eta");
    EXPECT_EQ(print_expression(*parse_expression("xi'(3)@2 * sigma(1)")), "xi'(3)@2*sigma(1)");
}

TEST(Parse, Errors) {
    EXPECT_EQ(parse_error("xi(1)*"), "line 1, column 6: missing operand after '*'");
    EXPECT_NE(parse_error("foo(eta)").find("unknown identifier 'foo'"), std::string::npos);
    EXPECT_NE(parse_error("secant(1, 2)").find("arity mismatch: secant takes 4 arguments, got 2"), std::string::npos);
    EXPECT_NE(parse_error("1.5*eta").find("floating-point"), std::string::npos);
    EXPECT_NE(parse_error("eta\n + .5").find("line 2, column 4"), std::string::npos);
    EXPECT_NE(parse_error("(eta").find("expected ')'"), std::string::npos);
    EXPECT_NE(parse_error("").find("empty expression"), std::string::npos);
    EXPECT_NE(parse_error("eta@9").find("factor index"), std::string::npos);
}

TEST(Parse, RandomRoundTrip) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        std::string s = random_expr(rng, 4);
        auto a = parse_expression(s);
        std::string printed = print_expression(*a);
        auto b = parse_expression(printed);
        EXPECT_TRUE(same_tree(*a, *b)) << s << " -> " << printed;
        EXPECT_EQ(print_expression(*b), printed);
    }
}

TEST(Evaluate, Examples) {
    SpaceSpec s = sym_space(5, 4);
    EXPECT_EQ(value_to_string(evaluate("integrate(theta^4)", s)), "120");
    EXPECT_EQ(to_pretty_string(evaluate_class("theta^3", sym_space(5, 3))), "60*eta^3");
    EXPECT_EQ(evaluate_class("secant(6,5,2,3)", sym_space(5, 3)), evaluate_class("theta - eta", sym_space(5, 3)));
    EXPECT_EQ(evaluate_class("theta/2 + theta/2", s), evaluate_class("theta", s));
    EXPECT_EQ(evaluate_class("-(-eta)", s), evaluate_class("eta", s));
    EXPECT_EQ(evaluate_class("3", s), CohClass::scalar(s, 3));
}

TEST(Evaluate, Errors) {
    SpaceSpec s = sym_space(5, 4);
    try {
        evaluate("chern(5, 3)", s);
        FAIL() << "expected an error";
    } catch (const EvalError& e) {
        EXPECT_NE(std::string(e.what()).find("chern space mismatch"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("sym(5,3)"), std::string::npos);
    }
    EXPECT_THROW(evaluate("eta/0", s), EvalError);
    EXPECT_THROW(evaluate("xi(11)", s), EvalError);
    EXPECT_THROW(evaluate("eta", parse_space("sym(5,3) x sym(5,4)")), EvalError);
    EXPECT_THROW(evaluate("eta@3", parse_space("sym(5,3) x sym(5,4)")), EvalError);
}

TEST(Evaluate, Deterministic) {
    SpaceSpec s = parse_space("sym(5,3) x sym(5,4)");
    std::string text = "(theta@1 - eta@2)^3*xi(2)@1*xi(7)@2 + 3/4*sigma(1)@2";
    std::string first = to_raw_string(evaluate_class(text, s));
    for (int i = 0; i < 3; ++i) EXPECT_EQ(to_raw_string(evaluate_class(text, s)), first);
}
