#include <gtest/gtest.h>

#include <qseries/expr.hpp>
#include <qseries/identities.hpp>

using namespace qseries;

TEST(Parse, ChanRightHandSide)
{
    const auto ast = parse_expr("3 * E(3,3)^3 * E(6,6)^3 / (E(1,1)^4 * E(2,2)^4)");
    ASSERT_EQ(ast.kind, node_kind::div);
    const auto &num = ast.children[0];
    ASSERT_EQ(num.kind, node_kind::mul);
    EXPECT_EQ(num.children[1].kind, node_kind::pow);
    EXPECT_EQ(num.children[1].a, 3);
    EXPECT_EQ(num.children[1].children[0].kind, node_kind::pochhammer);
    EXPECT_EQ(num.children[1].children[0].a, 6);
    const auto &den = ast.children[1];
    ASSERT_EQ(den.kind, node_kind::paren);
    EXPECT_EQ(den.children[0].kind, node_kind::mul);
}

TEST(Parse, QPower)
{
    const auto q2 = parse_expr("q^2");
    EXPECT_EQ(q2.kind, node_kind::qpower);
    EXPECT_EQ(q2.a, 2);
    EXPECT_EQ(parse_expr("q").a, 1);
}

TEST(Parse, Precedence)
{
    // -x^2 is -(x^2); binaries associate to the left.
    const auto neg = parse_expr("-eta(1)^2");
    ASSERT_EQ(neg.kind, node_kind::neg);
    EXPECT_EQ(neg.children[0].kind, node_kind::pow);

    const auto sub = parse_expr("1 - 2 - 3");
    ASSERT_EQ(sub.kind, node_kind::sub);
    EXPECT_EQ(sub.children[0].kind, node_kind::sub);

    const auto mixed = parse_expr("1 + 2 * 3");
    ASSERT_EQ(mixed.kind, node_kind::add);
    EXPECT_EQ(mixed.children[1].kind, node_kind::mul);

    EXPECT_EQ(parse_expr("E(1,1)^-4").a, -4);
}

TEST(Parse, Errors)
{
    try {
        parse_expr("E(1,1");
        FAIL() << "expected a syntax error";
    } catch (const syntax_error &e) {
        EXPECT_EQ(e.offset(), 6u);
        EXPECT_EQ(e.expected(), "')'");
    }
    auto offset_of = [](const char *text) -> std::size_t {
        try {
            parse_expr(text);
        } catch (const syntax_error &e) {
            return e.offset();
        }
        return 0;
    };
    EXPECT_EQ(offset_of("foo(1)"), 1u);
    EXPECT_EQ(offset_of("E(0,1)"), 3u);
    EXPECT_EQ(offset_of("1 +"), 4u);
    EXPECT_EQ(offset_of("q^-1"), 3u);
    EXPECT_EQ(offset_of("phi(1) phi(2)"), 8u);
    EXPECT_EQ(offset_of("(1"), 3u);
    EXPECT_EQ(offset_of("E(1)"), 4u);
    EXPECT_EQ(offset_of("2 ^ x"), 5u);
}

TEST(Eval, Basics)
{
    EXPECT_EQ(eval_expr("1", 5), series::one(5));
    EXPECT_EQ(eval_expr("q^3 - q", 4)[1], -1);
    EXPECT_EQ(eval_expr("1/(E(1,1)*E(2,2))", 8)[8], 54);
    EXPECT_EQ(eval_expr("phi(1)*psi(1)", 150), eval_expr("E(1,1)*E(2,2)", 150));
    EXPECT_EQ(eval_expr("eta(3)", 60), eval_expr("E(3,3)", 60));
    EXPECT_EQ(eval_expr("X(1) * P(1)", 90), eval_expr("eta(3) * eta(6)", 90));
    EXPECT_EQ(eval_expr("-(1 + q)", 3), negate(eval_expr("1 + q", 3)));
}

TEST(Eval, NonUnitReportsSpan)
{
    try {
        eval_expr("1 + 1 / (2 * eta(1))", 5);
        FAIL() << "expected an evaluation error";
    } catch (const eval_error &e) {
        EXPECT_EQ(e.span().offset, 8u);
        EXPECT_EQ(e.span().length, 12u);
    }
    EXPECT_THROW(eval_expr("(q)^-1", 5), eval_error);
}

TEST(Render, RoundTripOnRegistryExpressions)
{
    for (const auto &c : registry()) {
        if (c.rhs_expr.empty()) {
            continue;
        }
        const auto ast = parse_expr(c.rhs_expr);
        EXPECT_EQ(parse_expr(render(ast)), ast) << c.id;
    }
    for (const char *text : {"-q^2 * (1 - eta(3))^-2 / phi(9)", "--1", "E(2,6) * E(4,6) - X(3) + P(3)"}) {
        const auto ast = parse_expr(text);
        EXPECT_EQ(parse_expr(render(ast)), ast) << text;
    }
}

TEST(Render, RegistryExpressionsEvaluateToTheRightHandSide)
{
    for (const auto &c : registry()) {
        if (c.rhs_expr.empty()) {
            continue;
        }
        EXPECT_EQ(eval_expr(c.rhs_expr, 60), c.build_rhs(60)) << c.id;
    }
}
