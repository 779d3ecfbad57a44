#include "galmann/errors.hpp"
#include "galmann/expression.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using galmann::Expression;
using galmann::ParseError;

namespace {

constexpr double kPi = 3.14159265358979323846;

double eval_text(const char* text, double s) { return Expression::parse(text).eval(s); }

std::size_t parse_offset(const char* text) {
    try {
        Expression::parse(text);
    } catch (const ParseError& e) {
        return e.offset;
    }
    FAIL("expected ParseError for: " << text);
    return static_cast<std::size_t>(-1);
}

} // namespace

TEST_CASE("precedence and associativity") {
    CHECK(eval_text("2+3*4", 0.0) == 14.0);
    CHECK(eval_text("(2+3)*4", 0.0) == 20.0);
    CHECK(eval_text("2-3-4", 0.0) == -5.0);
    CHECK(eval_text("24/4/2", 0.0) == 3.0);
    CHECK(eval_text("2^3^2", 0.0) == 512.0);
    CHECK(eval_text("-2^2", 0.0) == -4.0);
    CHECK(eval_text("2*-3", 0.0) == -6.0);
    CHECK(eval_text("-s^2", 3.0) == -9.0);
}

TEST_CASE("constants and the variable") {
    CHECK(eval_text("pi", 0.0) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(eval_text("e", 0.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(eval_text("2*pi", 0.0) == doctest::Approx(2 * kPi).epsilon(1e-15));
    CHECK(eval_text("s", 7.25) == 7.25);
    CHECK(eval_text("1e3", 0.0) == 1000.0);
    CHECK(eval_text("2.5e-2", 0.0) == 0.025);
    CHECK(eval_text(".5", 0.0) == 0.5);

    CHECK(Expression::parse("sin(s)").depends_on_s());
    CHECK_FALSE(Expression::parse("sin(pi/4)").depends_on_s());
}

TEST_CASE("function applications") {
    CHECK(eval_text("sin(pi/2)", 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eval_text("sqrt(s^2+1)", 2.0) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(eval_text("log(e)", 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eval_text("abs(-s)", 3.0) == 3.0);
    CHECK(eval_text("tanh(s)", 0.5) == doctest::Approx(std::tanh(0.5)).epsilon(1e-15));
}

TEST_CASE("whitespace is insignificant") {
    Expression spread = Expression::parse("  sin ( s )  +  1 ");
    Expression tight = Expression::parse("sin(s)+1");
    CHECK(spread.structurally_equal(tight));
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK(parse_offset("sin(s") == 5);
    CHECK(parse_offset("") == 0);
    CHECK(parse_offset("2 s") == 2);
    CHECK(parse_offset("s + ") == 4);
    CHECK_THROWS_AS(Expression::parse("sin()"), ParseError);
    CHECK_THROWS_AS(Expression::parse("x"), ParseError);
    CHECK_THROWS_AS(Expression::parse("foo(s)"), ParseError);
    CHECK_THROWS_AS(Expression::parse("pi(s)"), ParseError);
    CHECK_THROWS_AS(Expression::parse("sin"), ParseError);
    CHECK_THROWS_AS(Expression::parse("(s"), ParseError);
    CHECK_THROWS_AS(Expression::parse("s)"), ParseError);
    CHECK_THROWS_AS(Expression::parse("--s"), ParseError);
}

TEST_CASE("exponents must be constant") {
    CHECK_THROWS_AS(Expression::parse("s^s"), ParseError);
    CHECK_THROWS_AS(Expression::parse("s^(1+s)"), ParseError);
    CHECK_THROWS_AS(Expression::parse("2^sin(s)"), ParseError);
    CHECK_NOTHROW(Expression::parse("s^(2+1)"));
    CHECK_NOTHROW(Expression::parse("s^-2"));
    CHECK_NOTHROW(Expression::parse("s^(pi/2)"));
}

TEST_CASE("canonical text form is a parse fixed point") {
    const char* samples[] = {
        "sin(s)^2 + cos(s)^2",
        "-(s - 1) * (s + 2) / 3",
        "sqrt(1 + s^2)",
        "s * log(s) - s + 1 / (2 * s)",
        "2^3^2",
        "exp(-s) * sin(2 * pi * s)",
    };
    for (const char* text : samples) {
        CAPTURE(text);
        Expression first = Expression::parse(text);
        Expression second = Expression::parse(first.text());
        CHECK(first.structurally_equal(second));
        CHECK(first.text() == second.text());
    }
}

TEST_CASE("eval and eval_jet agree on the value coefficient") {
    const char* samples[] = {
        "sin(s) * exp(s / 2)",
        "sqrt(s + 3) / (s^2 + 1)",
        "tanh(s) - s * cos(s)",
    };
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> pick(-1.0, 1.0);
    for (const char* text : samples) {
        Expression f = Expression::parse(text);
        for (int trial = 0; trial < 20; ++trial) {
            double s = pick(rng);
            CAPTURE(text);
            CAPTURE(s);
            CHECK(f.eval_jet(s, 4).value() == doctest::Approx(f.eval(s)).epsilon(1e-15));
        }
    }
}

TEST_CASE("eval_jet reproduces known towers") {
    galmann::Jet half_square = Expression::parse("s^2/2").eval_jet(3.0, 4);
    CHECK(half_square.deriv(0) == 4.5);
    CHECK(half_square.deriv(1) == 3.0);
    CHECK(half_square.deriv(2) == 1.0);
    CHECK(half_square.deriv(3) == 0.0);
    CHECK(half_square.deriv(4) == 0.0);

    galmann::Jet sine = Expression::parse("sin(s)").eval_jet(0.0, 4);
    CHECK(sine.deriv(0) == 0.0);
    CHECK(sine.deriv(1) == 1.0);
    CHECK(sine.deriv(2) == 0.0);
    CHECK(sine.deriv(3) == -1.0);
    CHECK(sine.deriv(4) == 0.0);
}

TEST_CASE("domain failures name the offending subexpression") {
    Expression f = Expression::parse("log(s)");
    CHECK_THROWS_AS(f.eval(-1.0), galmann::EvalDomainError);
    try {
        f.eval(-1.0);
    } catch (const galmann::EvalDomainError& e) {
        CHECK(e.node == "log(s)");
        CHECK(e.s == -1.0);
    }

    Expression nested = Expression::parse("exp(sqrt(s - 2))");
    try {
        nested.eval_jet(1.0, 2);
        FAIL("expected EvalDomainError");
    } catch (const galmann::EvalDomainError& e) {
        CHECK(e.node == "sqrt(s-2)");
    }

    CHECK_THROWS_AS(Expression::parse("1/s").eval(0.0), galmann::EvalDomainError);
}
