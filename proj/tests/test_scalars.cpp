#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "smoothdual/errors.hpp"
#include "smoothdual/scalars.hpp"

using namespace smoothdual;

namespace {

QScalar s(Rational a, Rational t) { return {a, t}; }

Rational random_rational(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
    return {num(rng), den(rng)};
}

} // namespace

TEST_CASE("rational normalization and parsing")
{
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse(" 7 ") == Rational(7));
    CHECK(Rational(-1, 2).floor() == -1);
    CHECK(Rational(-1, 2).frac() == Rational(1, 2));
    CHECK(Rational(5, 3).str() == "5/3");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    const Rational big(std::int64_t{1} << 62);
    CHECK_THROWS_AS(big * big, ArithmeticOverflow);
}

TEST_CASE("mul")
{
    CHECK(mul(s({1, 2}, 0), s({1, 2}, 0)) == s(1, 0));
    CHECK(mul(s(0, {3, 4}), s(0, {1, 2})) == s(0, {1, 4}));
    CHECK(mul(s(1, {1, 3}), s(-1, {2, 3})) == s(0, 0));
}

TEST_CASE("unit_part")
{
    CHECK(unit_part(s({3, 2}, {1, 4})) == s(0, {1, 4}));
    CHECK(unit_part(s(0, {1, 4})) == s(0, {1, 4}));
    CHECK(unit_part(s(-2, 0)) == s(0, 0));
}

TEST_CASE("q_shift")
{
    CHECK(q_shift(s(0, 0), {1, 2}) == s({1, 2}, 0));
    CHECK(q_shift(s({-1, 2}, {1, 8}), {1, 2}) == s(0, {1, 8}));
    CHECK(q_shift(s(1, 0), -2) == s(-1, 0));
}

TEST_CASE("to_complex")
{
    CHECK(to_complex(s(1, 0), 9.0) == std::complex<double>(9.0, 0.0));
    CHECK(to_complex(s(0, {1, 2}), 4.0) == std::complex<double>(-1.0, 0.0));
    CHECK(to_complex(s({1, 2}, 0), 4.0) == std::complex<double>(2.0, 0.0));
    CHECK_THROWS_AS(to_complex(s(0, 0), 1.0), ValidationError);
    CHECK_THROWS_AS(to_complex(s(0, 0), 0.5), ValidationError);
}

TEST_CASE("turn is reduced into [0,1)")
{
    CHECK(s(0, {5, 4}).turn() == Rational(1, 4));
    CHECK(s(0, {-1, 4}).turn() == Rational(3, 4));
    CHECK(s(0, 1) == s(0, 0));
}

TEST_CASE("text form round trip")
{
    for (const auto &z : {s(0, 0), s(1, 0), s(-1, 0), s({1, 2}, 0), s({-3, 2}, {1, 4}), s(0, {2, 3})})
        CHECK(QScalar::parse(z.str()) == z);
    CHECK(QScalar::parse("q^(-1/2)") == s({-1, 2}, 0));
    CHECK_THROWS_AS(QScalar::parse("z"), ValidationError);
    CHECK_THROWS_AS(QScalar::parse("q^a"), ValidationError);
}

TEST_CASE("group laws and homomorphism properties on random inputs")
{
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 500; ++i) {
        const QScalar a(random_rational(rng), random_rational(rng));
        const QScalar b(random_rational(rng), random_rational(rng));
        const QScalar c(random_rational(rng), random_rational(rng));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, QScalar::one()) == a);
        CHECK(mul(a, inverse(a)) == QScalar::one());
        CHECK(mul(a, b) == mul(b, a));
        CHECK(unit_part(unit_part(a)) == unit_part(a));
        CHECK(unit_part(mul(a, b)) == mul(unit_part(a), unit_part(b)));
        CHECK(a.turn() >= Rational(0));
        CHECK(a.turn() < Rational(1));
        // ordering agrees with equality
        CHECK(((a <=> b) == 0) == (a == b));

        const double q = 3.0;
        const QScalar sa(Rational(a.q_exp().num() % 7, a.q_exp().den()), a.turn());
        const QScalar sb(Rational(b.q_exp().num() % 7, b.q_exp().den()), b.turn());
        const auto lhs = to_complex(mul(sa, sb), q);
        const auto rhs = to_complex(sa, q) * to_complex(sb, q);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
    }
}
