#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "smoothdual/errors.hpp"
#include "smoothdual/parameters.hpp"
#include "smoothdual/retract.hpp"

using namespace smoothdual;

namespace {

const WeilLabel triv = WeilLabel::trivial();

InertialClass cls(const WeilLabel &rho, Rational j) { return InertialClass(rho, j); }

LParameter param(std::vector<Summand> s) { return LParameter(std::move(s)); }

QScalar qp(Rational h) { return QScalar::q_power(h); }

} // namespace

TEST_CASE("dimension")
{
    CHECK(dimension(param({{cls(triv, 1), QScalar::one()}})) == 3);
    // psi_1 (x) 1 + psi_2 (x) spin(1/2) lives in GL(3)
    CHECK(dimension(param({{cls(triv, 0), qp(1)}, {cls(triv, {1, 2}), qp({-1, 2})}})) == 3);
    CHECK(dimension(param({{cls(WeilLabel{"rho2", 2, true}, {1, 2}), QScalar::one()}})) == 4);
}

TEST_CASE("orbit_of and orbit_shape")
{
    const auto o1 = orbit_of(param({{cls(triv, 0), qp(1)}, {cls(triv, 0), QScalar({-1}, {1, 3})}}));
    REQUIRE(o1.classes().size() == 1);
    CHECK(o1.classes()[0].second == 2);
    CHECK(orbit_shape(o1) == OrbitShape{1, 1});

    const auto o2 = orbit_of(param({{cls(triv, 0), qp(1)}, {cls(triv, {1, 2}), qp({-1, 2})}}));
    CHECK(orbit_shape(o2) == OrbitShape{0, 2});

    const auto o3 = orbit_of(param({{cls(WeilLabel{"r", 3, true}, 0), qp(2)}}));
    CHECK(orbit_shape(o3) == OrbitShape{0, 1});

    CHECK(orbit_shape(OrbitDescriptor({{cls(triv, 0), 3}})) == OrbitShape{2, 1});
    CHECK(orbit_shape(OrbitDescriptor({{cls(triv, 0), 1}, {cls(triv, 1), 1}})) == OrbitShape{0, 2});
}

TEST_CASE("orbit descriptor equality ignores class order")
{
    const OrbitDescriptor a({{cls(triv, 0), 1}, {cls(triv, 1), 2}});
    const OrbitDescriptor b({{cls(triv, 1), 2}, {cls(triv, 0), 1}});
    CHECK(a == b);
    CHECK_THROWS_AS(OrbitDescriptor({{cls(triv, 0), 1}, {cls(triv, 0), 2}}), ValidationError);
}

TEST_CASE("is_tempered")
{
    CHECK(is_tempered(param({{cls(triv, 0), QScalar(0, {1, 3})}, {cls(triv, 1), QScalar(0, {1, 2})}})));
    CHECK_FALSE(is_tempered(param({{cls(triv, 0), qp({1, 2})}})));
    CHECK_FALSE(is_tempered(param({{cls(WeilLabel{"nu", 1, false}, 0), QScalar::one()}})));
}

TEST_CASE("is_supercuspidal")
{
    CHECK(is_supercuspidal(param({{cls(WeilLabel{"rho5", 5, true}, 0), QScalar::one()}})));
    CHECK_FALSE(is_supercuspidal(param({{cls(triv, 1), QScalar::one()}})));
    CHECK_FALSE(is_supercuspidal(param({{cls(triv, 0), QScalar::one()}, {cls(triv, 0), QScalar::one()}})));
}

TEST_CASE("steinberg_parameter")
{
    const auto st3 = steinberg_parameter(3);
    REQUIRE(st3.summands().size() == 1);
    CHECK(st3.summands()[0].cls == cls(triv, 1));
    CHECK(st3.summands()[0].twist == QScalar::one());
    CHECK(steinberg_parameter(1).summands()[0].cls == cls(triv, 0));
    CHECK(steinberg_parameter(2).summands()[0].cls == cls(triv, {1, 2}));
    CHECK(dimension(steinberg_parameter(7)) == 7);
    CHECK_THROWS_AS(steinberg_parameter(0), ValidationError);
}

TEST_CASE("is_discrete_series")
{
    CHECK(is_discrete_series(param({{cls(triv, {1, 2}), QScalar(0, {1, 3})}})));
    CHECK_FALSE(is_discrete_series(param({{cls(triv, 0), QScalar::one()}, {cls(triv, 0), QScalar::one()}})));
    CHECK_FALSE(is_discrete_series(param({{cls(triv, {1, 2}), qp({1, 2})}})));
}

TEST_CASE("validation")
{
    CHECK_THROWS_AS(InertialClass(triv, {1, 3}), ValidationError);
    CHECK_THROWS_AS(InertialClass(triv, -1), ValidationError);
    CHECK_THROWS_AS(InertialClass(WeilLabel{"", 1, true}, 0), ValidationError);
    CHECK_THROWS_AS(InertialClass(WeilLabel{"x", 0, true}, 0), ValidationError);
    CHECK_THROWS_AS(LParameter({}), ValidationError);
    CHECK_THROWS_AS(param({{cls(WeilLabel{"x", 1, true}, 0), QScalar::one()},
                           {cls(WeilLabel{"x", 2, true}, 0), QScalar::one()}}),
                    ValidationError);
}

TEST_CASE("orbit and dimension are invariant under re-twisting and reordering")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> pick(0, 3), num(-9, 9), den(1, 6);
    const std::vector<InertialClass> pool{cls(triv, 0), cls(triv, {1, 2}), cls(WeilLabel{"r2", 2, true}, 0),
                                          cls(WeilLabel{"r3", 3, false}, 1)};
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Summand> summands;
        const int m = 1 + trial % 5;
        for (int i = 0; i < m; ++i)
            summands.push_back({pool[pick(rng)], QScalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)))});
        const LParameter phi(summands);

        auto retwisted = summands;
        for (auto &s : retwisted) s.twist = QScalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        std::shuffle(retwisted.begin(), retwisted.end(), rng);
        const LParameter psi(retwisted);

        CHECK(orbit_of(phi) == orbit_of(psi));
        CHECK(dimension(phi) == dimension(psi));
        const auto shape = orbit_shape(orbit_of(phi));
        CHECK(shape.l + shape.k == m);

        if (is_tempered(phi)) CHECK(temper_parameter(phi) == phi);
        bool all_unitary = true;
        for (const auto &s : summands) all_unitary = all_unitary && s.cls.rho().unitary_det;
        CHECK(is_tempered(temper_parameter(phi)) == all_unitary);
    }
}
