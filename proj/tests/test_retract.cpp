#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "smoothdual/errors.hpp"
#include "smoothdual/retract.hpp"

using namespace smoothdual;

namespace {

const InertialClass one_class(WeilLabel::trivial(), 0);
const InertialClass half_class(WeilLabel::trivial(), Rational(1, 2));

QScalar qp(Rational h) { return QScalar::q_power(h); }

} // namespace

TEST_CASE("temper_parameter")
{
    const LParameter phi({{one_class, QScalar({3, 2}, {1, 4})}});
    CHECK(temper_parameter(phi).summands()[0].twist == QScalar(0, {1, 4}));

    const LParameter tempered({{one_class, QScalar(0, {1, 3})}, {half_class, QScalar(0, {1, 2})}});
    CHECK(temper_parameter(tempered) == tempered);

    // q (x) 1 + q^{-1/2} (x) spin(1/2)
    const LParameter gl3({{one_class, qp(1)}, {half_class, qp({-1, 2})}});
    const LParameter t = temper_parameter(gl3);
    for (const auto &s : t.summands()) CHECK(s.twist == QScalar::one());
    CHECK(is_tempered(t));
}

TEST_CASE("homotopy")
{
    const LParameter phi({{one_class, QScalar(1, {1, 8})}, {half_class, QScalar({-3, 2}, 0)}});
    CHECK(homotopy(phi, 0) == phi);
    CHECK(homotopy(phi, 1) == temper_parameter(phi));
    const LParameter half = homotopy(LParameter({{one_class, QScalar(1, {1, 8})}}), Rational(1, 2));
    CHECK(half.summands()[0].twist == QScalar({1, 2}, {1, 8}));
    CHECK(orbit_of(homotopy(phi, Rational(2, 5))) == orbit_of(phi));
    CHECK_THROWS_AS(homotopy(phi, Rational(3, 2)), ValidationError);
    CHECK_THROWS_AS(homotopy(phi, Rational(-1, 9)), ValidationError);
}

TEST_CASE("temper_point")
{
    const StratumPoint p(Stratum(Multipartition{{1, 1}}), {qp(1), QScalar({-1, 2}, {1, 3})});
    CHECK(temper_point(p) == StratumPoint(Stratum(Multipartition{{1, 1}}), {QScalar::one(), QScalar(0, {1, 3})}));

    const StratumPoint unit(Stratum(Multipartition{{2, 1}}), {QScalar(0, {1, 5}), QScalar(0, {2, 5})});
    CHECK(temper_point(unit) == unit);

    // 3-cycle point z = q^2: {q^3, q^2, q} before, {q, 1, q^-1} after
    const StratumPoint cyc(Stratum(Multipartition{{3}}), {qp(2)});
    CHECK(project(cyc) == SymPoint({{qp(3), qp(2), qp(1)}}));
    CHECK(project(temper_point(cyc)) == SymPoint({{qp(1), QScalar::one(), qp(-1)}}));
    CHECK(temper_point(temper_point(cyc)) == temper_point(cyc));
    CHECK(homotopy(cyc, 1) == temper_point(cyc));
    CHECK(homotopy(cyc, 0) == cyc);
}

TEST_CASE("compact_orbit")
{
    CHECK(compact_orbit(OrbitDescriptor({{InertialClass(WeilLabel{"rho", 3, true}, 0), 1}})) == std::vector<int>{1});
    CHECK(compact_orbit(OrbitDescriptor({{one_class, 2}})) == std::vector<int>{2});
    CHECK(compact_orbit(OrbitDescriptor({{one_class, 1}, {half_class, 1}})) == std::vector<int>{1, 1});
    CHECK_THROWS_AS(compact_orbit(OrbitDescriptor({{InertialClass(WeilLabel{"nu", 1, false}, 0), 1}})),
                    ValidationError);
}

TEST_CASE("retraction fixes exactly the unitary points")
{
    for (int a = -4; a <= 4; ++a)
        for (int t = 0; t < 4; ++t) {
            const StratumPoint p(Stratum(Multipartition{{2}}), {QScalar(Rational(a, 2), Rational(t, 4))});
            CHECK((temper_point(p) == p) == (a == 0));
        }
}
