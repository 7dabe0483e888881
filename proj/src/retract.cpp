#include "smoothdual/retract.hpp"

#include "smoothdual/errors.hpp"

namespace smoothdual {

namespace {

void check_time(const Rational &t)
{
    if (t < Rational(0) || t > Rational(1)) throw ValidationError("homotopy time must lie in [0, 1], got " + t.str());
}

QScalar contract(const QScalar &z, const Rational &t) { return {z.q_exp() * (Rational(1) - t), z.turn()}; }

} // namespace

LParameter temper_parameter(const LParameter &phi)
{
    std::vector<Summand> out = phi.summands();
    for (auto &s : out) s.twist = unit_part(s.twist);
    return LParameter(std::move(out));
}

LParameter homotopy(const LParameter &phi, const Rational &t)
{
    check_time(t);
    std::vector<Summand> out = phi.summands();
    for (auto &s : out) s.twist = contract(s.twist, t);
    return LParameter(std::move(out));
}

StratumPoint temper_point(const StratumPoint &p)
{
    std::vector<QScalar> coords;
    coords.reserve(p.coords().size());
    for (const auto &z : p.coords()) coords.push_back(unit_part(z));
    return StratumPoint(p.stratum(), std::move(coords));
}

StratumPoint homotopy(const StratumPoint &p, const Rational &t)
{
    check_time(t);
    std::vector<QScalar> coords;
    coords.reserve(p.coords().size());
    for (const auto &z : p.coords()) coords.push_back(contract(z, t));
    return StratumPoint(p.stratum(), std::move(coords));
}

std::vector<int> compact_orbit(const OrbitDescriptor &o)
{
    for (const auto &[cls, m] : o.classes())
        if (!cls.rho().unitary_det)
            throw ValidationError("compact orbit needs unitary determinants; \"" + cls.rho().id + "\" is not");
    return o.multiplicities();
}

} // namespace smoothdual
