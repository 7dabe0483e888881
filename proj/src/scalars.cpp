#include "smoothdual/scalars.hpp"

#include <cmath>
#include <numbers>

#include "smoothdual/errors.hpp"

namespace smoothdual {

QScalar::QScalar(Rational q_exp, Rational turn) : q_exp_(q_exp), turn_(turn.frac()) {}

std::string QScalar::str() const
{
    std::string out;
    if (q_exp_.is_zero())
        out = turn_.is_zero() ? "1" : "";
    else if (q_exp_ == Rational(1))
        out = "q";
    else
        out = "q^" + q_exp_.str();
    if (!turn_.is_zero()) out += "@" + turn_.str();
    return out;
}

QScalar QScalar::parse(const std::string &text)
{
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    if (s.empty()) throw ValidationError("empty scalar");

    Rational turn(0);
    if (auto at = s.find('@'); at != std::string::npos) {
        try {
            turn = Rational::parse(s.substr(at + 1));
        } catch (const std::exception &) {
            throw ValidationError("bad turn in scalar \"" + text + "\"");
        }
        s.erase(at);
        if (s.empty()) return {Rational(0), turn};
    }

    Rational q_exp(0);
    if (s == "1") {
    } else if (s == "q") {
        q_exp = Rational(1);
    } else if (s.rfind("q^", 0) == 0) {
        std::string e = s.substr(2);
        if (e.size() >= 2 && e.front() == '(' && e.back() == ')') e = e.substr(1, e.size() - 2);
        try {
            q_exp = Rational::parse(e);
        } catch (const std::exception &) {
            throw ValidationError("bad exponent in scalar \"" + text + "\"");
        }
    } else {
        throw ValidationError("unrecognized scalar \"" + text + "\"");
    }
    return {q_exp, turn};
}

QScalar mul(const QScalar &a, const QScalar &b)
{
    return {a.q_exp() + b.q_exp(), a.turn() + b.turn()};
}

QScalar inverse(const QScalar &a) { return {-a.q_exp(), -a.turn()}; }

QScalar unit_part(const QScalar &a) { return {Rational(0), a.turn()}; }

QScalar q_shift(const QScalar &a, const Rational &h) { return {a.q_exp() + h, a.turn()}; }

std::complex<double> to_complex(const QScalar &a, double q)
{
    if (!(q > 1.0)) throw ValidationError("q must be a real number > 1");
    const double modulus = std::pow(q, a.q_exp().to_double());
    const long double angle = 2.0L * std::numbers::pi_v<long double> * a.turn().to_long_double();
    // exact quadrant values keep e.g. turn 1/2 at exactly -1
    const Rational &t = a.turn();
    if (t == Rational(0)) return {modulus, 0.0};
    if (t == Rational(1, 4)) return {0.0, modulus};
    if (t == Rational(1, 2)) return {-modulus, 0.0};
    if (t == Rational(3, 4)) return {0.0, -modulus};
    return std::polar(modulus, static_cast<double>(angle));
}

} // namespace smoothdual
