#pragma once

#include <complex>
#include <compare>
#include <string>

#include "smoothdual/rational.hpp"

namespace smoothdual {

/*
 * An exact point q^a * exp(2*pi*i*turn) of C^x, with q an indeterminate
 * standing for the residue-field cardinality (q > 1).
 *
 * The turn is kept reduced into [0, 1), so two QScalars are equal exactly
 * when they denote the same point for every q > 1. Ordering is
 * lexicographic on (q_exp, turn).
 */
class QScalar {
public:
    QScalar() = default;
    QScalar(Rational q_exp, Rational turn);

    static QScalar one() { return {}; }
    /// q^h with trivial unit part.
    static QScalar q_power(Rational h) { return {h, Rational(0)}; }

    const Rational &q_exp() const { return q_exp_; }
    const Rational &turn() const { return turn_; }

    bool is_unit() const { return q_exp_.is_zero(); }

    friend bool operator==(const QScalar &, const QScalar &) = default;
    friend std::strong_ordering operator<=>(const QScalar &, const QScalar &) = default;

    /// Compact text form, e.g. "1", "q", "q^-1/2", "q^3/2@1/4" (turn after '@').
    std::string str() const;
    /// Inverse of str(); also accepts "@1/4" for a pure unit.
    static QScalar parse(const std::string &text);

private:
    Rational q_exp_;
    Rational turn_;
};

QScalar mul(const QScalar &a, const QScalar &b);
QScalar inverse(const QScalar &a);

/// Strips the modulus: (a, turn) -> (0, turn). This is z -> z/|z|.
QScalar unit_part(const QScalar &a);

/// Multiplication by q^h.
QScalar q_shift(const QScalar &a, const Rational &h);

/// Numeric value q^{q_exp} * exp(2*pi*i*turn). Throws ValidationError unless q > 1.
std::complex<double> to_complex(const QScalar &a, double q);

} // namespace smoothdual
