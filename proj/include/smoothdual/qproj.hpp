#pragma once

#include <compare>
#include <vector>

#include "smoothdual/bernstein.hpp"
#include "smoothdual/scalars.hpp"

namespace smoothdual {

/*
 * A point of D^gamma / Z_gamma: one coordinate per cycle, laid out like the
 * flattened cycle type (blocks in order, parts weakly decreasing). The
 * coordinates of equal-length cycles in a block are kept sorted, which is
 * the quotient by the residual centralizer action.
 */
class StratumPoint {
public:
    StratumPoint(Stratum stratum, std::vector<QScalar> coords);

    const Stratum &stratum() const { return stratum_; }
    const std::vector<QScalar> &coords() const { return coords_; }

    friend bool operator==(const StratumPoint &, const StratumPoint &) = default;
    friend std::strong_ordering operator<=>(const StratumPoint &a, const StratumPoint &b);

private:
    Stratum stratum_;
    std::vector<QScalar> coords_;
};

/// A point of the ordinary quotient D/W: one sorted multiset per block.
class SymPoint {
public:
    explicit SymPoint(std::vector<std::vector<QScalar>> blocks);

    const std::vector<std::vector<QScalar>> &blocks() const { return blocks_; }
    std::vector<int> sizes() const;

    friend bool operator==(const SymPoint &, const SymPoint &) = default;
    friend auto operator<=>(const SymPoint &, const SymPoint &) = default;

private:
    std::vector<std::vector<QScalar>> blocks_;
};

/// {q^{(alpha-1)/2 - i} z : i = 0..alpha-1}, with q replaced by q^step. Sorted ascending.
std::vector<QScalar> q_string(int alpha, const QScalar &z, const Rational &step = Rational(1));

/// The q-projection with the single global q.
SymPoint project(const StratumPoint &p);
/// The q-projection using the component's per-block q steps; the cycle type must match its exponents.
SymPoint project(const StratumPoint &p, const Component &c);

/*
 * All points of the extended quotient over y, in canonical order.
 *
 * Each block multiset is split into q-strings independently. The least
 * remaining element is always the bottom of its string, so the search
 * branches only on that string's length.
 */
std::vector<StratumPoint> fiber(const SymPoint &y, const Component &c, const Limits &limits = {});

/// fiber() over many queries. OpenMP across queries; output order matches input.
std::vector<std::vector<StratumPoint>> fiber_batch(const std::vector<SymPoint> &ys, const Component &c,
                                                   const Limits &limits = {});
std::vector<std::vector<StratumPoint>> fiber_batch_serial(const std::vector<SymPoint> &ys, const Component &c,
                                                          const Limits &limits = {});

/// True iff p is in the fiber over its own projection (component inferred from the cycle type).
bool verify_section(const StratumPoint &p, const Limits &limits = {});
bool verify_section(const StratumPoint &p, const Component &c, const Limits &limits = {});

} // namespace smoothdual
