#pragma once

#include <cstdint>
#include <vector>

#include "smoothdual/bernstein.hpp"
#include "smoothdual/parameters.hpp"

namespace smoothdual {

/// sum_p dim H^p t^p. Trailing zeros are trimmed; never empty.
class PoincarePolynomial {
public:
    explicit PoincarePolynomial(std::vector<std::uint64_t> coeffs);
    /// (1 + t)^k
    static PoincarePolynomial torus(int k);

    const std::vector<std::uint64_t> &coeffs() const { return coeffs_; }
    std::uint64_t even_total() const;
    std::uint64_t odd_total() const;
    std::uint64_t total() const { return even_total() + odd_total(); }

    friend bool operator==(const PoincarePolynomial &, const PoincarePolynomial &) = default;
    /// Kunneth product.
    friend PoincarePolynomial operator*(const PoincarePolynomial &a, const PoincarePolynomial &b);

private:
    std::vector<std::uint64_t> coeffs_;
};

/// prod_b S_{m_b}, each factor permuting its own block of m_b coordinates.
struct PermutationAction {
    std::vector<int> blocks;
    int rank() const;
};

/*
 * Dimensions of the invariants (Lambda^p C^rank)^G for the permutation
 * action G. Averages det(I + t P_g) over G one symmetric factor at a time,
 * summing over conjugacy classes weighted by class size:
 *
 *     (1/m!) sum_{lambda |- m} (m!/z_lambda) prod_{c in lambda} (1 - (-t)^c)
 *
 * The class sums are accumulated as exact integers and divided by m! at
 * the end; a nonzero remainder or negative coefficient throws InternalError.
 */
PoincarePolynomial invariant_exterior_dims(const PermutationAction &a, const Limits &limits = {});
/// Serial reference for invariant_exterior_dims.
PoincarePolynomial invariant_exterior_dims_serial(const PermutationAction &a, const Limits &limits = {});

PermutationAction residual_permutation_action(const Stratum &s);
PoincarePolynomial stratum_poincare(const Stratum &s, const Limits &limits = {});

struct HpDims {
    std::uint64_t hp0 = 0;
    std::uint64_t hp1 = 0;
    friend bool operator==(const HpDims &, const HpDims &) = default;
};

/// Even and odd totals of the cohomology of the extended quotient, summed over strata.
HpDims component_hp(const Component &c, const Limits &limits = {});
HpDims component_hp_serial(const Component &c, const Limits &limits = {});

/// sum over orbits of 2^{k - 1}
std::uint64_t lemma22_dimension(const Component &c, const Limits &limits = {});

/// Cohomology of A^l x (C^x)^k, i.e. (1 + t)^k.
PoincarePolynomial orbit_poincare(const OrbitDescriptor &o);
/// Cohomology of prod_i Sym^{l_i} T, through invariant_exterior_dims with blocks (l_1, ..., l_k).
PoincarePolynomial tempered_orbit_poincare(const OrbitDescriptor &o, const Limits &limits = {});

} // namespace smoothdual
