#include "smoothdual/cohomology.hpp"

#include <numeric>
#include <string>

#include "smoothdual/errors.hpp"

namespace smoothdual {

namespace {

using Wide = __int128;
using WidePoly = std::vector<Wide>;

// prod over cycles c of det(I + t C) = 1 - (-t)^c
WidePoly class_determinant(const Partition &cycles, int m)
{
    WidePoly poly(m + 1, 0);
    poly[0] = 1;
    int deg = 0;
    for (int c : cycles) {
        const Wide lead = (c % 2 == 1) ? 1 : -1;  // -(-1)^c
        for (int p = deg; p >= 0; --p)
            if (poly[p] != 0) poly[p + c] += lead * poly[p];
        deg += c;
    }
    return poly;
}

void accumulate_class(WidePoly &acc, const Partition &cycles, int m, std::uint64_t group_order)
{
    const Wide class_size = static_cast<Wide>(group_order / centralizer_order(cycles));
    const WidePoly det = class_determinant(cycles, m);
    for (int p = 0; p <= m; ++p) acc[p] += class_size * det[p];
}

PoincarePolynomial finish_average(const WidePoly &acc, std::uint64_t group_order, int m)
{
    std::vector<std::uint64_t> coeffs(m + 1, 0);
    for (int p = 0; p <= m; ++p) {
        if (acc[p] < 0 || acc[p] % static_cast<Wide>(group_order) != 0)
            throw InternalError("non-integral invariant dimension in degree " + std::to_string(p) +
                                " for S_" + std::to_string(m));
        coeffs[p] = static_cast<std::uint64_t>(acc[p] / static_cast<Wide>(group_order));
    }
    return PoincarePolynomial(std::move(coeffs));
}

PoincarePolynomial symmetric_average_serial(int m)
{
    const std::uint64_t order = factorial(m);
    WidePoly acc(m + 1, 0);
    for (const auto &cycles : partitions_of(m)) accumulate_class(acc, cycles, m, order);
    return finish_average(acc, order, m);
}

PoincarePolynomial symmetric_average_parallel(int m)
{
    const std::uint64_t order = factorial(m);
    const auto classes = partitions_of(m);
    const long n_classes = static_cast<long>(classes.size());
    WidePoly acc(m + 1, 0);
#pragma omp parallel
    {
        WidePoly local(m + 1, 0);
#pragma omp for schedule(static) nowait
        for (long i = 0; i < n_classes; ++i) accumulate_class(local, classes[i], m, order);
#pragma omp critical(smoothdual_molien_reduce)
        for (int p = 0; p <= m; ++p) acc[p] += local[p];
    }
    return finish_average(acc, order, m);
}

void check_action(const PermutationAction &a, const Limits &limits)
{
    for (int m : a.blocks)
        if (m < 1) throw ValidationError("permutation action blocks must be positive");
    if (a.rank() > limits.max_action_rank)
        throw LimitExceeded("permutation action rank " + std::to_string(a.rank()) + " exceeds limit " +
                            std::to_string(limits.max_action_rank));
}

template <class Average>
PoincarePolynomial invariant_dims_with(const PermutationAction &a, const Limits &limits, Average average)
{
    check_action(a, limits);
    PoincarePolynomial result({1});
    for (int m : a.blocks) result = result * average(m);
    return result;
}

HpDims add_stratum(HpDims acc, const PoincarePolynomial &p)
{
    acc.hp0 += p.even_total();
    acc.hp1 += p.odd_total();
    return acc;
}

} // namespace

PoincarePolynomial::PoincarePolynomial(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs))
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) throw ValidationError("a Poincare polynomial cannot be zero");
}

PoincarePolynomial PoincarePolynomial::torus(int k)
{
    if (k < 0) throw ValidationError("torus rank must be nonnegative");
    std::vector<std::uint64_t> c(k + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= k; ++i)
        for (int p = i; p >= 1; --p) c[p] += c[p - 1];
    return PoincarePolynomial(std::move(c));
}

std::uint64_t PoincarePolynomial::even_total() const
{
    std::uint64_t s = 0;
    for (std::size_t p = 0; p < coeffs_.size(); p += 2) s += coeffs_[p];
    return s;
}

std::uint64_t PoincarePolynomial::odd_total() const
{
    std::uint64_t s = 0;
    for (std::size_t p = 1; p < coeffs_.size(); p += 2) s += coeffs_[p];
    return s;
}

PoincarePolynomial operator*(const PoincarePolynomial &a, const PoincarePolynomial &b)
{
    std::vector<std::uint64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PoincarePolynomial(std::move(c));
}

int PermutationAction::rank() const { return std::accumulate(blocks.begin(), blocks.end(), 0); }

PoincarePolynomial invariant_exterior_dims(const PermutationAction &a, const Limits &limits)
{
    return invariant_dims_with(a, limits, symmetric_average_parallel);
}

PoincarePolynomial invariant_exterior_dims_serial(const PermutationAction &a, const Limits &limits)
{
    return invariant_dims_with(a, limits, symmetric_average_serial);
}

PermutationAction residual_permutation_action(const Stratum &s)
{
    return PermutationAction{stratum_quotient_shape(s)};
}

PoincarePolynomial stratum_poincare(const Stratum &s, const Limits &limits)
{
    return invariant_exterior_dims(residual_permutation_action(s), limits);
}

HpDims component_hp(const Component &c, const Limits &limits)
{
    const auto strata = enumerate_strata(c, limits);
    const long n = static_cast<long>(strata.size());
    std::uint64_t hp0 = 0, hp1 = 0;
    // the class-level kernel stays serial here; parallelism is across strata
#pragma omp parallel for schedule(dynamic) reduction(+ : hp0, hp1)
    for (long i = 0; i < n; ++i) {
        const auto p = invariant_exterior_dims_serial(residual_permutation_action(strata[i]), limits);
        hp0 += p.even_total();
        hp1 += p.odd_total();
    }
    return {hp0, hp1};
}

HpDims component_hp_serial(const Component &c, const Limits &limits)
{
    HpDims acc;
    for (const auto &s : enumerate_strata(c, limits))
        acc = add_stratum(acc, invariant_exterior_dims_serial(residual_permutation_action(s), limits));
    return acc;
}

std::uint64_t lemma22_dimension(const Component &c, const Limits &limits)
{
    std::uint64_t total = 0;
    for (const auto &o : enumerate_orbits(c, limits)) total += std::uint64_t{1} << (orbit_shape(o).k - 1);
    return total;
}

PoincarePolynomial orbit_poincare(const OrbitDescriptor &o) { return PoincarePolynomial::torus(orbit_shape(o).k); }

PoincarePolynomial tempered_orbit_poincare(const OrbitDescriptor &o, const Limits &limits)
{
    return invariant_exterior_dims(PermutationAction{o.multiplicities()}, limits);
}

} // namespace smoothdual
