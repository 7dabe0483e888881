#include "smoothdual/symfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "smoothdual/errors.hpp"

namespace smoothdual {

namespace {

using LComplex = std::complex<long double>;

bool complex_less(const Complex &a, const Complex &b)
{
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

// Coefficients of the monic polynomial, highest degree first.
std::vector<LComplex> monic_coefficients(const SymCoords &s)
{
    std::vector<LComplex> a(s.sigma.size() + 1);
    a[0] = 1.0L;
    for (std::size_t k = 1; k < a.size(); ++k) {
        LComplex sk(s.sigma[k - 1].real(), s.sigma[k - 1].imag());
        a[k] = (k % 2 == 1) ? -sk : sk;
    }
    return a;
}

struct Evaluation {
    LComplex value;
    LComplex derivative;
    long double magnitude_bound;  // sum |a_k| |z|^{n-k}, scale of the rounding error in value
};

Evaluation horner(const std::vector<LComplex> &a, LComplex z)
{
    LComplex p = a[0], dp = 0.0L;
    long double bound = std::abs(a[0]);
    const long double r = std::abs(z);
    for (std::size_t k = 1; k < a.size(); ++k) {
        dp = dp * z + p;
        p = p * z + a[k];
        bound = bound * r + std::abs(a[k]);
    }
    return {p, dp, bound};
}

} // namespace

SymCoords to_sym_coords(const std::vector<Complex> &points)
{
    if (points.empty()) throw ValidationError("symmetric coordinates need at least one point");
    for (const auto &z : points)
        if (z == Complex(0.0, 0.0)) throw ValidationError("points of Sym^n C^x must be nonzero");

    std::vector<Complex> sorted = points;
    std::sort(sorted.begin(), sorted.end(), complex_less);

    // e[k] = e_k of the points consumed so far
    std::vector<LComplex> e(sorted.size() + 1, 0.0L);
    e[0] = 1.0L;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const LComplex z(sorted[i].real(), sorted[i].imag());
        for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * z;
    }
    SymCoords out;
    for (std::size_t k = 1; k < e.size(); ++k)
        out.sigma.emplace_back(static_cast<double>(e[k].real()), static_cast<double>(e[k].imag()));
    return out;
}

std::vector<Complex> from_sym_coords(const SymCoords &s, const RootOptions &opts)
{
    const std::size_t n = s.sigma.size();
    if (n == 0) throw ValidationError("symmetric coordinates need n >= 1");
    if (s.sigma.back() == Complex(0.0, 0.0)) throw ValidationError("sigma_n must be nonzero");

    const auto a = monic_coefficients(s);
    constexpr long double eps = std::numeric_limits<long double>::epsilon();

    // Aberth-Ehrlich iteration started on a circle of the geometric-mean radius.
    const long double radius = std::pow(std::abs(a[n]), 1.0L / static_cast<long double>(n));
    std::vector<LComplex> z(n);
    for (std::size_t k = 0; k < n; ++k)
        z[k] = std::polar(radius, 2.0L * std::numbers::pi_v<long double> * k / n + 0.4L);

    std::vector<bool> done(n, false);
    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
        bool all_done = true;
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k]) continue;
            const Evaluation ev = horner(a, z[k]);
            if (std::abs(ev.value) <= 16.0L * eps * ev.magnitude_bound) {
                done[k] = true;
                continue;
            }
            all_done = false;
            const LComplex newton = ev.value / ev.derivative;
            LComplex repulsion = 0.0L;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) repulsion += 1.0L / (z[k] - z[j]);
            z[k] -= newton / (1.0L - newton * repulsion);
        }
        if (all_done) break;
    }
    if (iter == opts.max_iterations)
        throw NumericalFailure("root finder did not converge in " + std::to_string(opts.max_iterations) +
                               " iterations");

    std::vector<Complex> roots;
    roots.reserve(n);
    for (const auto &r : z) {
        if (r == LComplex(0.0L, 0.0L)) throw NumericalFailure("root finder produced a zero root");
        roots.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    }
    std::sort(roots.begin(), roots.end(), complex_less);
    return roots;
}

std::vector<std::size_t> match_multisets(const std::vector<Complex> &a, const std::vector<Complex> &b)
{
    const std::size_t n = a.size();
    if (b.size() != n) throw ValidationError("multisets of different sizes cannot be matched");
    if (n > 20) throw LimitExceeded("multiset matching limited to 20 elements");

    // best[mask]: least cost assigning a[0 .. popcount(mask)) to the b's in mask
    const std::size_t full = std::size_t{1} << n;
    std::vector<double> best(full, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> last(full, 0);
    best[0] = 0.0;
    for (std::size_t mask = 0; mask < full; ++mask) {
        if (!std::isfinite(best[mask])) continue;
        const std::size_t i = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (i == n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (std::size_t{1} << j)) continue;
            const std::size_t next = mask | (std::size_t{1} << j);
            const double cost = best[mask] + std::abs(a[i] - b[j]);
            if (cost < best[next]) {
                best[next] = cost;
                last[next] = j;
            }
        }
    }
    std::vector<std::size_t> perm(n);
    std::size_t mask = full - 1;
    for (std::size_t i = n; i-- > 0;) {
        perm[i] = last[mask];
        mask &= ~(std::size_t{1} << perm[i]);
    }
    return perm;
}

double multiset_relative_error(const std::vector<Complex> &a, const std::vector<Complex> &b)
{
    const auto perm = match_multisets(a, b);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]) / std::abs(a[i]));
    return worst;
}

} // namespace smoothdual
