#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace smoothdual {

using Complex = std::complex<double>;

/// Elementary symmetric coordinates (sigma_1, ..., sigma_n) of a point of Sym^n C^x.
struct SymCoords {
    std::vector<Complex> sigma;
};

/// sigma_i = e_i(points). Inputs are sorted first so the result does not depend on their order.
SymCoords to_sym_coords(const std::vector<Complex> &points);

struct RootOptions {
    int max_iterations = 2000;
};

/// Roots of x^n - sigma_1 x^{n-1} + ... + (-1)^n sigma_n, sorted by (re, im).
std::vector<Complex> from_sym_coords(const SymCoords &s, const RootOptions &opts = {});

/// Optimal matching of two equal-size multisets under sum of |a_i - b_perm(i)|; returns perm.
std::vector<std::size_t> match_multisets(const std::vector<Complex> &a, const std::vector<Complex> &b);

/// max_i |a_i - b_perm(i)| / |a_i| under the optimal matching.
double multiset_relative_error(const std::vector<Complex> &a, const std::vector<Complex> &b);

} // namespace smoothdual
