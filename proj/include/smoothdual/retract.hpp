#pragma once

#include <vector>

#include "smoothdual/parameters.hpp"
#include "smoothdual/qproj.hpp"

namespace smoothdual {

/// Replaces every twist psi by |psi|^{-1} psi. Lands in the compact orbit.
LParameter temper_parameter(const LParameter &phi);

/// Straight-line contraction z -> z |z|^{-t}: q exponents scaled by (1 - t). t must lie in [0, 1].
LParameter homotopy(const LParameter &phi, const Rational &t);

/// Coordinatewise unit part; the stratum is unchanged.
StratumPoint temper_point(const StratumPoint &p);
StratumPoint homotopy(const StratumPoint &p, const Rational &t);

/// Multiplicities (l_1, ..., l_k) describing prod Sym^{l_i} T. Every class must have unitary determinant.
std::vector<int> compact_orbit(const OrbitDescriptor &o);

} // namespace smoothdual
