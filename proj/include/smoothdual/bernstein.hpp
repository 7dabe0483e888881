#pragma once

#include <string>
#include <vector>

#include "smoothdual/parameters.hpp"
#include "smoothdual/partitions.hpp"

namespace smoothdual {

/// Size guards for the exhaustive routines. Requests above them are refused.
struct Limits {
    int max_strata_degree = 20;  ///< sum of exponents for strata/orbits/hp
    int max_fiber_degree = 12;   ///< sum of exponents for fiber search
    int max_action_rank = 20;    ///< rank of a permutation action for Molien averaging
};

struct Block {
    std::string label;  ///< opaque supercuspidal identifier
    int exponent = 1;
    int rho_dim = 1;    ///< dimension of the Weil representation attached to the label
    /// q-strings in this block step by q^q_step; 1 is the single global q.
    Rational q_step = Rational(1);

    friend bool operator==(const Block &, const Block &) = default;
};

/// A Bernstein component, known through its exponents. W = S_{e_1} x ... x S_{e_r}.
class Component {
public:
    explicit Component(std::vector<Block> blocks);
    /// Blocks labelled "b0", "b1", ... with the given exponents.
    static Component from_exponents(const std::vector<int> &exponents);

    const std::vector<Block> &blocks() const { return blocks_; }
    std::vector<int> exponents() const;
    /// d = sum of exponents
    int degree() const;

    friend bool operator==(const Component &, const Component &) = default;

private:
    std::vector<Block> blocks_;
};

/// S_m permuting the coordinates attached to the m cycles of length alpha in one block.
struct ResidualFactor {
    int block = 0;
    int cycle_length = 1;
    int multiplicity = 1;
    friend bool operator==(const ResidualFactor &, const ResidualFactor &) = default;
};

/*
 * One piece D^gamma / Z_gamma of the extended quotient, for gamma of the
 * given cycle type. D^gamma is a torus with one coordinate per cycle;
 * rotating within a cycle fixes D^gamma pointwise, so only the permutations
 * of equal-length cycles inside a block act (the residual factors).
 */
class Stratum {
public:
    explicit Stratum(Multipartition cycle_type);

    const Multipartition &cycle_type() const { return cycle_type_; }
    int torus_rank() const { return torus_rank_; }
    /// Blocks in order; within a block, cycle lengths descending.
    const std::vector<ResidualFactor> &residual_action() const { return residual_; }

    friend bool operator==(const Stratum &a, const Stratum &b) { return a.cycle_type_ == b.cycle_type_; }
    friend auto operator<=>(const Stratum &a, const Stratum &b) { return a.cycle_type_ <=> b.cycle_type_; }

private:
    Multipartition cycle_type_;
    int torus_rank_ = 0;
    std::vector<ResidualFactor> residual_;
};

void check_degree(const Component &c, int limit, const char *what);

/// One stratum per multipartition, in lexicographic order.
std::vector<Stratum> enumerate_strata(const Component &c, const Limits &limits = {});

/// The orbit built from a multipartition: part alpha of block i gives class (label_i, spin (alpha-1)/2).
OrbitDescriptor orbit_for(const Component &c, const Multipartition &mp);

/// Orbits of L-parameters lying over the component, in the same order as enumerate_strata.
std::vector<OrbitDescriptor> enumerate_orbits(const Component &c, const Limits &limits = {});

struct OrbitStratumPair {
    OrbitDescriptor orbit;
    Stratum stratum;
};

std::vector<OrbitStratumPair> orbit_stratum_bijection(const Component &c, const Limits &limits = {});

/// Exponents m of the factors prod Sym^m C^x of the stratum.
std::vector<int> stratum_quotient_shape(const Stratum &s);

} // namespace smoothdual
