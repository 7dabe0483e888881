#include "smoothdual/bernstein.hpp"

#include <algorithm>
#include <set>

#include "smoothdual/errors.hpp"

namespace smoothdual {

Component::Component(std::vector<Block> blocks) : blocks_(std::move(blocks))
{
    if (blocks_.empty()) throw ValidationError("a component needs at least one block");
    std::set<std::string> labels;
    for (const auto &b : blocks_) {
        if (b.label.empty()) throw ValidationError("block label must be nonempty");
        if (b.exponent < 1) throw ValidationError("block exponent must be >= 1");
        if (b.rho_dim < 1) throw ValidationError("block rho_dim must be >= 1");
        if (b.q_step <= Rational(0)) throw ValidationError("block q_step must be positive");
        if (!labels.insert(b.label).second) throw ValidationError("duplicate block label \"" + b.label + "\"");
    }
}

Component Component::from_exponents(const std::vector<int> &exponents)
{
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        blocks.push_back(Block{"b" + std::to_string(i), exponents[i], 1, Rational(1)});
    return Component(std::move(blocks));
}

std::vector<int> Component::exponents() const
{
    std::vector<int> out;
    for (const auto &b : blocks_) out.push_back(b.exponent);
    return out;
}

int Component::degree() const
{
    int d = 0;
    for (const auto &b : blocks_) d += b.exponent;
    return d;
}

Stratum::Stratum(Multipartition cycle_type) : cycle_type_(std::move(cycle_type))
{
    for (std::size_t i = 0; i < cycle_type_.size(); ++i) {
        const auto &p = cycle_type_[i];
        if (p.empty()) throw ValidationError("each block needs a nonempty cycle type");
        if (!std::is_sorted(p.rbegin(), p.rend()) || p.back() < 1)
            throw ValidationError("cycle type parts must be positive and weakly decreasing");
        for (auto [alpha, m] : part_multiplicities(p))
            residual_.push_back(ResidualFactor{static_cast<int>(i), alpha, m});
        torus_rank_ += static_cast<int>(p.size());
    }
    if (cycle_type_.empty()) throw ValidationError("a stratum needs at least one block");
}

void check_degree(const Component &c, int limit, const char *what)
{
    if (c.degree() > limit)
        throw LimitExceeded(std::string(what) + ": sum of exponents " + std::to_string(c.degree()) +
                            " exceeds limit " + std::to_string(limit));
}

std::vector<Stratum> enumerate_strata(const Component &c, const Limits &limits)
{
    check_degree(c, limits.max_strata_degree, "strata");
    std::vector<Stratum> out;
    for (auto &mp : multipartitions_of(c.exponents())) out.emplace_back(std::move(mp));
    return out;
}

OrbitDescriptor orbit_for(const Component &c, const Multipartition &mp)
{
    if (mp.size() != c.blocks().size()) throw ValidationError("multipartition does not match the component");
    std::vector<std::pair<InertialClass, int>> classes;
    for (std::size_t i = 0; i < mp.size(); ++i) {
        const auto &b = c.blocks()[i];
        for (auto [alpha, m] : part_multiplicities(mp[i]))
            classes.emplace_back(InertialClass(WeilLabel{b.label, b.rho_dim, true}, Rational(alpha - 1, 2)), m);
    }
    return OrbitDescriptor(std::move(classes));
}

std::vector<OrbitDescriptor> enumerate_orbits(const Component &c, const Limits &limits)
{
    check_degree(c, limits.max_strata_degree, "orbits");
    std::vector<OrbitDescriptor> out;
    for (const auto &mp : multipartitions_of(c.exponents())) out.push_back(orbit_for(c, mp));
    return out;
}

std::vector<OrbitStratumPair> orbit_stratum_bijection(const Component &c, const Limits &limits)
{
    check_degree(c, limits.max_strata_degree, "bijection");
    std::vector<OrbitStratumPair> out;
    for (auto &mp : multipartitions_of(c.exponents())) {
        OrbitDescriptor o = orbit_for(c, mp);
        out.push_back({std::move(o), Stratum(std::move(mp))});
    }
    return out;
}

std::vector<int> stratum_quotient_shape(const Stratum &s)
{
    std::vector<int> out;
    for (const auto &f : s.residual_action()) out.push_back(f.multiplicity);
    return out;
}

} // namespace smoothdual
