#include "smoothdual/parameters.hpp"

#include <algorithm>
#include <map>

#include "smoothdual/errors.hpp"

namespace smoothdual {

InertialClass::InertialClass(WeilLabel rho, Rational spin_j) : rho_(std::move(rho)), spin_j_(spin_j)
{
    if (rho_.id.empty()) throw ValidationError("Weil label id must be nonempty");
    if (rho_.dim < 1) throw ValidationError("Weil label dimension must be >= 1");
    if (spin_j_ < Rational(0) || !(spin_j_ * Rational(2)).is_integer())
        throw ValidationError("spin j must be a nonnegative half-integer, got " + spin_j_.str());
}

LParameter::LParameter(std::vector<Summand> summands) : summands_(std::move(summands))
{
    if (summands_.empty()) throw ValidationError("an L-parameter needs at least one summand");
    std::map<std::string, WeilLabel> seen;
    for (const auto &s : summands_) {
        auto [it, inserted] = seen.emplace(s.cls.rho().id, s.cls.rho());
        if (!inserted && it->second != s.cls.rho())
            throw ValidationError("Weil label \"" + s.cls.rho().id + "\" used with inconsistent attributes");
    }
    std::sort(summands_.begin(), summands_.end());
}

OrbitDescriptor::OrbitDescriptor(std::vector<std::pair<InertialClass, int>> classes) : classes_(std::move(classes))
{
    if (classes_.empty()) throw ValidationError("an orbit needs at least one class");
    std::sort(classes_.begin(), classes_.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (classes_[i].second < 1) throw ValidationError("orbit multiplicities must be positive");
        if (i > 0 && classes_[i].first == classes_[i - 1].first)
            throw ValidationError("orbit descriptor lists a class twice");
    }
}

std::vector<int> OrbitDescriptor::multiplicities() const
{
    std::vector<int> out;
    out.reserve(classes_.size());
    for (const auto &[cls, m] : classes_) out.push_back(m);
    return out;
}

int dimension(const LParameter &phi)
{
    int n = 0;
    for (const auto &s : phi.summands()) n += s.cls.dimension();
    return n;
}

OrbitDescriptor orbit_of(const LParameter &phi)
{
    // summands are sorted by class first, so equal classes are adjacent
    std::vector<std::pair<InertialClass, int>> classes;
    for (const auto &s : phi.summands()) {
        if (!classes.empty() && classes.back().first == s.cls)
            ++classes.back().second;
        else
            classes.emplace_back(s.cls, 1);
    }
    return OrbitDescriptor(std::move(classes));
}

OrbitShape orbit_shape(const OrbitDescriptor &o)
{
    int total = 0;
    for (const auto &[cls, m] : o.classes()) total += m;
    const int k = static_cast<int>(o.classes().size());
    return {total - k, k};
}

bool is_tempered(const LParameter &phi)
{
    return std::all_of(phi.summands().begin(), phi.summands().end(),
                       [](const Summand &s) { return s.cls.rho().unitary_det && s.twist.is_unit(); });
}

bool is_supercuspidal(const LParameter &phi)
{
    return phi.summands().size() == 1 && phi.summands().front().cls.spin_j().is_zero();
}

bool is_discrete_series(const LParameter &phi)
{
    if (phi.summands().size() != 1) return false;
    const auto &s = phi.summands().front();
    return s.cls.rho().unitary_det && s.twist.is_unit();
}

LParameter steinberg_parameter(int n)
{
    if (n < 1) throw ValidationError("Steinberg parameter needs n >= 1");
    return LParameter({Summand{InertialClass(WeilLabel::trivial(), Rational(n - 1, 2)), QScalar::one()}});
}

} // namespace smoothdual
