#include "smoothdual/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "smoothdual/bernstein.hpp"
#include "smoothdual/cohomology.hpp"
#include "smoothdual/qproj.hpp"
#include "smoothdual/retract.hpp"
#include "smoothdual/symfun.hpp"

namespace smoothdual {

namespace {

QScalar qp(std::int64_t n, std::int64_t d = 1) { return QScalar::q_power(Rational(n, d)); }

std::string join(const std::vector<int> &v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::vector<std::vector<int>> compositions_up_to(int max_sum, int max_blocks)
{
    std::vector<std::vector<int>> out;
    std::function<void(std::vector<int> &, int)> grow = [&](std::vector<int> &prefix, int left) {
        if (!prefix.empty()) out.push_back(prefix);
        if (static_cast<int>(prefix.size()) == max_blocks) return;
        for (int e = 1; e <= left; ++e) {
            prefix.push_back(e);
            grow(prefix, left - e);
            prefix.pop_back();
        }
    };
    std::vector<int> prefix;
    grow(prefix, max_sum);
    return out;
}

RegressionResult gl2_projection()
{
    RegressionResult r{"gl2-q-projection", "GL(2): z -> {q^{1/2} z, q^{-1/2} z}; identity on Sym^2", false, ""};
    const SymPoint on_cycle = project(StratumPoint(Stratum(Multipartition{{2}}), {QScalar::one()}));
    const SymPoint on_identity = project(StratumPoint(Stratum(Multipartition{{1, 1}}), {qp(2), QScalar({0}, {1, 3})}));
    r.passed = on_cycle == SymPoint({{qp(1, 2), qp(-1, 2)}}) &&
               on_identity == SymPoint({{qp(2), QScalar({0}, {1, 3})}});
    return r;
}

RegressionResult gl3_collision()
{
    RegressionResult r{"gl3-fiber-collision", "GL(3): four parameters over {q^-1, 1, q}", false, ""};
    const SymPoint image = project(StratumPoint(Stratum(Multipartition{{3}}), {QScalar::one()}));
    const SymPoint expected({{qp(-1), QScalar::one(), qp(1)}});
    const auto f = fiber(expected, Component::from_exponents({3}));
    std::map<Partition, int> per_stratum;
    for (const auto &p : f) ++per_stratum[p.stratum().cycle_type()[0]];
    r.passed = image == expected && f.size() == 4 && per_stratum[{1, 1, 1}] == 1 && per_stratum[{2, 1}] == 2 &&
               per_stratum[{3}] == 1;
    r.detail = "fiber size " + std::to_string(f.size());
    return r;
}

RegressionResult strata_shapes()
{
    RegressionResult r{"extended-quotient-strata", "Sym^2 + C^x for (2); Sym^3 + (C^x)^2 + C^x for (3)", false, ""};
    std::vector<std::vector<int>> shapes2, shapes3;
    for (const auto &s : enumerate_strata(Component::from_exponents({2}))) shapes2.push_back(stratum_quotient_shape(s));
    for (const auto &s : enumerate_strata(Component::from_exponents({3}))) shapes3.push_back(stratum_quotient_shape(s));
    r.passed = shapes2 == std::vector<std::vector<int>>{{2}, {1}} &&
               shapes3 == std::vector<std::vector<int>>{{3}, {1, 1}, {1}};
    return r;
}

RegressionResult hp_dimensions()
{
    RegressionResult r{"hp-dimensions", "HP of exponents (1)..(4): 1, 2, 4, 7 in each parity", false, ""};
    const std::vector<std::uint64_t> expected{1, 2, 4, 7};
    r.passed = true;
    for (int e = 1; e <= 4; ++e) {
        const auto c = Component::from_exponents({e});
        const HpDims hp = component_hp(c);
        const auto l22 = lemma22_dimension(c);
        r.detail += "(" + std::to_string(e) + ")->" + std::to_string(hp.hp0) + "/" + std::to_string(hp.hp1) + " ";
        r.passed = r.passed && hp.hp0 == expected[e - 1] && hp.hp1 == expected[e - 1] && l22 == expected[e - 1];
    }
    return r;
}

RegressionResult lemma_sweep()
{
    RegressionResult r{"dimension-formula-sweep", "per-parity dimension formula, sum of exponents <= 8", true, ""};
    int checked = 0;
    for (const auto &exps : compositions_up_to(8, 3)) {
        const auto c = Component::from_exponents(exps);
        const HpDims hp = component_hp(c);
        const auto l22 = lemma22_dimension(c);
        ++checked;
        if (hp.hp0 != hp.hp1 || hp.hp0 != l22) {
            r.passed = false;
            r.detail = "mismatch at " + join(exps);
            return r;
        }
    }
    r.detail = std::to_string(checked) + " components";
    return r;
}

RegressionResult retraction_sweep()
{
    RegressionResult r{"tempering-retraction", "retraction idempotent, homotopy endpoints, cohomology preserved", true,
                       ""};
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> exp_num(-6, 6), turn_num(0, 7);
    for (const auto &exps : compositions_up_to(8, 3)) {
        const auto c = Component::from_exponents(exps);
        for (const auto &o : enumerate_orbits(c)) {
            std::vector<Summand> summands;
            for (const auto &[cls, m] : o.classes())
                for (int i = 0; i < m; ++i)
                    summands.push_back({cls, QScalar(Rational(exp_num(rng), 2), Rational(turn_num(rng), 8))});
            const LParameter phi(std::move(summands));
            const LParameter t = temper_parameter(phi);
            const bool ok = temper_parameter(t) == t && is_tempered(t) && homotopy(phi, Rational(0)) == phi &&
                            homotopy(phi, Rational(1)) == t && orbit_of(homotopy(phi, Rational(1, 3))) == o &&
                            orbit_of(t) == o && orbit_poincare(o) == tempered_orbit_poincare(o);
            if (!ok) {
                r.passed = false;
                r.detail = "failure on component " + join(exps);
                return r;
            }
        }
    }
    return r;
}

RegressionResult fiber_sections()
{
    RegressionResult r{"fiber-soundness", "every projected point lies in its own fiber", true, ""};
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> half(-3, 3), turn(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
        const int e = 1 + trial % 5;
        const auto strata = enumerate_strata(Component::from_exponents({e}));
        const Stratum &s = strata[static_cast<std::size_t>(trial) % strata.size()];
        std::vector<QScalar> coords;
        for (int i = 0; i < s.torus_rank(); ++i) coords.emplace_back(Rational(half(rng), 2), Rational(turn(rng), 2));
        const StratumPoint p(s, coords);
        const SymPoint y = project(p);
        const auto f = fiber(y, Component::from_exponents({e}));
        bool sound = true;
        for (const auto &x : f) sound = sound && project(x) == y;
        if (!verify_section(p) || !sound) {
            r.passed = false;
            r.detail = "trial " + std::to_string(trial);
            return r;
        }
    }
    return r;
}

RegressionResult symcoords_roundtrip()
{
    RegressionResult r{"symmetric-coordinates", "Sym^n C^x coordinates invert to the original multiset", true, ""};
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> log_mod(std::log(1e-2), std::log(1e2)), angle(0.0, 2.0 * M_PI);
    double worst = 0.0;
    for (int n = 2; n <= 8; ++n)
        for (int k = 0; k < 20; ++k) {
            std::vector<Complex> pts;
            while (static_cast<int>(pts.size()) < n) {
                const Complex z = std::polar(std::exp(log_mod(rng)), angle(rng));
                bool separated = true;
                for (const auto &w : pts) separated = separated && std::abs(z - w) >= 1e-3;
                if (separated) pts.push_back(z);
            }
            worst = std::max(worst, multiset_relative_error(pts, from_sym_coords(to_sym_coords(pts))));
        }
    r.passed = worst < 1e-9;
    std::ostringstream os;
    os << "max relative error " << worst;
    r.detail = os.str();
    return r;
}

} // namespace

std::vector<RegressionResult> run_regressions()
{
    std::vector<std::function<RegressionResult()>> checks{gl2_projection, gl3_collision,    strata_shapes,
                                                          hp_dimensions,  lemma_sweep,      retraction_sweep,
                                                          fiber_sections, symcoords_roundtrip};
    std::vector<RegressionResult> out;
    for (const auto &check : checks) {
        try {
            out.push_back(check());
        } catch (const std::exception &e) {
            out.push_back({"exception", "", false, e.what()});
        }
    }
    return out;
}

} // namespace smoothdual
