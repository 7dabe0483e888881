// Wall-clock comparison of the OpenMP kernels against their serial references.
#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "smoothdual/cohomology.hpp"
#include "smoothdual/qproj.hpp"

using namespace smoothdual;

namespace {

double seconds(const std::function<void()> &f, int reps)
{
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void report(const char *name, double par, double ser, bool same)
{
    std::printf("%-32s parallel %10.6f s  serial %10.6f s  speedup %5.2fx  %s\n", name, par, ser,
                par > 0 ? ser / par : 0.0, same ? "match" : "MISMATCH");
}

} // namespace

int main()
{
    std::printf("threads: %d\n", omp_get_max_threads());

    for (int e : {12, 16, 20}) {
        const auto c = Component::from_exponents({e});
        const bool same = component_hp(c) == component_hp_serial(c);
        char name[64];
        std::snprintf(name, sizeof name, "component_hp (%d)", e);
        report(name, seconds([&] { component_hp(c); }, 3), seconds([&] { component_hp_serial(c); }, 3), same);
    }

    for (int m : {10, 16, 20}) {
        const PermutationAction a{{m}};
        const bool same = invariant_exterior_dims(a).coeffs() == invariant_exterior_dims_serial(a).coeffs();
        char name[64];
        std::snprintf(name, sizeof name, "invariant_exterior_dims (%d)", m);
        report(name, seconds([&] { invariant_exterior_dims(a); }, 5),
               seconds([&] { invariant_exterior_dims_serial(a); }, 5), same);
    }

    std::vector<SymPoint> ys;
    for (int i = 0; i < 200; ++i) {
        std::vector<QScalar> b;
        for (int k = 0; k < 8; ++k) b.push_back(QScalar::q_power(Rational((i + k) % 5, 2)));
        ys.emplace_back(std::vector<std::vector<QScalar>>{b});
    }
    const auto c8 = Component::from_exponents({8});
    const bool same = fiber_batch(ys, c8) == fiber_batch_serial(ys, c8);
    report("fiber_batch (200 x deg 8)", seconds([&] { fiber_batch(ys, c8); }, 3),
           seconds([&] { fiber_batch_serial(ys, c8); }, 3), same);
}
