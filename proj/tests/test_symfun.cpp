#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "smoothdual/errors.hpp"
#include "smoothdual/symfun.hpp"

using namespace smoothdual;

TEST_CASE("to_sym_coords")
{
    CHECK(to_sym_coords({2.0, 3.0}).sigma == std::vector<Complex>{5.0, 6.0});
    CHECK(to_sym_coords({1.0, -1.0}).sigma == std::vector<Complex>{0.0, -1.0});
    CHECK(to_sym_coords({1.0, 1.0, 1.0}).sigma == std::vector<Complex>{3.0, 3.0, 1.0});
    CHECK_THROWS_AS(to_sym_coords({1.0, 0.0}), ValidationError);
    CHECK_THROWS_AS(to_sym_coords({}), ValidationError);
}

TEST_CASE("from_sym_coords")
{
    auto close = [](const std::vector<Complex> &a, const std::vector<Complex> &b, double tol) {
        return multiset_relative_error(a, b) < tol;
    };
    CHECK(close(from_sym_coords({{5.0, 6.0}}), {2.0, 3.0}, 1e-14));
    CHECK(close(from_sym_coords({{0.0, -1.0}}), {1.0, -1.0}, 1e-14));
    // a triple root converges only to about the cube root of the working precision
    CHECK(close(from_sym_coords({{3.0, 3.0, 1.0}}), {1.0, 1.0, 1.0}, 1e-5));
    CHECK_THROWS_AS(from_sym_coords({{1.0, 0.0}}), ValidationError);
    CHECK_THROWS_AS(from_sym_coords({}), ValidationError);
}

TEST_CASE("bounded iterations")
{
    RootOptions opts;
    opts.max_iterations = 1;
    CHECK_THROWS_AS(from_sym_coords(to_sym_coords({0.5, 2.0, Complex(0, 3), Complex(-7, 1)}), opts), NumericalFailure);
}

TEST_CASE("permutation invariance is bitwise")
{
    std::mt19937_64 rng(8);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Complex> pts;
        for (int i = 0; i < 6; ++i) pts.emplace_back(g(rng), g(rng));
        const auto ref = to_sym_coords(pts).sigma;
        std::shuffle(pts.begin(), pts.end(), rng);
        CHECK(to_sym_coords(pts).sigma == ref);
        Complex prod = 1.0;
        for (const auto &z : pts) prod *= z;
        CHECK(std::abs(ref.back() - prod) <= 1e-12 * std::abs(prod));
    }
}

TEST_CASE("round trip on separated samples")
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> log_mod(std::log(1e-2), std::log(1e2)), angle(0.0, 6.283185307179586);
    for (int n = 1; n <= 8; ++n)
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Complex> pts;
            while (static_cast<int>(pts.size()) < n) {
                const Complex z = std::polar(std::exp(log_mod(rng)), angle(rng));
                if (std::all_of(pts.begin(), pts.end(), [&](const Complex &w) { return std::abs(z - w) >= 1e-3; }))
                    pts.push_back(z);
            }
            CHECK(multiset_relative_error(pts, from_sym_coords(to_sym_coords(pts))) < 1e-9);
        }
}

TEST_CASE("matching is optimal, not greedy")
{
    // nearest-first on c[0] would take d = 1.0 (cost 0.4) and leave 1.0 -> 0.0
    const std::vector<Complex> c{0.6, 1.0}, d{1.0, 0.0};
    CHECK(match_multisets(c, d) == std::vector<std::size_t>{1, 0});
    CHECK_THROWS_AS(match_multisets({1.0}, {1.0, 2.0}), ValidationError);

    std::mt19937_64 rng(12);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Complex> a, b;
        for (int i = 0; i < 6; ++i) {
            a.emplace_back(g(rng), g(rng));
            b.emplace_back(g(rng), g(rng));
        }
        auto cost = [&](const std::vector<std::size_t> &perm) {
            double s = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[perm[i]]);
            return s;
        };
        std::vector<std::size_t> perm{0, 1, 2, 3, 4, 5};
        double best = cost(perm);
        while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, cost(perm));
        CHECK(cost(match_multisets(a, b)) == doctest::Approx(best).epsilon(1e-12));
    }
}
