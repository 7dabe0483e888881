#include "smoothdual/partitions.hpp"

#include <algorithm>
#include <stdexcept>

#include "smoothdual/errors.hpp"
#include "smoothdual/rational.hpp"

namespace smoothdual {

namespace {

// Partitions of n with every part <= max_part, in descending lexicographic order.
void descend(int n, int max_part, Partition &prefix, std::vector<Partition> &out)
{
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        prefix.push_back(part);
        descend(n - part, part, prefix, out);
        prefix.pop_back();
    }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in group order");
    return r;
}

} // namespace

std::vector<Partition> partitions_of(int n)
{
    if (n < 0) throw ValidationError("cannot partition a negative integer");
    std::vector<Partition> out;
    Partition prefix;
    descend(n, n, prefix, out);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Multipartition> multipartitions_of(const std::vector<int> &sizes)
{
    std::vector<Multipartition> out{Multipartition{}};
    for (int e : sizes) {
        const auto parts = partitions_of(e);
        std::vector<Multipartition> next;
        next.reserve(out.size() * parts.size());
        for (const auto &prefix : out)
            for (const auto &p : parts) {
                next.push_back(prefix);
                next.back().push_back(p);
            }
        out = std::move(next);
    }
    return out;
}

std::uint64_t partition_count(int n)
{
    if (n < 0) return 0;
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::int64_t acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            acc += sign * p[m - g1];
            if (g2 <= m) acc += sign * p[m - g2];
        }
        p[m] = acc;
    }
    return static_cast<std::uint64_t>(p[n]);
}

std::vector<std::pair<int, int>> part_multiplicities(const Partition &p)
{
    std::vector<std::pair<int, int>> runs;
    for (int part : p) {
        if (!runs.empty() && runs.back().first == part)
            ++runs.back().second;
        else
            runs.emplace_back(part, 1);
    }
    return runs;
}

std::uint64_t factorial(int n)
{
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r = checked_mul(r, static_cast<std::uint64_t>(i));
    return r;
}

std::uint64_t centralizer_order(const Partition &p)
{
    std::uint64_t z = 1;
    for (auto [part, mult] : part_multiplicities(p)) {
        for (int i = 0; i < mult; ++i) z = checked_mul(z, static_cast<std::uint64_t>(part));
        z = checked_mul(z, factorial(mult));
    }
    return z;
}

} // namespace smoothdual
