#include "smoothdual/qproj.hpp"

#include <algorithm>
#include <set>

#include "smoothdual/errors.hpp"

namespace smoothdual {

namespace {

// One block of a fiber point: a partition of e_i and its coordinates.
struct BlockPiece {
    Partition parts;
    std::vector<QScalar> coords;
    friend auto operator<=>(const BlockPiece &, const BlockPiece &) = default;
};

struct QString {
    int alpha;
    QScalar center;
};

bool take(std::vector<QScalar> &multiset, const QScalar &x)
{
    auto it = std::lower_bound(multiset.begin(), multiset.end(), x);
    if (it == multiset.end() || *it != x) return false;
    multiset.erase(it);
    return true;
}

BlockPiece canonical_piece(std::vector<QString> strings)
{
    std::sort(strings.begin(), strings.end(), [](const QString &a, const QString &b) {
        if (a.alpha != b.alpha) return a.alpha > b.alpha;
        return a.center < b.center;
    });
    BlockPiece piece;
    for (const auto &s : strings) {
        piece.parts.push_back(s.alpha);
        piece.coords.push_back(s.center);
    }
    return piece;
}

void decompose(std::vector<QScalar> &rest, std::vector<QString> &strings, const Rational &step,
               std::set<BlockPiece> &out)
{
    if (rest.empty()) {
        out.insert(canonical_piece(strings));
        return;
    }
    const QScalar bottom = rest.front();
    std::vector<QScalar> remaining(rest.begin() + 1, rest.end());
    std::vector<QScalar> removed;
    for (int alpha = 1;; ++alpha) {
        if (alpha > 1) {
            QScalar next = q_shift(bottom, step * Rational(alpha - 1));
            if (!take(remaining, next)) break;
            removed.push_back(next);
        }
        strings.push_back({alpha, q_shift(bottom, step * Rational(alpha - 1, 2))});
        std::vector<QScalar> branch = remaining;
        decompose(branch, strings, step, out);
        strings.pop_back();
    }
}

std::vector<BlockPiece> block_fiber(const std::vector<QScalar> &multiset, const Rational &step)
{
    std::vector<QScalar> rest = multiset;
    std::sort(rest.begin(), rest.end());
    std::vector<QString> strings;
    std::set<BlockPiece> out;
    decompose(rest, strings, step, out);
    return {out.begin(), out.end()};
}

Component component_for(const Stratum &s)
{
    std::vector<int> exps;
    for (const auto &p : s.cycle_type()) {
        int e = 0;
        for (int a : p) e += a;
        exps.push_back(e);
    }
    return Component::from_exponents(exps);
}

SymPoint project_with_steps(const StratumPoint &p, const std::vector<Rational> &steps)
{
    std::vector<std::vector<QScalar>> blocks;
    std::size_t idx = 0;
    const auto &ct = p.stratum().cycle_type();
    for (std::size_t b = 0; b < ct.size(); ++b) {
        std::vector<QScalar> multiset;
        for (int alpha : ct[b]) {
            auto s = q_string(alpha, p.coords()[idx++], steps[b]);
            multiset.insert(multiset.end(), s.begin(), s.end());
        }
        blocks.push_back(std::move(multiset));
    }
    return SymPoint(std::move(blocks));
}

} // namespace

StratumPoint::StratumPoint(Stratum stratum, std::vector<QScalar> coords)
    : stratum_(std::move(stratum)), coords_(std::move(coords))
{
    if (static_cast<int>(coords_.size()) != stratum_.torus_rank())
        throw ValidationError("stratum point needs " + std::to_string(stratum_.torus_rank()) + " coordinates, got " +
                              std::to_string(coords_.size()));
    std::size_t idx = 0;
    for (const auto &parts : stratum_.cycle_type())
        for (auto [alpha, m] : part_multiplicities(parts)) {
            std::sort(coords_.begin() + static_cast<long>(idx), coords_.begin() + static_cast<long>(idx + m));
            idx += m;
        }
}

std::strong_ordering operator<=>(const StratumPoint &a, const StratumPoint &b)
{
    if (auto c = a.stratum_ <=> b.stratum_; c != 0) return c;
    return a.coords_ <=> b.coords_;
}

SymPoint::SymPoint(std::vector<std::vector<QScalar>> blocks) : blocks_(std::move(blocks))
{
    if (blocks_.empty()) throw ValidationError("a point needs at least one block");
    for (auto &b : blocks_) {
        if (b.empty()) throw ValidationError("each block of a point needs at least one entry");
        std::sort(b.begin(), b.end());
    }
}

std::vector<int> SymPoint::sizes() const
{
    std::vector<int> out;
    for (const auto &b : blocks_) out.push_back(static_cast<int>(b.size()));
    return out;
}

std::vector<QScalar> q_string(int alpha, const QScalar &z, const Rational &step)
{
    if (alpha < 1) throw ValidationError("q-string length must be >= 1");
    std::vector<QScalar> out;
    out.reserve(alpha);
    // ascending: q^{(1-alpha)/2} z up to q^{(alpha-1)/2} z
    for (int i = alpha - 1; i >= 0; --i) out.push_back(q_shift(z, step * (Rational(alpha - 1, 2) - Rational(i))));
    return out;
}

SymPoint project(const StratumPoint &p)
{
    return project_with_steps(p, std::vector<Rational>(p.stratum().cycle_type().size(), Rational(1)));
}

SymPoint project(const StratumPoint &p, const Component &c)
{
    const auto &ct = p.stratum().cycle_type();
    if (ct.size() != c.blocks().size()) throw ValidationError("stratum point does not belong to the component");
    std::vector<Rational> steps;
    for (std::size_t b = 0; b < ct.size(); ++b) {
        int e = 0;
        for (int a : ct[b]) e += a;
        if (e != c.blocks()[b].exponent) throw ValidationError("stratum point does not belong to the component");
        steps.push_back(c.blocks()[b].q_step);
    }
    return project_with_steps(p, steps);
}

std::vector<StratumPoint> fiber(const SymPoint &y, const Component &c, const Limits &limits)
{
    check_degree(c, limits.max_fiber_degree, "fiber");
    if (y.sizes() != c.exponents()) throw ValidationError("point block sizes do not match the component exponents");

    std::vector<std::vector<BlockPiece>> per_block;
    for (std::size_t b = 0; b < c.blocks().size(); ++b)
        per_block.push_back(block_fiber(y.blocks()[b], c.blocks()[b].q_step));

    std::vector<StratumPoint> out;
    std::vector<std::size_t> pick(per_block.size(), 0);
    while (true) {
        Multipartition mp;
        std::vector<QScalar> coords;
        for (std::size_t b = 0; b < per_block.size(); ++b) {
            const auto &piece = per_block[b][pick[b]];
            mp.push_back(piece.parts);
            coords.insert(coords.end(), piece.coords.begin(), piece.coords.end());
        }
        out.emplace_back(Stratum(std::move(mp)), std::move(coords));

        std::size_t b = per_block.size();
        while (b > 0 && ++pick[b - 1] == per_block[b - 1].size()) pick[--b] = 0;
        if (b == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<StratumPoint>> fiber_batch(const std::vector<SymPoint> &ys, const Component &c,
                                                   const Limits &limits)
{
    check_degree(c, limits.max_fiber_degree, "fiber");
    std::vector<std::vector<StratumPoint>> out(ys.size());
    const long n = static_cast<long>(ys.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            out[i] = fiber(ys[i], c, limits);
        } catch (...) {
#pragma omp critical(smoothdual_fiber_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<std::vector<StratumPoint>> fiber_batch_serial(const std::vector<SymPoint> &ys, const Component &c,
                                                          const Limits &limits)
{
    std::vector<std::vector<StratumPoint>> out;
    out.reserve(ys.size());
    for (const auto &y : ys) out.push_back(fiber(y, c, limits));
    return out;
}

bool verify_section(const StratumPoint &p, const Component &c, const Limits &limits)
{
    const auto f = fiber(project(p, c), c, limits);
    return std::binary_search(f.begin(), f.end(), p);
}

bool verify_section(const StratumPoint &p, const Limits &limits)
{
    return verify_section(p, component_for(p.stratum()), limits);
}

} // namespace smoothdual
