#include "support/rational_walk.hpp"

#include <algorithm>
#include <limits>

#include "slam/errors.hpp"

namespace slam::testing {

namespace {

using u128 = unsigned __int128;

constexpr u128 kMax128 = ~static_cast<u128>(0);

u128 checked_mul(u128 a, u128 b) {
    if (a != 0 && b > kMax128 / a)
        throw OracleBudgetError("oracle budget exceeded: 128-bit overflow");
    return a * b;
}

u128 checked_add(u128 a, u128 b) {
    const u128 s = a + b;
    if (s < a) throw OracleBudgetError("oracle budget exceeded: 128-bit overflow");
    return s;
}

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

}  // namespace

double RationalDistribution::value(std::size_t v) const {
    return static_cast<double>(num[v]) / static_cast<double>(den);
}

std::pair<std::uint64_t, std::uint64_t> RationalDistribution::reduced(std::size_t v) const {
    u128 n = num[v];
    if (n == 0) return {0, 1};
    u128 d = den;
    const u128 g = gcd128(n, d);
    n /= g;
    d /= g;
    if (n > std::numeric_limits<std::uint64_t>::max() ||
        d > std::numeric_limits<std::uint64_t>::max())
        throw OracleBudgetError("reduced fraction exceeds 64 bits");
    return {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d)};
}

RationalDistribution walk_oracle(const LexicalGraph& g, const Lexeme& r, int steps) {
    const auto id = g.find(r.label());
    if (!id) throw UnknownLexemeError(r.label());
    if (steps < 0) throw std::invalid_argument("negative walk length");

    const auto comp = reachable_from(g, *id);
    if (comp.size() > 1000)
        throw OracleBudgetError("oracle budget exceeded: component larger than 1000 vertices");

    u128 scale = 1;  // lcm of the component's degrees
    for (const auto v : comp) {
        const u128 d = g.degree(v);
        scale = checked_mul(scale / gcd128(scale, d), d);
    }

    RationalDistribution dist;
    dist.num.assign(g.vertex_count(), 0);
    dist.num[*id] = 1;

    std::vector<u128> next(g.vertex_count(), 0);
    for (int t = 0; t < steps; ++t) {
        // Gather formulation: the in-edges of v are exactly its neighbor
        // list because the adjacency is symmetric.
        for (const auto v : comp) {
            u128 acc = 0;
            for (const auto u : g.neighbors(v))
                if (dist.num[u] != 0)
                    acc = checked_add(acc, checked_mul(dist.num[u], scale / g.degree(u)));
            next[v] = acc;
        }
        for (const auto v : comp) {
            dist.num[v] = next[v];
            next[v] = 0;
        }
        dist.den = checked_mul(dist.den, scale);
    }
    return dist;
}

}  // namespace slam::testing
