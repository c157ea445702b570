#include "slam/prox.hpp"

#include <algorithm>
#include <stdexcept>

#include "slam/errors.hpp"

namespace slam {

using VertexId = LexicalGraph::VertexId;

const NeighborhoodEntry* RankedNeighborhood::find(std::string_view label) const {
    for (const auto& e : entries)
        if (e.lexeme.label() == label) return &e;
    return nullptr;
}

WalkDistribution walk(const LexicalGraph& g, const Lexeme& r, int steps) {
    const auto id = g.find(r.label());
    if (!id) throw UnknownLexemeError(r.label());
    if (steps < 0) throw std::invalid_argument("negative walk length");

    const auto n = g.vertex_count();
    std::vector<double> cur(n, 0.0);
    cur[*id] = 1.0;
    if (steps == 0) return {r, steps, std::move(cur)};

    std::vector<double> next(n, 0.0);
    for (int t = 0; t < steps; ++t) {
        std::fill(next.begin(), next.end(), 0.0);
        for (VertexId u = 0; u < n; ++u) {
            if (cur[u] == 0.0) continue;
            const double share = cur[u] / g.degree(u);
            for (const VertexId v : g.neighbors(u)) next[v] += share;
        }
        std::swap(cur, next);
    }
    return {r, steps, std::move(cur)};
}

RankedNeighborhood diam(const LexicalGraph& g, const Lexeme& r, int steps, int radius) {
    if (radius < 1) throw std::invalid_argument("radius must be positive");

    const WalkDistribution dist = walk(g, r, steps);
    auto order = reachable_from(g, *g.find(r.label()));

    const auto take = std::min<std::size_t>(static_cast<std::size_t>(radius), order.size());
    std::partial_sort(order.begin(), order.begin() + take, order.end(),
                      [&dist](VertexId a, VertexId b) {
                          if (dist.prob[a] != dist.prob[b]) return dist.prob[a] > dist.prob[b];
                          return a < b;  // ids follow label order
                      });

    RankedNeighborhood nb{r, steps, radius, {}};
    nb.entries.reserve(take);
    for (std::size_t i = 0; i < take; ++i)
        nb.entries.push_back({g.lexeme(order[i]), static_cast<int>(i + 1), dist.prob[order[i]]});
    return nb;
}

}  // namespace slam
