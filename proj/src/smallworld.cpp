#include "slam/smallworld.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "slam/text_format.hpp"

namespace slam {

using VertexId = LexicalGraph::VertexId;

namespace {

std::vector<VertexId> largest_component_members(const LexicalGraph& g) {
    const ComponentMap cm = components(g);
    std::vector<VertexId> comp;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (cm.component[v] == cm.largest) comp.push_back(v);
    return comp;
}

// Sum of BFS distances from src to every other vertex of its component.
std::uint64_t distance_sum(const LexicalGraph& g, VertexId src,
                           std::vector<std::uint32_t>& dist, std::vector<VertexId>& queue) {
    constexpr std::uint32_t kUnreached = static_cast<std::uint32_t>(-1);
    std::fill(dist.begin(), dist.end(), kUnreached);
    queue.clear();
    queue.push_back(src);
    dist[src] = 0;
    std::uint64_t sum = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId u = queue[head];
        for (const VertexId v : g.neighbors(u)) {
            if (dist[v] != kUnreached) continue;
            dist[v] = dist[u] + 1;
            sum += dist[v];
            queue.push_back(v);
        }
    }
    return sum;
}

}  // namespace

double mean_shortest_path(const LexicalGraph& g, std::optional<SampleSpec> sample) {
    const auto comp = largest_component_members(g);
    const std::size_t comp_size = comp.size();
    if (comp_size < 2) throw MetricUndefined("no pairs");

    std::vector<VertexId> sources;
    if (sample && sample->size < comp_size) {
        if (sample->size == 0) throw std::invalid_argument("sample size must be positive");
        // Selection sampling over the component, stable for a fixed seed.
        std::mt19937_64 rng(sample->seed);
        std::size_t need = sample->size, left = comp_size;
        for (const VertexId v : comp) {
            if (rng() % left < need) {
                sources.push_back(v);
                if (--need == 0) break;
            }
            --left;
        }
    } else {
        sources = comp;
    }

    std::uint64_t total = 0;
    std::vector<std::uint32_t> dist(g.vertex_count());
    std::vector<VertexId> queue;
    queue.reserve(comp_size);
    for (const VertexId src : sources) total += distance_sum(g, src, dist, queue);

    return static_cast<double>(total) /
           (static_cast<double>(sources.size()) * static_cast<double>(comp_size - 1));
}

double clustering_coefficient(const LexicalGraph& g) {
    double sum = 0.0;
    std::size_t counted = 0;
    std::vector<VertexId> nbrs;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        nbrs.clear();
        for (const VertexId u : g.neighbors(v))
            if (u != v) nbrs.push_back(u);
        const std::size_t d = nbrs.size();
        if (d < 2) continue;
        std::size_t links = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if (g.adjacent(nbrs[i], nbrs[j])) ++links;
        sum += 2.0 * static_cast<double>(links) / (static_cast<double>(d) * static_cast<double>(d - 1));
        ++counted;
    }
    if (counted == 0) throw MetricUndefined("C undefined");
    return sum / static_cast<double>(counted);
}

PowerLawFit degree_powerlaw_fit(const LexicalGraph& g) {
    std::map<std::uint32_t, std::uint64_t> histogram;  // non-loop degree -> vertex count
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const std::uint32_t k = g.degree(v) - 1;  // every vertex carries exactly one loop
        if (k >= 1) ++histogram[k];
    }
    if (histogram.size() < 3) throw MetricUndefined("degenerate distribution");

    const double np = static_cast<double>(histogram.size());
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (const auto& [k, count] : histogram) {
        const double x = std::log(static_cast<double>(k));
        const double y = std::log(static_cast<double>(count));
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }
    const double cov = sxy - sx * sy / np;
    const double varx = sxx - sx * sx / np;
    const double vary = syy - sy * sy / np;

    PowerLawFit fit;
    fit.alpha = cov / varx;
    // A flat histogram is fitted exactly by the horizontal line.
    fit.correlation = vary == 0.0 ? 1.0 : std::abs(cov / std::sqrt(varx * vary));
    return fit;
}

std::string SmallWorldReport::serialize() const {
    auto value = [](const std::optional<double>& v) {
        return v ? format_general(*v) : std::string("nan");
    };
    std::string out;
    out += "n\t" + std::to_string(n) + "\n";
    out += "m\t" + std::to_string(m) + "\n";
    out += "L\t" + value(mean_path) + "\n";
    out += "C\t" + value(clustering) + "\n";
    out += "alpha\t" + value(alpha) + "\n";
    out += "correlation\t" + value(correlation) + "\n";
    out += "sampled\t" + std::string(sampled ? "1" : "0") + "\n";
    out += "sample_size\t" + std::to_string(sample_size) + "\n";
    out += "seed\t" + std::to_string(seed) + "\n";
    return out;
}

SmallWorldReport small_world_report(const LexicalGraph& g, std::optional<SampleSpec> sample) {
    SmallWorldReport report;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    if (sample) {
        report.sampled = true;
        report.sample_size = sample->size;
        report.seed = sample->seed;
    }
    try {
        report.mean_path = mean_shortest_path(g, sample);
    } catch (const MetricUndefined&) {
    }
    try {
        report.clustering = clustering_coefficient(g);
    } catch (const MetricUndefined&) {
    }
    try {
        const auto fit = degree_powerlaw_fit(g);
        report.alpha = fit.alpha;
        report.correlation = fit.correlation;
    } catch (const MetricUndefined&) {
    }
    return report;
}

}  // namespace slam
