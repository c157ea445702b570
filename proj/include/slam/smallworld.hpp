#ifndef SLAM_SMALLWORLD_HPP_
#define SLAM_SMALLWORLD_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "slam/lexical_graph.hpp"

namespace slam {

/// Raised when a metric has no value on the given graph.
class MetricUndefined : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Opt-in source sampling for the mean shortest-path length.
struct SampleSpec {
    std::size_t size = 0;    // number of traversal sources
    std::uint64_t seed = 0;
};

/**
 * Mean shortest-path length over ordered pairs of distinct vertices of the
 * largest component. Self-loops never shorten a path. With a SampleSpec
 * the mean is taken over `size` uniformly drawn sources instead of all of
 * them, deterministically for a fixed seed; a sample covering the whole
 * component reproduces the exact value. Throws MetricUndefined("no pairs")
 * when the largest component has fewer than 2 vertices.
 */
double mean_shortest_path(const LexicalGraph& g,
                          std::optional<SampleSpec> sample = std::nullopt);

/**
 * Mean over vertices with at least two non-loop neighbors of
 * (edges among neighbors) / (d*(d-1)/2). Loops are ignored throughout.
 * Throws MetricUndefined("C undefined") when no vertex qualifies.
 */
double clustering_coefficient(const LexicalGraph& g);

struct PowerLawFit {
    double alpha;        // slope of the log-log least-squares line
    double correlation;  // |Pearson r| of the fitted points
};

/**
 * Least-squares line through (log k, log count(k)) over the non-loop
 * degree histogram, degrees k >= 1 only. Throws
 * MetricUndefined("degenerate distribution") with fewer than 3 distinct
 * degree values.
 */
PowerLawFit degree_powerlaw_fit(const LexicalGraph& g);

/**
 * Small-world diagnostics of a graph. Metrics that are undefined on the
 * input are left empty and serialize as "nan".
 */
struct SmallWorldReport {
    std::size_t n = 0;
    std::size_t m = 0;  // loops excluded
    std::optional<double> mean_path;    // L
    std::optional<double> clustering;   // C
    std::optional<double> alpha;
    std::optional<double> correlation;
    bool sampled = false;
    std::size_t sample_size = 0;
    std::uint64_t seed = 0;

    /// Flat "key<TAB>value" lines: n, m, L, C, alpha, correlation,
    /// sampled, sample_size, seed.
    std::string serialize() const;
};

SmallWorldReport small_world_report(const LexicalGraph& g,
                                    std::optional<SampleSpec> sample = std::nullopt);

}  // namespace slam

#endif  // SLAM_SMALLWORLD_HPP_
