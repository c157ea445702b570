#ifndef SLAM_PROX_HPP_
#define SLAM_PROX_HPP_

#include <string_view>
#include <vector>

#include "slam/lexeme.hpp"
#include "slam/lexical_graph.hpp"

namespace slam {

/**
 * Distribution of a degree-normalized random walk after a fixed number of
 * steps: prob[s] is the probability that a walker started on `start` sits
 * on vertex s after `steps` transitions, each transition picking one of
 * the current vertex's neighbors (self included) uniformly.
 *
 * prob is indexed by vertex id of the graph the walk ran on; entries
 * outside the start vertex's component are exactly zero.
 */
struct WalkDistribution {
    Lexeme start;
    int steps;
    std::vector<double> prob;
};

struct NeighborhoodEntry {
    Lexeme lexeme;
    int rank;  // 1-based proxemic rank
    double probability;
};

/**
 * The best-ranked vertices of the start vertex's component under the walk
 * distribution: probabilities are non-increasing along entries, and equal
 * probabilities are ordered by label.
 */
struct RankedNeighborhood {
    Lexeme start;
    int steps;
    int radius;
    std::vector<NeighborhoodEntry> entries;  // min(radius, component size) of them

    /// Entry for a label, or nullptr when it did not make the cut.
    const NeighborhoodEntry* find(std::string_view label) const;
};

/**
 * Runs `steps` propagation sweeps of the walk from r. steps == 0 returns
 * the indicator of r; negative steps throw std::invalid_argument. Throws
 * UnknownLexemeError when r is not a vertex.
 */
WalkDistribution walk(const LexicalGraph& g, const Lexeme& r, int steps);

/**
 * Top-`radius` ranking of r's component by descending walk probability,
 * label-ordered at ties. radius must be positive.
 */
RankedNeighborhood diam(const LexicalGraph& g, const Lexeme& r, int steps, int radius);

}  // namespace slam

#endif  // SLAM_PROX_HPP_
