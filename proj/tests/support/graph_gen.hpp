#ifndef SLAM_TESTS_SUPPORT_GRAPH_GEN_HPP_
#define SLAM_TESTS_SUPPORT_GRAPH_GEN_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slam/lexeme.hpp"
#include "slam/lexical_graph.hpp"

namespace slam::testing {

/// Deterministic label for vertex i, zero-padded so label order follows i.
std::string vertex_label(std::string_view category, int i);

/// Edge list of a path v0-v1-...-v(n-1).
std::vector<std::pair<Lexeme, Lexeme>> path_edges(std::string_view category, int n);

/// Edge list of the complete graph on n vertices.
std::vector<std::pair<Lexeme, Lexeme>> complete_edges(std::string_view category, int n);

/// Random connected graph on exactly n >= 2 vertices: a random spanning
/// tree plus extra random edges. Loops come from the graph builder.
LexicalGraph random_connected_graph(std::mt19937_64& rng, int n, double extra_edge_rate = 0.3);

/// Random edge list that may span several components and two categories.
std::vector<std::pair<Lexeme, Lexeme>> random_edge_list(std::mt19937_64& rng, int max_n);

/// Ring lattice with k neighbors on each side, each edge rewired with the
/// given probability; rewires that would duplicate an edge are skipped.
LexicalGraph watts_strogatz(int n, int k, double rewire_prob, std::uint64_t seed);

/// Simple-graph realization of a degree sequence (largest-first matching).
/// Throws std::invalid_argument when the sequence is not graphical.
std::vector<std::pair<int, int>> havel_hakimi(std::vector<int> degrees);

}  // namespace slam::testing

#endif  // SLAM_TESTS_SUPPORT_GRAPH_GEN_HPP_
