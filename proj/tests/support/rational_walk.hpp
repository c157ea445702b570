#ifndef SLAM_TESTS_SUPPORT_RATIONAL_WALK_HPP_
#define SLAM_TESTS_SUPPORT_RATIONAL_WALK_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "slam/lexeme.hpp"
#include "slam/lexical_graph.hpp"

namespace slam::testing {

/// The exact-arithmetic budget ran out (component too large, or values
/// outgrew the 128-bit accumulators).
class OracleBudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact walk distribution: prob[v] = num[v] / den, indexed by vertex id.
struct RationalDistribution {
    std::vector<unsigned __int128> num;
    unsigned __int128 den = 1;

    double value(std::size_t v) const;
    /// Fully reduced fraction; throws OracleBudgetError past 64 bits.
    std::pair<std::uint64_t, std::uint64_t> reduced(std::size_t v) const;
};

/**
 * Reference semantics of slam::walk in exact integer arithmetic: with
 * L = lcm of the component's degrees, the integer matrix N has
 * N[u][v] = L/d(u) for v adjacent to u, and the result is
 * e_r * N^steps / L^steps, applied as `steps` explicit multiplications.
 * Refuses components larger than 1000 vertices and any input whose exact
 * values would overflow. Test-only code.
 */
RationalDistribution walk_oracle(const LexicalGraph& g, const Lexeme& r, int steps);

}  // namespace slam::testing

#endif  // SLAM_TESTS_SUPPORT_RATIONAL_WALK_HPP_
