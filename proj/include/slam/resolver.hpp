#ifndef SLAM_RESOLVER_HPP_
#define SLAM_RESOLVER_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slam/lexeme.hpp"
#include "slam/lexical_graph.hpp"
#include "slam/triple_store.hpp"

namespace slam {

/// Default parameters: 3-step walks, a 40-lexeme paradigmatic radius,
/// triple count at least 3, lemma frequency at most 15000.
struct QueryParams {
    int steps = 3;
    int radius = 40;
    std::uint64_t min_triple_count = 3;
    std::uint64_t max_lemma_freq = 15000;
};

class QueryFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The asterisk marked the dependent; only governor-focus queries resolve.
class UnsupportedFocusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * A metaphorical triple with the focus on the governor, written
 * "<focus>*|<relation>|<dependent>", e.g. "V.miauler*|suj|N.porte".
 */
struct MetaphorQuery {
    Lexeme focus;
    std::string relation;
    Lexeme dependent;
    QueryParams params;

    /**
     * Parses the text form. Exactly one of the two lexemes may carry the
     * trailing asterisk; a dependent-side asterisk raises
     * UnsupportedFocusError, any other irregularity QueryFormatError.
     */
    static MetaphorQuery parse(std::string_view text, QueryParams params = {});

    /// Canonical text form.
    std::string text() const;
};

enum class Diagnostic {
    ok,
    focus_not_in_graph,
    no_syntagmatic_candidates,
    empty_intersection,
};

std::string_view to_string(Diagnostic d);

struct Solution {
    Lexeme lexeme;
    std::uint64_t triple_count;
    int proxemic_rank;
};

/**
 * Substitute lexemes for a metaphorical triple, ordered by descending
 * triple count with ties broken by ascending proxemic rank, then label.
 * Failure modes come back as an empty list with a diagnostic, never an
 * exception.
 */
struct SolutionList {
    MetaphorQuery query;
    std::vector<Solution> solutions;
    Diagnostic diagnostic = Diagnostic::ok;
};

/**
 * Intersects the syntagmatic candidate set of (relation, dependent) with
 * the focus's ranked walk neighborhood. Every solution shares the focus's
 * category, has triple count >= min_triple_count, lemma frequency
 * <= max_lemma_freq, and proxemic rank <= radius; the focus itself is a
 * legitimate solution.
 */
SolutionList resolve(const LexicalGraph& g, const TripleStore& store,
                     const MetaphorQuery& q);

/// Prefix of length min(n, size); n must be positive. Diagnostic preserved.
SolutionList top_n(SolutionList list, std::size_t n);

}  // namespace slam

#endif  // SLAM_RESOLVER_HPP_
