#ifndef SLAM_EVAL_HPP_
#define SLAM_EVAL_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "slam/lexeme.hpp"
#include "slam/lexical_graph.hpp"
#include "slam/resolver.hpp"
#include "slam/triple_store.hpp"

namespace slam {

struct GoldQuery {
    MetaphorQuery query;
    std::string film;
    std::vector<std::string> tags;
};

/// Conventional-lexeme sets per action film plus the queries scored
/// against them.
struct GoldData {
    std::map<std::string, std::vector<Lexeme>> films;  // film id -> sorted, deduped set
    std::vector<GoldQuery> queries;                    // input order
};

/**
 * Reads a gold file with two record kinds:
 *
 *   FILM\t<film_id>\t<label>[,<label>...]
 *   QUERY\t<film_id>\t<query-string>[\t<tag>[,<tag>...]]
 *
 * FILM records may appear anywhere; a QUERY referencing an id with no FILM
 * record raises ParseError with its line number, as do malformed query
 * strings and empty gold sets. Queries take their parameters from params.
 */
GoldData load_gold(std::istream& in, QueryParams params = {});
GoldData load_gold_file(const std::filesystem::path& path, QueryParams params = {});

struct EvalRow {
    int n;
    std::size_t hits;  // queries with a conventional solution in the top n
    double precision;
    double recall;
    double f_measure;
};

struct QueryOutcome {
    MetaphorQuery query;
    std::string film;
    Diagnostic diagnostic;
    std::vector<Solution> solutions;
    int first_hit_rank;  // 1-based rank of the first conventional solution, 0 if none
};

struct EvalReport {
    std::vector<EvalRow> rows;          // n = 1..n_max
    std::size_t total_queries = 0;      // after exclusion
    std::size_t with_solution = 0;      // queries with at least one solution
    bool degenerate_precision = false;  // with_solution == 0; precision reported as 0
    std::vector<QueryOutcome> outcomes; // input order, excluded queries omitted

    /**
     * TSV metric table (n, precision, recall, f_measure; 3 decimals),
     * count lines, then one "Q" row per query with its per-n hit flags and
     * solutions.
     */
    std::string serialize() const;
};

/**
 * Scores each non-excluded query at n = 1..n_max. A query scores a hit at
 * n when its top-n solutions contain a conventional lexeme of its film;
 * precision divides hits by the queries with any solution, recall by all
 * non-excluded queries, and the f-measure is their harmonic mean. Queries
 * carrying any tag in exclude_tags leave both denominators.
 */
EvalReport evaluate(const LexicalGraph& g, const TripleStore& store, const GoldData& gold,
                    int n_max, const std::vector<std::string>& exclude_tags = {});

}  // namespace slam

#endif  // SLAM_EVAL_HPP_
