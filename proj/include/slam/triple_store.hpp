#ifndef SLAM_TRIPLE_STORE_HPP_
#define SLAM_TRIPLE_STORE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slam/lexeme.hpp"

namespace slam {

/// One distinct dependency triple with its corpus count.
struct Triple {
    Lexeme governor;
    std::string relation;
    Lexeme dependent;
    std::uint64_t count;
};

struct Candidate {
    Lexeme governor;
    std::uint64_t triple_count;
};

/// Echo of a candidate query plus the governors that passed its filters.
struct CandidateSet {
    Lexeme focus;
    std::string relation;
    Lexeme dependent;
    std::uint64_t min_triple_count;  // threshold the triple count must reach
    std::uint64_t max_lemma_freq;    // ceiling on the governor's corpus frequency
    std::vector<Candidate> members;  // sorted by governor label
};

/**
 * Indexed dependency triples plus lemma frequencies for one corpus.
 * Immutable once built; queries may run concurrently.
 *
 * Lexemes that occur in triples but are missing from the frequency input
 * get an estimated frequency (the sum of their triple counts as governor)
 * and answer true from frequency_estimated().
 */
class TripleStore {
public:
    /**
     * Builds from "<gov>\t<rel>\t<dep>\t<count>" triple lines and
     * "<label>\t<count>" frequency lines ('#' comments and blank lines
     * skipped, duplicate keys merged by summing). Throws ParseError with
     * the offending 1-based line number. An empty triples input yields a
     * valid empty store.
     */
    static TripleStore build(std::istream& triples, std::istream& lemma_freq,
                             std::string corpus_id);
    static TripleStore build_from_files(const std::filesystem::path& triples,
                                        const std::filesystem::path& lemma_freq,
                                        std::string corpus_id);

    /**
     * Versioned binary snapshot. Identical inputs serialize to identical
     * bytes; load_snapshot refuses data with a foreign magic or an
     * unsupported version.
     */
    void save_snapshot(std::ostream& out) const;
    void save_snapshot_file(const std::filesystem::path& path) const;
    static TripleStore load_snapshot(std::istream& in);
    static TripleStore load_snapshot_file(const std::filesystem::path& path);

    const std::string& corpus_id() const noexcept { return corpus_id_; }
    std::size_t triple_count() const noexcept { return triples_.size(); }

    /// All distinct triples, sorted by (relation, dependent, governor).
    std::span<const Triple> triples() const noexcept { return triples_; }

    /// Distinct lexemes occurring in triples, as governor or dependent.
    std::size_t distinct_lexemes() const;

    /// Count of the exact triple, 0 when absent.
    std::uint64_t count_of(const Lexeme& governor, std::string_view relation,
                           const Lexeme& dependent) const;

    /// Frequency from the input file, the estimate for flagged lexemes, or 0.
    std::uint64_t lemma_frequency(const Lexeme& l) const;
    bool frequency_estimated(const Lexeme& l) const;

    /**
     * Governors u of triples <u, relation, dependent> whose count reaches
     * min_count, whose category equals the focus's, and whose lemma
     * frequency does not exceed max_freq. The focus itself is eligible.
     */
    CandidateSet candidates(const Lexeme& focus, std::string_view relation,
                            const Lexeme& dependent, std::uint64_t min_count,
                            std::uint64_t max_freq) const;

private:
    struct LemmaEntry {
        std::string label;
        std::uint64_t freq;
        bool estimated;
    };

    TripleStore() = default;
    const LemmaEntry* lemma_entry(std::string_view label) const;

    std::string corpus_id_;
    std::vector<Triple> triples_;     // sorted by (relation, dependent, governor)
    std::vector<LemmaEntry> lemmas_;  // sorted by label
};

}  // namespace slam

#endif  // SLAM_TRIPLE_STORE_HPP_
