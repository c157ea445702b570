#ifndef SLAM_LEXICAL_GRAPH_HPP_
#define SLAM_LEXICAL_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "slam/lexeme.hpp"

namespace slam {

/**
 * Undirected, reflexive synonym graph over lexeme labels.
 *
 * Vertex ids are dense and assigned in lexicographic label order, so two
 * loads of the same edge set produce identical ids no matter how the input
 * lines were ordered or oriented. Every vertex carries a self-loop; the
 * loop contributes 1 to its degree but is excluded from edge_count().
 */
class LexicalGraph {
public:
    using VertexId = std::uint32_t;

    /**
     * Assembles a graph from label pairs: applies symmetric closure,
     * collapses duplicate edges, and adds a self-loop to every vertex.
     * Throws std::invalid_argument("empty graph") when edges is empty.
     */
    static LexicalGraph build(const std::vector<std::pair<Lexeme, Lexeme>>& edges);

    std::size_t vertex_count() const noexcept { return lexemes_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::optional<VertexId> find(std::string_view label) const;
    const Lexeme& lexeme(VertexId v) const { return lexemes_[v]; }

    /// Sorted neighbor ids, self included.
    std::span<const VertexId> neighbors(VertexId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::uint32_t degree(VertexId v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }
    bool adjacent(VertexId u, VertexId v) const;

    friend bool operator==(const LexicalGraph&, const LexicalGraph&) = default;

private:
    LexicalGraph() = default;

    std::vector<Lexeme> lexemes_;        // sorted by label; index = vertex id
    std::vector<std::size_t> offsets_;   // CSR row starts, size n+1
    std::vector<VertexId> adjacency_;    // CSR columns, sorted per row
    std::size_t edge_count_ = 0;         // undirected edges, loops excluded
};

/// Connected components, each keyed by its smallest member id.
struct ComponentMap {
    std::vector<LexicalGraph::VertexId> component;  // per vertex: its component id
    std::vector<std::pair<LexicalGraph::VertexId, std::uint32_t>> sizes;  // (id, size), ascending id
    LexicalGraph::VertexId largest = 0;  // id of the largest component; ties go to the smaller id

    std::uint32_t size_of(LexicalGraph::VertexId id) const;
};

/**
 * Reads a tab-separated edge list: one "<label>\t<label>" edge per line,
 * lines starting with '#' and blank lines skipped. Throws ParseError with
 * the offending 1-based line number on malformed lines, and
 * std::invalid_argument("empty graph") when no edges survive.
 */
LexicalGraph load_graph(std::istream& in);
LexicalGraph load_graph_file(const std::filesystem::path& path);

ComponentMap components(const LexicalGraph& g);

/// Ids reachable from start (start included), ascending.
std::vector<LexicalGraph::VertexId> reachable_from(const LexicalGraph& g,
                                                   LexicalGraph::VertexId start);

/**
 * Induced subgraph on the component containing r, with ids re-densified
 * and label order preserved. Throws UnknownLexemeError when r is absent.
 */
LexicalGraph restrict_to_component(const LexicalGraph& g, const Lexeme& r);

}  // namespace slam

#endif  // SLAM_LEXICAL_GRAPH_HPP_
