#include "slam/lexical_graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <stdexcept>

#include "line_reader.hpp"
#include "slam/errors.hpp"

namespace slam {

namespace {
using VertexId = LexicalGraph::VertexId;
}

LexicalGraph LexicalGraph::build(const std::vector<std::pair<Lexeme, Lexeme>>& edges) {
    if (edges.empty()) throw std::invalid_argument("empty graph");

    std::vector<Lexeme> verts;
    verts.reserve(edges.size() * 2);
    for (const auto& [a, b] : edges) {
        verts.push_back(a);
        verts.push_back(b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    LexicalGraph g;
    g.lexemes_ = std::move(verts);
    const auto n = g.lexemes_.size();

    auto id_of = [&g](const Lexeme& l) {
        return static_cast<VertexId>(
            std::lower_bound(g.lexemes_.begin(), g.lexemes_.end(), l) - g.lexemes_.begin());
    };

    // Orientation-normalized edge set, reflexive closure included.
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(edges.size() + n);
    for (const auto& [a, b] : edges) {
        const VertexId u = id_of(a), v = id_of(b);
        pairs.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (VertexId v = 0; v < n; ++v) pairs.emplace_back(v, v);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    std::vector<std::size_t> deg(n, 0);
    for (const auto& [u, v] : pairs) {
        ++deg[u];
        if (u != v) {
            ++deg[v];
            ++g.edge_count_;
        }
    }

    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adjacency_.resize(g.offsets_[n]);

    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : pairs) {
        g.adjacency_[cursor[u]++] = v;
        if (u != v) g.adjacency_[cursor[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v)
        std::sort(g.adjacency_.begin() + g.offsets_[v], g.adjacency_.begin() + g.offsets_[v + 1]);

    return g;
}

std::optional<VertexId> LexicalGraph::find(std::string_view label) const {
    auto it = std::lower_bound(lexemes_.begin(), lexemes_.end(), label,
                               [](const Lexeme& l, std::string_view s) { return l.label() < s; });
    if (it == lexemes_.end() || it->label() != label) return std::nullopt;
    return static_cast<VertexId>(it - lexemes_.begin());
}

bool LexicalGraph::adjacent(VertexId u, VertexId v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint32_t ComponentMap::size_of(LexicalGraph::VertexId id) const {
    auto it = std::lower_bound(sizes.begin(), sizes.end(), id,
                               [](const auto& p, LexicalGraph::VertexId v) { return p.first < v; });
    if (it == sizes.end() || it->first != id)
        throw std::invalid_argument("no component with id " + std::to_string(id));
    return it->second;
}

LexicalGraph load_graph(std::istream& in) {
    std::vector<std::pair<Lexeme, Lexeme>> edges;
    detail::LineReader reader(in);
    while (reader.next()) {
        const auto fields = detail::split_tabs(reader.line());
        if (fields.size() != 2)
            throw ParseError(reader.line_no(), "expected 2 tab-separated labels, got " +
                                                   std::to_string(fields.size()) + " fields");
        try {
            edges.emplace_back(Lexeme::parse(fields[0]), Lexeme::parse(fields[1]));
        } catch (const std::invalid_argument& e) {
            throw ParseError(reader.line_no(), e.what());
        }
    }
    return LexicalGraph::build(edges);
}

LexicalGraph load_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path.string());
    return load_graph(in);
}

ComponentMap components(const LexicalGraph& g) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    constexpr VertexId kUnset = static_cast<VertexId>(-1);

    ComponentMap cm;
    cm.component.assign(n, kUnset);

    std::vector<VertexId> queue;
    for (VertexId root = 0; root < n; ++root) {
        if (cm.component[root] != kUnset) continue;
        std::uint32_t size = 0;
        queue.assign(1, root);
        cm.component[root] = root;
        while (!queue.empty()) {
            const VertexId u = queue.back();
            queue.pop_back();
            ++size;
            for (const VertexId v : g.neighbors(u)) {
                if (cm.component[v] == kUnset) {
                    cm.component[v] = root;
                    queue.push_back(v);
                }
            }
        }
        cm.sizes.emplace_back(root, size);
    }

    cm.largest = cm.sizes.front().first;
    std::uint32_t best = cm.sizes.front().second;
    for (const auto& [id, size] : cm.sizes) {
        if (size > best) {
            best = size;
            cm.largest = id;
        }
    }
    return cm;
}

std::vector<VertexId> reachable_from(const LexicalGraph& g, VertexId start) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> stack{start};
    seen[start] = true;
    std::vector<VertexId> out;
    while (!stack.empty()) {
        const VertexId u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (const VertexId v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

LexicalGraph restrict_to_component(const LexicalGraph& g, const Lexeme& r) {
    const auto id = g.find(r.label());
    if (!id) throw UnknownLexemeError(r.label());

    const auto comp = reachable_from(g, *id);
    std::vector<bool> keep(g.vertex_count(), false);
    for (const VertexId v : comp) keep[v] = true;

    std::vector<std::pair<Lexeme, Lexeme>> edges;
    for (const VertexId u : comp) {
        for (const VertexId v : g.neighbors(u)) {
            if (v < u || !keep[v]) continue;
            edges.emplace_back(g.lexeme(u), g.lexeme(v));
        }
    }
    return LexicalGraph::build(edges);
}

}  // namespace slam
