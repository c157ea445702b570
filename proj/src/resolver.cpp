#include "slam/resolver.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "slam/prox.hpp"

namespace slam {

namespace {

Lexeme parse_query_lexeme(std::string_view field, std::string_view role) {
    try {
        return Lexeme::parse(field);
    } catch (const std::invalid_argument& e) {
        throw QueryFormatError(std::string(role) + ": " + e.what());
    }
}

}  // namespace

MetaphorQuery MetaphorQuery::parse(std::string_view text, QueryParams params) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const auto bar = text.find('|', pos);
        if (bar == std::string_view::npos) {
            fields.push_back(text.substr(pos));
            break;
        }
        fields.push_back(text.substr(pos, bar - pos));
        pos = bar + 1;
    }
    if (fields.size() != 3)
        throw QueryFormatError("expected <focus>*|<relation>|<dependent>, got " +
                               std::to_string(fields.size()) + " fields");

    auto starred = [](std::string_view f) { return !f.empty() && f.back() == '*'; };
    const bool focus_starred = starred(fields[0]);
    const bool dependent_starred = starred(fields[2]);

    if (focus_starred && dependent_starred)
        throw QueryFormatError("both lexemes carry the focus asterisk");
    if (!focus_starred && dependent_starred)
        throw UnsupportedFocusError(
            "unsupported focus position: only governor-focus queries (\"<X>*|<Y>|<Z>\") resolve");
    if (!focus_starred)
        throw QueryFormatError("no focus asterisk; mark the governor as \"<X>*\"");
    if (fields[1].empty() || fields[1].find('*') != std::string_view::npos)
        throw QueryFormatError("malformed relation \"" + std::string(fields[1]) + "\"");

    fields[0].remove_suffix(1);
    MetaphorQuery q{parse_query_lexeme(fields[0], "focus"), std::string(fields[1]),
                    parse_query_lexeme(fields[2], "dependent"), params};
    return q;
}

std::string MetaphorQuery::text() const {
    return focus.label() + "*|" + relation + "|" + dependent.label();
}

std::string_view to_string(Diagnostic d) {
    switch (d) {
        case Diagnostic::ok: return "ok";
        case Diagnostic::focus_not_in_graph: return "focus_not_in_graph";
        case Diagnostic::no_syntagmatic_candidates: return "no_syntagmatic_candidates";
        case Diagnostic::empty_intersection: return "empty_intersection";
    }
    return "?";
}

SolutionList resolve(const LexicalGraph& g, const TripleStore& store, const MetaphorQuery& q) {
    SolutionList result{q, {}, Diagnostic::ok};

    if (!g.find(q.focus.label())) {
        result.diagnostic = Diagnostic::focus_not_in_graph;
        return result;
    }

    const CandidateSet cand = store.candidates(q.focus, q.relation, q.dependent,
                                               q.params.min_triple_count, q.params.max_lemma_freq);
    if (cand.members.empty()) {
        result.diagnostic = Diagnostic::no_syntagmatic_candidates;
        return result;
    }

    const RankedNeighborhood nb = diam(g, q.focus, q.params.steps, q.params.radius);
    std::unordered_map<std::string_view, int> rank_of;
    rank_of.reserve(nb.entries.size());
    for (const auto& e : nb.entries) rank_of.emplace(e.lexeme.label(), e.rank);

    for (const auto& member : cand.members) {
        const auto it = rank_of.find(member.governor.label());
        if (it == rank_of.end()) continue;
        result.solutions.push_back({member.governor, member.triple_count, it->second});
    }
    if (result.solutions.empty()) {
        result.diagnostic = Diagnostic::empty_intersection;
        return result;
    }

    std::sort(result.solutions.begin(), result.solutions.end(),
              [](const Solution& a, const Solution& b) {
                  if (a.triple_count != b.triple_count) return a.triple_count > b.triple_count;
                  if (a.proxemic_rank != b.proxemic_rank) return a.proxemic_rank < b.proxemic_rank;
                  return a.lexeme < b.lexeme;
              });
    return result;
}

SolutionList top_n(SolutionList list, std::size_t n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (list.solutions.size() > n)
        list.solutions.erase(list.solutions.begin() + static_cast<std::ptrdiff_t>(n),
                             list.solutions.end());
    return list;
}

}  // namespace slam
