#include "slam/eval.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <stdexcept>

#include "line_reader.hpp"
#include "slam/errors.hpp"
#include "slam/text_format.hpp"

namespace slam {

namespace {

std::vector<std::string> split_commas(std::string_view s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto comma = s.find(',', pos);
        const auto part = s.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        if (!part.empty()) out.emplace_back(part);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

GoldData load_gold(std::istream& in, QueryParams params) {
    struct PendingQuery {
        std::size_t line_no;
        std::string film;
        std::string text;
        std::vector<std::string> tags;
    };

    GoldData gold;
    std::vector<PendingQuery> pending;

    detail::LineReader reader(in);
    while (reader.next()) {
        const auto fields = detail::split_tabs(reader.line());
        if (fields[0] == "FILM") {
            if (fields.size() != 3)
                throw ParseError(reader.line_no(), "FILM record needs <film_id>\\t<labels>");
            if (fields[1].empty()) throw ParseError(reader.line_no(), "empty film id");
            auto& set = gold.films[std::string(fields[1])];
            for (const auto& label : split_commas(fields[2])) {
                try {
                    set.push_back(Lexeme::parse(label));
                } catch (const std::invalid_argument& e) {
                    throw ParseError(reader.line_no(), e.what());
                }
            }
            if (set.empty())
                throw ParseError(reader.line_no(), "film \"" + std::string(fields[1]) +
                                                       "\" has no gold lexemes");
        } else if (fields[0] == "QUERY") {
            if (fields.size() != 3 && fields.size() != 4)
                throw ParseError(reader.line_no(),
                                 "QUERY record needs <film_id>\\t<query>[\\t<tags>]");
            if (fields[1].empty()) throw ParseError(reader.line_no(), "empty film id");
            pending.push_back({reader.line_no(), std::string(fields[1]), std::string(fields[2]),
                               fields.size() == 4 ? split_commas(fields[3])
                                                  : std::vector<std::string>{}});
        } else {
            throw ParseError(reader.line_no(),
                             "unknown record kind \"" + std::string(fields[0]) + "\"");
        }
    }

    for (auto& set : gold.films) {
        std::sort(set.second.begin(), set.second.end());
        set.second.erase(std::unique(set.second.begin(), set.second.end()), set.second.end());
    }

    for (auto& p : pending) {
        if (!gold.films.count(p.film))
            throw ParseError(p.line_no, "query references unknown film \"" + p.film + "\"");
        try {
            gold.queries.push_back(
                {MetaphorQuery::parse(p.text, params), std::move(p.film), std::move(p.tags)});
        } catch (const std::runtime_error& e) {
            throw ParseError(p.line_no, e.what());
        }
    }
    return gold;
}

GoldData load_gold_file(const std::filesystem::path& path, QueryParams params) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open gold file: " + path.string());
    return load_gold(in, params);
}

EvalReport evaluate(const LexicalGraph& g, const TripleStore& store, const GoldData& gold,
                    int n_max, const std::vector<std::string>& exclude_tags) {
    if (n_max < 1) throw std::invalid_argument("n_max must be positive");
    if (gold.queries.empty()) throw std::invalid_argument("gold data has no queries");

    auto excluded = [&exclude_tags](const GoldQuery& q) {
        return std::any_of(q.tags.begin(), q.tags.end(), [&](const std::string& tag) {
            return std::find(exclude_tags.begin(), exclude_tags.end(), tag) != exclude_tags.end();
        });
    };

    EvalReport report;
    for (const auto& gq : gold.queries) {
        if (excluded(gq)) continue;
        ++report.total_queries;

        SolutionList resolved = resolve(g, store, gq.query);
        const auto& conventional = gold.films.at(gq.film);

        int first_hit = 0;
        for (std::size_t i = 0; i < resolved.solutions.size(); ++i) {
            if (std::binary_search(conventional.begin(), conventional.end(),
                                   resolved.solutions[i].lexeme)) {
                first_hit = static_cast<int>(i + 1);
                break;
            }
        }
        if (!resolved.solutions.empty()) ++report.with_solution;
        report.outcomes.push_back({gq.query, gq.film, resolved.diagnostic,
                                   std::move(resolved.solutions), first_hit});
    }
    if (report.total_queries == 0) throw std::invalid_argument("all queries excluded");

    report.degenerate_precision = report.with_solution == 0;
    for (int n = 1; n <= n_max; ++n) {
        std::size_t hits = 0;
        for (const auto& o : report.outcomes)
            if (o.first_hit_rank >= 1 && o.first_hit_rank <= n) ++hits;
        EvalRow row;
        row.n = n;
        row.hits = hits;
        row.precision = report.degenerate_precision
                            ? 0.0
                            : static_cast<double>(hits) / static_cast<double>(report.with_solution);
        row.recall = static_cast<double>(hits) / static_cast<double>(report.total_queries);
        const double pr = row.precision + row.recall;
        row.f_measure = pr > 0.0 ? 2.0 * row.precision * row.recall / pr : 0.0;
        report.rows.push_back(row);
    }
    return report;
}

std::string EvalReport::serialize() const {
    std::string out = "n\tprecision\trecall\tf_measure\n";
    for (const auto& row : rows) {
        out += std::to_string(row.n);
        out += '\t';
        out += format_fixed(row.precision, 3);
        out += '\t';
        out += format_fixed(row.recall, 3);
        out += '\t';
        out += format_fixed(row.f_measure, 3);
        out += '\n';
    }
    out += "# total_queries\t" + std::to_string(total_queries) + "\n";
    out += "# with_solution\t" + std::to_string(with_solution) + "\n";
    out += "# degenerate_precision\t" + std::string(degenerate_precision ? "1" : "0") + "\n";

    const std::size_t n_max = rows.size();
    for (const auto& o : outcomes) {
        out += "Q\t" + o.query.text() + "\t" + o.film + "\t" + std::string(to_string(o.diagnostic));
        out += '\t';
        for (std::size_t n = 1; n <= n_max; ++n)
            out += (o.first_hit_rank >= 1 && static_cast<std::size_t>(o.first_hit_rank) <= n) ? '1'
                                                                                              : '0';
        out += '\t';
        for (std::size_t i = 0; i < o.solutions.size(); ++i) {
            if (i) out += ';';
            const auto& s = o.solutions[i];
            out += s.lexeme.label() + ":" + std::to_string(s.triple_count) + ":" +
                   std::to_string(s.proxemic_rank);
        }
        out += '\n';
    }
    return out;
}

}  // namespace slam
