// Command-line front end: graph-stats, prox, triples-build, resolve, eval.
//
// Exit codes: 0 success, 1 usage or input-format error, 2 missing
// resource or unknown lexeme. All stdout is deterministic for fixed
// inputs and flags.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slam/errors.hpp"
#include "slam/eval.hpp"
#include "slam/lexical_graph.hpp"
#include "slam/prox.hpp"
#include "slam/resolver.hpp"
#include "slam/smallworld.hpp"
#include "slam/text_format.hpp"
#include "slam/triple_store.hpp"

namespace {

struct Options {
    std::string graph;
    std::string triples;
    std::string lemma_freq;
    std::string snapshot;
    std::string gold;
    std::string corpus_id;
    std::string out;
    std::string lexeme;
    std::string query;
    std::string exclude_tags;
    slam::QueryParams params;
    int n_max = 3;
    std::uint64_t sample_size = 0;
    std::uint64_t seed = 0;
    bool sampling = false;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

slam::TripleStore open_store(const Options& opt) {
    if (!opt.snapshot.empty()) return slam::TripleStore::load_snapshot_file(opt.snapshot);
    if (opt.triples.empty() || opt.lemma_freq.empty())
        throw CLI::ValidationError("resolve/eval need --snapshot or --triples with --lemma-freq");
    const std::string id =
        opt.corpus_id.empty() ? std::filesystem::path(opt.triples).stem().string() : opt.corpus_id;
    return slam::TripleStore::build_from_files(opt.triples, opt.lemma_freq, id);
}

std::vector<std::string> split_tags(const std::string& csv) {
    std::vector<std::string> tags;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const auto comma = csv.find(',', pos);
        const auto part = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!part.empty()) tags.push_back(part);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return tags;
}

int cmd_graph_stats(const Options& opt) {
    const auto g = slam::load_graph_file(opt.graph);
    std::optional<slam::SampleSpec> sample;
    if (opt.sampling) sample = slam::SampleSpec{opt.sample_size, opt.seed};
    emit(slam::small_world_report(g, sample).serialize(), opt.out);
    return 0;
}

int cmd_prox(const Options& opt) {
    const auto g = slam::load_graph_file(opt.graph);
    const auto nb = slam::diam(g, slam::Lexeme::parse(opt.lexeme), opt.params.steps,
                               opt.params.radius);
    std::string text;
    for (const auto& e : nb.entries)
        text += std::to_string(e.rank) + "\t" + e.lexeme.label() + "\t" +
                slam::format_general(e.probability) + "\n";
    emit(text, opt.out);
    return 0;
}

int cmd_triples_build(const Options& opt) {
    const std::string id =
        opt.corpus_id.empty() ? std::filesystem::path(opt.triples).stem().string() : opt.corpus_id;
    const auto store = slam::TripleStore::build_from_files(opt.triples, opt.lemma_freq, id);
    store.save_snapshot_file(opt.snapshot);
    if (store.triple_count() == 0) std::cerr << "warning: empty triple store\n";
    emit("triples\t" + std::to_string(store.triple_count()) + "\nlexemes\t" +
             std::to_string(store.distinct_lexemes()) + "\n",
         opt.out);
    return 0;
}

int cmd_resolve(const Options& opt) {
    const auto g = slam::load_graph_file(opt.graph);
    const auto store = open_store(opt);
    const auto query = slam::MetaphorQuery::parse(opt.query, opt.params);
    const auto result = slam::resolve(g, store, query);

    std::string text;
    for (std::size_t i = 0; i < result.solutions.size(); ++i) {
        const auto& s = result.solutions[i];
        text += std::to_string(i + 1) + "\t" + s.lexeme.label() + "\t" +
                std::to_string(s.triple_count) + "\t" + std::to_string(s.proxemic_rank) + "\n";
    }
    emit(text, opt.out);
    if (result.solutions.empty()) std::cerr << slam::to_string(result.diagnostic) << "\n";
    return 0;
}

int cmd_eval(const Options& opt) {
    const auto g = slam::load_graph_file(opt.graph);
    const auto store = open_store(opt);
    const auto gold = slam::load_gold_file(opt.gold, opt.params);
    const auto report = slam::evaluate(g, store, gold, opt.n_max, split_tags(opt.exclude_tags));
    emit(report.serialize(), opt.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexical metaphor resolution over a synonym graph and a triple corpus"};
    app.require_subcommand(1);

    Options opt;

    auto add_params = [&opt](CLI::App* cmd) {
        cmd->add_option("--lambda", opt.params.steps, "walk length")->check(CLI::PositiveNumber);
        cmd->add_option("--gamma", opt.params.radius, "paradigmatic radius")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--alpha", opt.params.min_triple_count, "minimum triple count")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--beta", opt.params.max_lemma_freq, "maximum lemma frequency")
            ->check(CLI::PositiveNumber);
    };
    auto add_store_inputs = [&opt](CLI::App* cmd) {
        cmd->add_option("--triples", opt.triples, "triples TSV");
        cmd->add_option("--lemma-freq", opt.lemma_freq, "lemma-frequency TSV");
        cmd->add_option("--snapshot", opt.snapshot, "triple-store snapshot");
        cmd->add_option("--corpus-id", opt.corpus_id, "corpus id (default: triples file stem)");
    };

    auto* stats = app.add_subcommand("graph-stats", "small-world diagnostics of a synonym graph");
    stats->add_option("--graph", opt.graph, "edge-list TSV")->required();
    auto* size_opt = stats->add_option("--sample-size", opt.sample_size,
                                       "estimate L from this many traversal sources");
    stats->add_option("--seed", opt.seed, "sampling seed")->needs(size_opt);
    size_opt->needs("--seed");
    stats->add_option("--out", opt.out, "write the report here instead of stdout");

    auto* prox = app.add_subcommand("prox", "ranked walk neighborhood of a lexeme");
    prox->add_option("--graph", opt.graph, "edge-list TSV")->required();
    prox->add_option("lexeme", opt.lexeme, "start lexeme, e.g. V.peler")->required();
    add_params(prox);
    prox->add_option("--out", opt.out, "write the ranking here instead of stdout");

    auto* build = app.add_subcommand("triples-build", "index a triple corpus into a snapshot");
    build->add_option("--triples", opt.triples, "triples TSV")->required();
    build->add_option("--lemma-freq", opt.lemma_freq, "lemma-frequency TSV")->required();
    build->add_option("--snapshot", opt.snapshot, "snapshot output path")->required();
    build->add_option("--corpus-id", opt.corpus_id, "corpus id (default: triples file stem)");
    build->add_option("--out", opt.out, "write the summary here instead of stdout");

    auto* resolve = app.add_subcommand("resolve", "resolve a metaphorical triple");
    resolve->add_option("--graph", opt.graph, "edge-list TSV")->required();
    add_store_inputs(resolve);
    resolve->add_option("query", opt.query, "query, e.g. \"V.miauler*|suj|N.porte\"")->required();
    add_params(resolve);
    resolve->add_option("--out", opt.out, "write solutions here instead of stdout");

    auto* eval = app.add_subcommand("eval", "score queries against gold conventional sets");
    eval->add_option("--graph", opt.graph, "edge-list TSV")->required();
    add_store_inputs(eval);
    eval->add_option("--gold", opt.gold, "gold data TSV")->required();
    eval->add_option("--n-max", opt.n_max, "score the top 1..n_max solutions")
        ->check(CLI::PositiveNumber);
    eval->add_option("--exclude-tags", opt.exclude_tags, "drop queries carrying these tags (CSV)");
    add_params(eval);
    eval->add_option("--out", opt.out, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
        if (stats->parsed()) {
            opt.sampling = stats->count("--sample-size") > 0;
            return cmd_graph_stats(opt);
        }
        if (prox->parsed()) return cmd_prox(opt);
        if (build->parsed()) return cmd_triples_build(opt);
        if (resolve->parsed()) return cmd_resolve(opt);
        if (eval->parsed()) return cmd_eval(opt);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const slam::UnknownLexemeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const slam::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        const std::string what = e.what();
        std::cerr << "error: " << what << "\n";
        return what.rfind("cannot open", 0) == 0 ? 2 : 1;
    }
}
