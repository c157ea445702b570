#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "slam/errors.hpp"
#include "slam/lexeme.hpp"
#include "slam/lexical_graph.hpp"
#include "support/graph_gen.hpp"

using slam::Lexeme;
using slam::LexicalGraph;
using VertexId = LexicalGraph::VertexId;

namespace {

LexicalGraph graph_from(const std::string& text) {
    std::istringstream in(text);
    return slam::load_graph(in);
}

}  // namespace

TEST_SUITE("lexical-graph") {

TEST_CASE("lexeme labels split at the first dot") {
    const auto l = Lexeme::parse("N.pomme.de.terre");
    CHECK(l.category() == "N");
    CHECK(l.lemma() == "pomme.de.terre");
    CHECK(Lexeme::parse("V.peler") == Lexeme::parse("V.peler"));
    CHECK(Lexeme::parse("V.peler") != Lexeme::parse("N.peler"));

    CHECK_THROWS_AS(Lexeme::parse("peler"), std::invalid_argument);
    CHECK_THROWS_AS(Lexeme::parse(".peler"), std::invalid_argument);
    CHECK_THROWS_AS(Lexeme::parse("V."), std::invalid_argument);
    CHECK_THROWS_AS(Lexeme::parse(""), std::invalid_argument);
}

TEST_CASE("single edge gets closure and loops") {
    const auto g = graph_from("V.a\tV.b\n");
    REQUIRE(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);

    const auto a = g.find("V.a");
    const auto b = g.find("V.b");
    REQUIRE(a);
    REQUIRE(b);
    CHECK(g.degree(*a) == 2);
    CHECK(g.degree(*b) == 2);
    CHECK(g.adjacent(*a, *a));
    CHECK(g.adjacent(*b, *b));
    CHECK(g.adjacent(*a, *b));
    CHECK_FALSE(g.find("V.c"));
}

TEST_CASE("duplicate and reversed edges collapse") {
    const auto once = graph_from("V.a\tV.b\n");
    const auto twice = graph_from("V.a\tV.b\nV.b\tV.a\n");
    CHECK(once == twice);
}

TEST_CASE("vertex ids follow label order regardless of input order") {
    const auto g = graph_from("V.c\tV.a\nV.a\tV.b\n");
    CHECK(g.lexeme(0).label() == "V.a");
    CHECK(g.lexeme(1).label() == "V.b");
    CHECK(g.lexeme(2).label() == "V.c");
}

TEST_CASE("load rejects malformed lines with the line number") {
    std::istringstream in("V.a\tV.b\n# comment\n\nV.a\tV.b\tV.c\n");
    try {
        slam::load_graph(in);
        FAIL("expected ParseError");
    } catch (const slam::ParseError& e) {
        CHECK(e.line() == 4);
    }

    std::istringstream bad_label("V.a\tnodot\n");
    CHECK_THROWS_AS(slam::load_graph(bad_label), slam::ParseError);
}

TEST_CASE("empty input is an error") {
    std::istringstream in("# only a comment\n\n");
    CHECK_THROWS_WITH_AS(slam::load_graph(in), "empty graph", std::invalid_argument);
}

TEST_CASE("components partition the vertex set") {
    const auto g = graph_from("V.a\tV.b\nV.c\tV.d\n");
    const auto cm = slam::components(g);
    REQUIRE(cm.sizes.size() == 2);
    CHECK(cm.sizes[0].second == 2);
    CHECK(cm.sizes[1].second == 2);

    const auto path = graph_from("V.a\tV.b\nV.b\tV.c\n");
    const auto pcm = slam::components(path);
    REQUIRE(pcm.sizes.size() == 1);
    CHECK(pcm.sizes[0].second == 3);
    CHECK(pcm.largest == 0);
}

TEST_CASE("component sizes sum to n on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto edges = slam::testing::random_edge_list(rng, 12);
        const auto g = LexicalGraph::build(edges);
        const auto cm = slam::components(g);
        std::size_t total = 0;
        for (const auto& [id, size] : cm.sizes) total += size;
        CHECK(total == g.vertex_count());
        // every vertex's component id is a member of sizes
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            CHECK(cm.size_of(cm.component[v]) >= 1);
    }
}

TEST_CASE("restriction keeps exactly the reachable part") {
    const auto g = graph_from("V.a\tV.b\nV.c\tV.d\n");
    const auto sub = slam::restrict_to_component(g, Lexeme::parse("V.a"));
    CHECK(sub.vertex_count() == 2);
    CHECK(sub.find("V.a"));
    CHECK(sub.find("V.b"));
    CHECK_FALSE(sub.find("V.c"));

    const auto path = graph_from("V.a\tV.b\nV.b\tV.c\n");
    CHECK(slam::restrict_to_component(path, Lexeme::parse("V.b")) == path);
}

TEST_CASE("restriction to an unknown lexeme names the label") {
    const auto g = graph_from("V.a\tV.b\n");
    try {
        slam::restrict_to_component(g, Lexeme::parse("V.zz"));
        FAIL("expected UnknownLexemeError");
    } catch (const slam::UnknownLexemeError& e) {
        CHECK(e.label() == "V.zz");
    }
}

TEST_CASE("symmetry and reflexivity hold after load") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = LexicalGraph::build(slam::testing::random_edge_list(rng, 10));
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            CHECK(g.adjacent(u, u));
            CHECK(g.degree(u) >= 1);
            for (const VertexId v : g.neighbors(u)) CHECK(g.adjacent(v, u));
        }
    }
}

TEST_CASE("load is invariant under permutation and edge flips") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        auto edges = slam::testing::random_edge_list(rng, 10);
        const auto reference = LexicalGraph::build(edges);

        std::shuffle(edges.begin(), edges.end(), rng);
        for (auto& e : edges)
            if (rng() % 2) std::swap(e.first, e.second);
        CHECK(LexicalGraph::build(edges) == reference);
    }
}

TEST_CASE("restriction contains the start and all reachable vertices") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = LexicalGraph::build(slam::testing::random_edge_list(rng, 10));
        const VertexId start = static_cast<VertexId>(rng() % g.vertex_count());
        const auto reachable = slam::reachable_from(g, start);
        const auto sub = slam::restrict_to_component(g, g.lexeme(start));
        REQUIRE(sub.vertex_count() == reachable.size());
        for (const VertexId v : reachable) CHECK(sub.find(g.lexeme(v).label()));
    }
}

}  // TEST_SUITE
