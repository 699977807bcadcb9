#include <gtest/gtest.h>

#include "eccspectra/graph.hpp"
#include "eccspectra/oracle.hpp"
#include "fixtures.hpp"

using namespace eccspectra;

TEST(Parse, ReadsHeaderAndEdges) {
    Graph g = parse_graph("# H\n5 5\n1 3\n1 4\n2 3\n2 4\n4 5\n");
    EXPECT_EQ(g.order(), 5);
    EXPECT_EQ(g.size(), 5u);
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_TRUE(g.has_edge(4, 3));
    EXPECT_FALSE(g.has_edge(0, 1));
}

TEST(Parse, NormalizesReversedPairs) {
    Graph a = parse_graph("3 2\n2 1\n3 2\n");
    Graph b = parse_graph("3 2\n1 2\n2 3\n");
    EXPECT_EQ(a, b);
}

TEST(Parse, EmptyInputIsSyntaxError) {
    try {
        parse_edge_list("");
        FAIL() << "expected SyntaxError";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Syntax);
        EXPECT_EQ(e.line(), 1u);
    }
}

TEST(Parse, ReportsLineAndColumn) {
    try {
        parse_edge_list("3 2\n1 2\n2 x\n");
        FAIL() << "expected SyntaxError";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 3u);
    }
}

TEST(Parse, RejectsLoopsDuplicatesAndRange) {
    auto kind_of = [](const char* text) {
        try {
            parse_edge_list(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Invalid;
    };
    EXPECT_EQ(kind_of("3 2\n1 1\n2 3\n"), ErrorKind::Loop);
    EXPECT_EQ(kind_of("3 2\n1 2\n2 1\n"), ErrorKind::Duplicate);
    EXPECT_EQ(kind_of("3 2\n1 2\n2 4\n"), ErrorKind::LabelRange);
    EXPECT_EQ(kind_of("3 3\n1 2\n2 3\n"), ErrorKind::Syntax);
}

TEST(Parse, DisconnectedGraphRejected) {
    EXPECT_THROW(parse_graph("4 2\n1 2\n3 4\n"), Error);
    EXPECT_NO_THROW(parse_edge_list("4 2\n1 2\n3 4\n"));
}

TEST(Parse, FormatRoundTrips) {
    Graph g = fixtures::graph("example16.edges");
    EXPECT_EQ(parse_graph(format_edge_list(g, {"again"})), g);
}

TEST(Distances, PathGraph) {
    auto d = all_pairs_distances(fixtures::path(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) EXPECT_EQ(d(i, j), std::abs(i - j));
}

TEST(Distances, ThreadedMatchesSerial) {
    Graph g = fixtures::graph("example16.edges");
    EXPECT_EQ(all_pairs_distances(g, 4), all_pairs_distances(g, 1));
}

TEST(Distances, AgreesWithFloydWarshall) {
    for (const char* name : {"h.edges", "example16.edges", "nonb9.edges"}) {
        Graph g = fixtures::graph(name);
        EXPECT_TRUE(same_distances(all_pairs_distances(g), oracle_distances(g))) << name;
    }
}

TEST(Distances, DisconnectedThrows) {
    Graph g = parse_edge_list("4 2\n1 2\n3 4\n");
    EXPECT_THROW(all_pairs_distances(g), Error);
}

TEST(Eccentricity, GraphH) {
    auto p = ecc_profile(all_pairs_distances(fixtures::graph("h.edges")));
    EXPECT_EQ(p.ecc, (std::vector<int>{2, 2, 3, 2, 3}));
    EXPECT_EQ(p.radius, 2);
    EXPECT_EQ(p.diameter, 3);
    EXPECT_EQ(p.center, (std::vector<vertex_t>{0, 1, 3}));
}

TEST(Eccentricity, Example16) {
    auto p = ecc_profile(all_pairs_distances(fixtures::graph("example16.edges")));
    EXPECT_EQ(p.ecc, (std::vector<int>{7, 7, 6, 6, 5, 7, 4, 5, 5, 4, 4, 4, 6, 6, 7, 7}));
    EXPECT_EQ(p.diameter, 7);
    EXPECT_EQ(p.center, (std::vector<vertex_t>{6, 9, 10, 11}));
}

TEST(Subgraph, InducedAndDelete) {
    Graph g = fixtures::path(5);
    Graph s = induced_subgraph(g, {1, 2, 4});
    EXPECT_EQ(s.order(), 3);
    EXPECT_EQ(s.size(), 1u);
    Graph h = delete_vertex(g, 2);
    EXPECT_EQ(h.order(), 4);
    EXPECT_FALSE(is_connected(h));
}
