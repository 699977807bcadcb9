#include <gtest/gtest.h>

#include "eccspectra/blocks.hpp"
#include "fixtures.hpp"

using namespace eccspectra;

TEST(Decompose, GraphH) {
    Graph g = fixtures::graph("h.edges");
    auto bd = decompose(g);
    ASSERT_EQ(bd.blocks.size(), 2u);
    EXPECT_EQ(bd.cut_vertices, (std::vector<vertex_t>{3}));
    const Block& c4 = bd.blocks[0];
    ASSERT_TRUE(c4.parts);
    EXPECT_EQ(c4.parts->first, (std::vector<vertex_t>{0, 1}));
    EXPECT_EQ(c4.parts->second, (std::vector<vertex_t>{2, 3}));
    EXPECT_TRUE(bd.blocks[1].is_single_edge());
    EXPECT_EQ(bd.blocks[1].kind, BlockKind::Leaf);
    EXPECT_EQ(classify(g, bd).kind, GraphClass::Kind::ClassB);
}

TEST(Decompose, Example16) {
    Graph g = fixtures::graph("example16.edges");
    auto bd = decompose(g);
    EXPECT_EQ(bd.cut_vertices, (std::vector<vertex_t>{2, 4, 6, 8}));
    EXPECT_EQ(bd.blocks.size(), 6u);
    for (const auto& b : bd.blocks) EXPECT_TRUE(b.parts.has_value());
    int bridges = 0;
    for (const auto& b : bd.blocks) bridges += b.kind == BlockKind::Bridge;
    EXPECT_EQ(bridges, 3);
    EXPECT_TRUE(classify(g, bd).in_class_b());
}

TEST(Decompose, EveryEdgeInExactlyOneBlock) {
    Graph g = fixtures::graph("example16.edges");
    auto bd = decompose(g);
    std::vector<int> seen(g.size(), 0);
    for (const auto& b : bd.blocks)
        for (auto ei : b.edges) ++seen[ei];
    for (int s : seen) EXPECT_EQ(s, 1);
}

TEST(Classify, NonBNineVertexGraph) {
    Graph g = fixtures::graph("nonb9.edges");
    auto cls = classify(g);
    EXPECT_EQ(cls.kind, GraphClass::Kind::BiBlockNotB);
    ASSERT_TRUE(cls.witness_block.has_value());
    auto bd = decompose(g);
    EXPECT_EQ(bd.blocks[*cls.witness_block].vertices, (std::vector<vertex_t>{0, 1, 2, 3}));
    EXPECT_EQ(bd.blocks[*cls.witness_block].cut_count, 3);
}

TEST(Classify, TreesAreInClassB) {
    auto cls = classify(fixtures::path(5));
    EXPECT_TRUE(cls.in_class_b());
    EXPECT_TRUE(cls.tree);
    EXPECT_EQ(classify(fixtures::path(2)).kind, GraphClass::Kind::Tree);
}

TEST(Classify, OddCycleIsOther) {
    Graph c5 = Graph::from_labels(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    EXPECT_EQ(classify(c5).kind, GraphClass::Kind::Other);
}

TEST(Classify, SingleCompleteBipartiteBlockIsNotB) {
    Graph k23 = Graph::from_labels(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    auto cls = classify(k23);
    EXPECT_EQ(cls.kind, GraphClass::Kind::BiBlockNotB);
}

TEST(Classify, SixCycleIsNotCompleteBipartite) {
    Graph c6 = Graph::from_labels(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
    auto bd = decompose(c6);
    ASSERT_EQ(bd.blocks.size(), 1u);
    EXPECT_FALSE(bd.blocks[0].parts.has_value());
    EXPECT_EQ(classify(c6, bd).kind, GraphClass::Kind::Other);
}

TEST(Decompose, SingleVertex) {
    Graph g(1, {});
    auto bd = decompose(g);
    ASSERT_EQ(bd.blocks.size(), 1u);
    EXPECT_TRUE(bd.cut_vertices.empty());
}
