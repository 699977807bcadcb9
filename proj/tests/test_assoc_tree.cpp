#include <gtest/gtest.h>

#include "eccspectra/assoc_tree.hpp"
#include "fixtures.hpp"

using namespace eccspectra;

namespace {

struct Built {
    Graph g;
    BlockDecomposition bd;
    DistanceMatrix dist;
    EccProfile prof;
    AssocTree tg;
};

Built build(Graph g) {
    Built b{g, decompose(g), all_pairs_distances(g), {}, {}};
    b.prof = ecc_profile(b.dist);
    b.tg = build_tg(b.g, b.bd);
    return b;
}

std::vector<vertex_t> zero_based(std::vector<int> labels) {
    for (int& x : labels) --x;
    return labels;
}

Graph reversed_labels(const Graph& g) {
    std::vector<vertex_t> perm(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) perm[i] = g.order() - 1 - i;
    return relabel(g, perm);
}

}  // namespace

TEST(AssocTree, Example16VertexSet) {
    auto b = build(fixtures::graph("example16.edges"));
    EXPECT_EQ(b.tg.vertices, zero_based({1, 2, 3, 5, 7, 9, 10, 13, 15}));
    EXPECT_TRUE(b.tg.reason[b.tg.local(2)].cut_vertex);
    EXPECT_FALSE(b.tg.reason[b.tg.local(0)].cut_vertex);
}

TEST(AssocTree, Example16Invariants) {
    auto b = build(fixtures::graph("example16.edges"));
    for (const auto& c : verify_tg(b.g, b.bd, b.tg, b.dist, b.prof)) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
    EXPECT_TRUE(check_distance_realization(b.dist, b.tg).passed);
    auto td = ecc_profile(all_pairs_distances(b.tg.tree));
    EXPECT_EQ(td.diameter, 7);
}

TEST(AssocTree, TreeIsItsOwnAssociatedTree) {
    auto b = build(fixtures::spider3());
    EXPECT_EQ(b.tg.tree, b.g);
}

TEST(AssocTree, RejectsGraphOutsideClassB) {
    Graph g = fixtures::graph("nonb9.edges");
    try {
        build_tg(g, decompose(g));
        FAIL() << "expected NotClassB";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotClassB);
    }
}

TEST(AssocTree, GraphHKeepsBothSidesOfLeafBlock) {
    auto b = build(fixtures::graph("h.edges"));
    EXPECT_EQ(b.tg.vertices, zero_based({1, 3, 4, 5}));
    for (const auto& c : verify_tg(b.g, b.bd, b.tg, b.dist, b.prof)) EXPECT_TRUE(c.passed) << c.name;
}

TEST(Center, Example16IsOddWithZ1Cut) {
    auto b = build(fixtures::graph("example16.edges"));
    auto c = center_of_g(b.g, b.bd, b.tg, b.prof);
    EXPECT_EQ(c.tag, CenterCase::OddZ1Cut);
    EXPECT_EQ(c.z1, 6);
    EXPECT_EQ(c.z2, 9);
    EXPECT_EQ(c.center_g, zero_based({7, 10, 11, 12}));
    EXPECT_EQ(c.center_g, b.prof.center);
    EXPECT_TRUE(check_center_theorem(c, b.prof).passed);
    EXPECT_TRUE(check_center_subset(c, b.prof).passed);
    EXPECT_TRUE(check_center_pair_has_cut(c, b.bd).passed);
}

TEST(Center, ReversedLabelsGiveZ2Cut) {
    auto b = build(reversed_labels(fixtures::graph("example16.edges")));
    auto c = center_of_g(b.g, b.bd, b.tg, b.prof);
    EXPECT_EQ(c.tag, CenterCase::OddZ2Cut);
    EXPECT_EQ(c.center_g, b.prof.center);
}

TEST(Center, PathCases) {
    auto p6 = build(fixtures::path(6));
    auto c6 = center_of_g(p6.g, p6.bd, p6.tg, p6.prof);
    EXPECT_EQ(c6.tag, CenterCase::OddBothCut);
    EXPECT_EQ(c6.center_g, (std::vector<vertex_t>{2, 3}));

    auto p5 = build(fixtures::path(5));
    auto c5 = center_of_g(p5.g, p5.bd, p5.tg, p5.prof);
    EXPECT_EQ(c5.tag, CenterCase::EvenCut);
    EXPECT_EQ(c5.center_g, (std::vector<vertex_t>{2}));
}

TEST(Center, EvenNonCutWitness) {
    auto b = build(fixtures::even_noncut_witness());
    auto c = center_of_g(b.g, b.bd, b.tg, b.prof);
    EXPECT_EQ(c.tag, CenterCase::EvenNonCut);
    EXPECT_EQ(c.center_g, zero_based({1, 2, 3}));
    EXPECT_EQ(c.center_g, b.prof.center);
}

TEST(Center, DiameterThreeRefused) {
    auto b = build(fixtures::graph("h.edges"));
    try {
        center_of_g(b.g, b.bd, b.tg, b.prof);
        FAIL() << "expected Hypothesis";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Hypothesis);
    }
}

TEST(EccTable, Example16AndWitness) {
    for (Graph g : {fixtures::graph("example16.edges"), fixtures::even_noncut_witness(), fixtures::path(7)}) {
        auto b = build(g);
        auto r = check_ecc_table(b.bd, b.prof);
        EXPECT_TRUE(r.passed) << r.witness;
    }
}

TEST(EccTable, LeafBlockValues) {
    auto b = build(fixtures::graph("example16.edges"));
    int leaf = b.bd.block_of(b.g, 12, 14);
    // leaf block with parts {13,14} and {9,15,16}; e(9)=5
    EXPECT_EQ(ecc_by_lemma(b.bd, leaf, 14, b.prof), 7);
    EXPECT_EQ(ecc_by_lemma(b.bd, leaf, 12, b.prof), 6);
}

TEST(EccTable, RejectsCutVertex) {
    auto b = build(fixtures::graph("example16.edges"));
    int leaf = b.bd.block_of(b.g, 12, 14);
    EXPECT_THROW(ecc_by_lemma(b.bd, leaf, 8, b.prof), Error);
}

TEST(DiametricalPaths, MeetCenter) {
    for (Graph g : {fixtures::graph("example16.edges"), fixtures::path(5), fixtures::path(6), fixtures::spider3(),
                    fixtures::even_noncut_witness()}) {
        auto b = build(g);
        auto r = check_diametrical_paths(b.g, b.dist, b.prof);
        EXPECT_TRUE(r.passed) << r.witness;
    }
}
