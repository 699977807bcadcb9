#pragma once

#include <optional>

#include "eccspectra/assoc_tree.hpp"
#include "eccspectra/blocks.hpp"
#include "eccspectra/ecc_matrix.hpp"
#include "eccspectra/graph.hpp"

namespace eccspectra {

/// Everything derived once from a connected graph and shared by the theorem checks.
struct Analysis {
    Graph g;
    DistanceMatrix dist;
    EccProfile prof;
    BlockDecomposition bd;
    GraphClass cls;
    EccMatrix e;
    std::optional<AssocTree> tg;      // class B only
    std::optional<CenterInfo> center; // class B with diameter >= 4

    bool theorem_applicable() const { return center.has_value(); }
    int m() const { return prof.diameter / 2; }
};

inline Analysis analyze_graph(Graph g, unsigned threads = 1) {
    Analysis a;
    a.dist = all_pairs_distances(g, threads);
    a.prof = ecc_profile(a.dist);
    a.bd = decompose(g);
    a.cls = classify(g, a.bd);
    a.e = eccentricity_matrix(a.dist, a.prof);
    if (a.cls.in_class_b()) {
        a.tg = build_tg(g, a.bd);
        if (a.prof.diameter >= 4) a.center = center_of_g(g, a.bd, *a.tg, a.prof);
    }
    a.g = std::move(g);
    return a;
}

/// Throws unless the graph is in class B with diameter >= 4.
inline void require_theorem_hypotheses(const Analysis& a) {
    if (!a.cls.in_class_b()) throw Error(ErrorKind::NotClassB, "graph is not in class B: " + a.cls.witness);
    if (a.prof.diameter < 4)
        throw Error(ErrorKind::Hypothesis, "theorems need diameter >= 4, got " + std::to_string(a.prof.diameter));
}

}  // namespace eccspectra
