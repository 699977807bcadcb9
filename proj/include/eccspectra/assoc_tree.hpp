#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eccspectra/blocks.hpp"
#include "eccspectra/check.hpp"
#include "eccspectra/error.hpp"
#include "eccspectra/graph.hpp"

namespace eccspectra {

/// Why a vertex belongs to the associated tree.
struct TgReason {
    bool cut_vertex = false;
    int block = -1;  // block whose non-cut pick produced the vertex; -1 for cut-vertices
};

/**
 * The associated tree T_G of a class-B graph: the subgraph induced by all
 * cut-vertices plus, per block, the minimum-label non-cut-vertices chosen
 * by the block's cut-vertex layout.
 */
struct AssocTree {
    std::vector<vertex_t> vertices;  // host vertices, ascending
    Graph tree;                      // local vertex i is host vertex vertices[i]
    std::vector<TgReason> reason;    // indexed like `vertices`

    int local(vertex_t host) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), host);
        return it != vertices.end() && *it == host ? static_cast<int>(it - vertices.begin()) : -1;
    }
    bool contains(vertex_t host) const { return local(host) >= 0; }
};

namespace detail {

inline std::optional<vertex_t> min_noncut(const BlockDecomposition& bd, const std::vector<vertex_t>& part) {
    for (vertex_t v : part)
        if (!bd.is_cut(v)) return v;
    return std::nullopt;
}

inline int cuts_in(const BlockDecomposition& bd, const std::vector<vertex_t>& part) {
    return static_cast<int>(std::count_if(part.begin(), part.end(), [&](vertex_t v) { return bd.is_cut(v); }));
}

}  // namespace detail

inline AssocTree build_tg(const Graph& g, const BlockDecomposition& bd) {
    auto cls = classify(g, bd);
    if (!cls.in_class_b()) throw Error(ErrorKind::NotClassB, "T_G needs a class-B graph: " + cls.witness);

    std::vector<TgReason> why(static_cast<std::size_t>(g.order()));
    std::vector<char> chosen(static_cast<std::size_t>(g.order()), 0);
    for (vertex_t c : bd.cut_vertices) {
        chosen[c] = 1;
        why[c].cut_vertex = true;
    }
    auto pick = [&](std::optional<vertex_t> v, int block) {
        if (!v) return;
        chosen[*v] = 1;
        why[*v].block = block;
    };
    for (std::size_t bi = 0; bi < bd.blocks.size(); ++bi) {
        const Block& b = bd.blocks[bi];
        const Bipartition& parts = *b.parts;
        int block = static_cast<int>(bi);
        if (b.is_single_edge()) {
            for (vertex_t v : b.vertices)
                if (!bd.is_cut(v)) pick(v, block);
            continue;
        }
        int c0 = detail::cuts_in(bd, parts.first), c1 = detail::cuts_in(bd, parts.second);
        if (c0 == 2) {
            pick(detail::min_noncut(bd, parts.second), block);
        } else if (c1 == 2) {
            pick(detail::min_noncut(bd, parts.first), block);
        } else if (b.kind == BlockKind::Leaf) {
            pick(detail::min_noncut(bd, parts.first), block);
            pick(detail::min_noncut(bd, parts.second), block);
        }
    }
    AssocTree t;
    for (vertex_t v = 0; v < g.order(); ++v)
        if (chosen[v]) {
            t.vertices.push_back(v);
            t.reason.push_back(why[v]);
        }
    t.tree = induced_subgraph(g, t.vertices);
    return t;
}

/// Tree acyclicity, distance and eccentricity preservation between G and T_G.
inline std::vector<CheckResult> verify_tg(const Graph& g, const BlockDecomposition& bd, const AssocTree& tg,
                                          const DistanceMatrix& dist, const EccProfile& prof) {
    std::vector<CheckResult> out;
    const int k = tg.tree.order();

    bool connected = is_connected(tg.tree);
    if (connected && static_cast<int>(tg.tree.size()) == k - 1)
        out.push_back(pass("tg.is_tree"));
    else
        out.push_back(fail("tg.is_tree", std::to_string(k) + " vertices, " + std::to_string(tg.tree.size()) +
                                             " edges, connected=" + (connected ? "yes" : "no")));

    CheckResult induced = pass("tg.induced");
    for (int i = 0; i < k && induced.passed; ++i)
        for (int j = i + 1; j < k; ++j)
            if (tg.tree.has_edge(i, j) != g.has_edge(tg.vertices[i], tg.vertices[j])) {
                induced = fail("tg.induced", "pair " + std::to_string(tg.vertices[i] + 1) + "," +
                                                 std::to_string(tg.vertices[j] + 1));
                break;
            }
    out.push_back(induced);

    auto missing = std::find_if(bd.cut_vertices.begin(), bd.cut_vertices.end(),
                                [&](vertex_t c) { return !tg.contains(c); });
    if (missing == bd.cut_vertices.end())
        out.push_back(pass("tg.contains_cut_vertices"));
    else
        out.push_back(fail("tg.contains_cut_vertices", "cut-vertex " + std::to_string(*missing + 1) + " missing"));

    CheckResult budget = pass("tg.block_budget");
    for (std::size_t bi = 0; bi < bd.blocks.size(); ++bi) {
        auto cnt = std::count_if(bd.blocks[bi].vertices.begin(), bd.blocks[bi].vertices.end(),
                                 [&](vertex_t v) { return tg.contains(v); });
        if (cnt > 3) {
            budget = fail("tg.block_budget",
                          "block " + format_labels(bd.blocks[bi].vertices) + " keeps " + std::to_string(cnt) + " vertices");
            break;
        }
    }
    out.push_back(budget);

    if (!connected) {
        out.push_back(fail("tg.distance_preserved", "T_G is disconnected"));
        out.push_back(fail("tg.equal_diameter", "T_G is disconnected"));
        out.push_back(fail("tg.equal_eccentricity", "T_G is disconnected"));
        return out;
    }
    auto td = all_pairs_distances(tg.tree);
    auto tp = ecc_profile(td);

    CheckResult dp = pass("tg.distance_preserved");
    for (int a = 0; a < k && dp.passed; ++a)
        for (int b = a + 1; b < k; ++b) {
            vertex_t ha = tg.vertices[a], hb = tg.vertices[b];
            if (td(a, b) != dist(ha, hb)) {
                dp = fail("tg.distance_preserved", "d_G(" + std::to_string(ha + 1) + "," + std::to_string(hb + 1) +
                                                       ")=" + std::to_string(dist(ha, hb)) +
                                                       " but d_T=" + std::to_string(td(a, b)));
                break;
            }
        }
    out.push_back(dp);

    if (tp.diameter == prof.diameter)
        out.push_back(pass("tg.equal_diameter"));
    else
        out.push_back(fail("tg.equal_diameter",
                           "diam(G)=" + std::to_string(prof.diameter) + " diam(T_G)=" + std::to_string(tp.diameter)));

    CheckResult ee = pass("tg.equal_eccentricity");
    for (int a = 0; a < k; ++a) {
        vertex_t h = tg.vertices[a];
        if (tp.ecc[a] != prof.ecc[h]) {
            ee = fail("tg.equal_eccentricity", "vertex " + std::to_string(h + 1) + ": e_G=" +
                                                   std::to_string(prof.ecc[h]) + " e_T=" + std::to_string(tp.ecc[a]));
            break;
        }
    }
    out.push_back(ee);
    return out;
}

// ---------------------------------------------------------------------------
// Center of G from the center of T_G
// ---------------------------------------------------------------------------

enum class CenterCase { EvenCut, EvenNonCut, OddBothCut, OddZ1Cut, OddZ2Cut };

inline const char* to_string(CenterCase c) {
    switch (c) {
    case CenterCase::EvenCut: return "even/z-cut";
    case CenterCase::EvenNonCut: return "even/z-noncut";
    case CenterCase::OddBothCut: return "odd/both-cut";
    case CenterCase::OddZ1Cut: return "odd/z1-cut";
    case CenterCase::OddZ2Cut: return "odd/z2-cut";
    }
    return "?";
}

struct CenterInfo {
    std::vector<vertex_t> center_g;   // C(G), ascending
    std::vector<vertex_t> center_tg;  // C(T_G) as host vertices, ascending
    CenterCase tag = CenterCase::EvenCut;
    std::optional<int> block;         // central block when the case has one
    vertex_t z1 = -1;                 // even: the single center of T_G
    vertex_t z2 = -1;                 // odd: the larger-label center of T_G
};

/**
 * C(G) for G in class B with diameter >= 4, derived from C(T_G) (computed
 * on the tree) by the case analysis on diameter parity and cut status.
 * z1 is the smaller-label center of T_G in the odd case.
 */
inline CenterInfo center_of_g(const Graph& g, const BlockDecomposition& bd, const AssocTree& tg,
                              const EccProfile& prof) {
    if (prof.diameter < 4)
        throw Error(ErrorKind::Hypothesis,
                    "center theorem needs diameter >= 4, got " + std::to_string(prof.diameter));
    auto tp = ecc_profile(all_pairs_distances(tg.tree));
    CenterInfo info;
    for (int c : tp.center) info.center_tg.push_back(tg.vertices[c]);

    auto part_containing = [&](int block, vertex_t v) -> const std::vector<vertex_t>& {
        const auto& parts = *bd.blocks[block].parts;
        return parts.part(parts.side_of(v));
    };

    if (prof.diameter % 2 == 0) {
        if (info.center_tg.size() != 1)
            throw Error(ErrorKind::Invalid, "even diameter but |C(T_G)| = " + std::to_string(info.center_tg.size()));
        vertex_t z = info.center_tg[0];
        info.z1 = z;
        if (bd.is_cut(z)) {
            info.tag = CenterCase::EvenCut;
            info.center_g = {z};
        } else {
            info.tag = CenterCase::EvenNonCut;
            info.block = bd.blocks_of_vertex[z].front();
            info.center_g = part_containing(*info.block, z);
        }
    } else {
        if (info.center_tg.size() != 2)
            throw Error(ErrorKind::Invalid, "odd diameter but |C(T_G)| = " + std::to_string(info.center_tg.size()));
        vertex_t z1 = info.center_tg[0], z2 = info.center_tg[1];
        info.z1 = z1;
        info.z2 = z2;
        info.block = bd.block_of(g, z1, z2);
        bool c1 = bd.is_cut(z1), c2 = bd.is_cut(z2);
        if (c1 && c2) {
            info.tag = CenterCase::OddBothCut;
            info.center_g = {z1, z2};
        } else if (c1) {
            info.tag = CenterCase::OddZ1Cut;
            info.center_g = part_containing(*info.block, z2);
            info.center_g.push_back(z1);
        } else if (c2) {
            info.tag = CenterCase::OddZ2Cut;
            info.center_g = part_containing(*info.block, z1);
            info.center_g.push_back(z2);
        } else {
            throw Error(ErrorKind::Invalid, "neither center of T_G is a cut-vertex");
        }
    }
    std::sort(info.center_g.begin(), info.center_g.end());
    return info;
}

/**
 * Eccentricity of a non-cut-vertex predicted from the eccentricities of its
 * block's cut-vertices (diameter >= 4). Leaf block with cut-vertex v:
 * e(v)+2 on v's side, e(v)+1 across. Bridge block with cut-vertices
 * e(v1) <= e(v2): all on one side -> e(v2); v1,v2 together, u across ->
 * e(v2)-1; u with v1 -> e(v2)+1; u with v2 -> e(v1)+1.
 */
inline int ecc_by_lemma(const BlockDecomposition& bd, int block, vertex_t u, const EccProfile& prof) {
    if (prof.diameter < 4) throw Error(ErrorKind::Hypothesis, "eccentricity table needs diameter >= 4");
    const Block& b = bd.blocks.at(static_cast<std::size_t>(block));
    if (!b.contains(u)) throw Error(ErrorKind::Invalid, "vertex is not in the block");
    if (bd.is_cut(u)) throw Error(ErrorKind::Invalid, "vertex " + std::to_string(u + 1) + " is a cut-vertex");
    if (!b.parts) throw Error(ErrorKind::Invalid, "block is not complete bipartite");
    if (b.kind != BlockKind::Leaf && b.kind != BlockKind::Bridge)
        throw Error(ErrorKind::Invalid, "block is neither a leaf nor a bridge block");
    const auto& parts = *b.parts;
    std::vector<vertex_t> cuts;
    for (vertex_t v : b.vertices)
        if (bd.is_cut(v)) cuts.push_back(v);
    const auto& e = prof.ecc;
    int su = parts.side_of(u);
    if (b.kind == BlockKind::Leaf) {
        vertex_t v = cuts[0];
        return parts.side_of(v) == su ? e[v] + 2 : e[v] + 1;
    }
    vertex_t v1 = cuts[0], v2 = cuts[1];
    if (e[v1] > e[v2]) std::swap(v1, v2);
    int s1 = parts.side_of(v1), s2 = parts.side_of(v2);
    if (s1 == s2) return su == s1 ? e[v2] : e[v2] - 1;
    return su == s1 ? e[v2] + 1 : e[v1] + 1;
}

// ---------------------------------------------------------------------------
// Structural properties
// ---------------------------------------------------------------------------

/// Every distance realized in G is realized between two vertices of T_G.
inline CheckResult check_distance_realization(const DistanceMatrix& dist, const AssocTree& tg) {
    std::set<int> all, kept;
    for (int a = 0; a < dist.order(); ++a)
        for (int b = a + 1; b < dist.order(); ++b) all.insert(dist(a, b));
    for (std::size_t a = 0; a < tg.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < tg.vertices.size(); ++b) kept.insert(dist(tg.vertices[a], tg.vertices[b]));
    for (int x : all)
        if (!kept.count(x))
            return fail("tg.distance_realization", "distance " + std::to_string(x) + " not realized inside T_G");
    return pass("tg.distance_realization");
}

/// With two centers in T_G, at least one is a cut-vertex of G.
inline CheckResult check_center_pair_has_cut(const CenterInfo& info, const BlockDecomposition& bd) {
    if (info.center_tg.size() == 2 && !bd.is_cut(info.center_tg[0]) && !bd.is_cut(info.center_tg[1]))
        return fail("center.pair_has_cut", "C(T_G)=" + format_labels(info.center_tg) + " has no cut-vertex");
    return pass("center.pair_has_cut");
}

inline CheckResult check_center_subset(const CenterInfo& info, const EccProfile& prof) {
    for (vertex_t z : info.center_tg)
        if (!prof.is_central(z))
            return fail("center.tg_subset", "T_G center " + std::to_string(z + 1) + " is not central in G");
    return pass("center.tg_subset");
}

inline CheckResult check_center_theorem(const CenterInfo& info, const EccProfile& prof) {
    if (info.center_g != prof.center)
        return fail("center.theorem", std::string(to_string(info.tag)) + ": derived " + format_labels(info.center_g) +
                                          " but brute force " + format_labels(prof.center));
    return pass("center.theorem");
}

/// Lemma table versus brute force for every non-cut-vertex in a leaf or bridge block.
inline CheckResult check_ecc_table(const BlockDecomposition& bd, const EccProfile& prof) {
    for (std::size_t bi = 0; bi < bd.blocks.size(); ++bi) {
        const Block& b = bd.blocks[bi];
        if (b.kind != BlockKind::Leaf && b.kind != BlockKind::Bridge) continue;
        for (vertex_t u : b.vertices) {
            if (bd.is_cut(u)) continue;
            int predicted = ecc_by_lemma(bd, static_cast<int>(bi), u, prof);
            if (predicted != prof.ecc[u])
                return fail("ecc.lemma_table", "vertex " + std::to_string(u + 1) + ": table " +
                                                   std::to_string(predicted) + " brute " + std::to_string(prof.ecc[u]));
        }
    }
    return pass("ecc.lemma_table");
}

/**
 * Every diametrical path meets C(G). For each diametrical pair (u,v) the
 * vertices on shortest u-v paths are those w with d(u,w)+d(w,v)=d(u,v);
 * the pair passes when some such w is central and, after deleting all
 * central vertices, v is no longer reachable from u in the shortest-path DAG.
 */
inline CheckResult check_diametrical_paths(const Graph& g, const DistanceMatrix& dist, const EccProfile& prof) {
    const int n = g.order();
    std::vector<int> seen(static_cast<std::size_t>(n), -1);
    std::vector<vertex_t> queue;
    int stamp = 0;
    for (vertex_t u = 0; u < n; ++u) {
        for (vertex_t v = u + 1; v < n; ++v) {
            if (dist(u, v) != prof.diameter) continue;
            const int duv = dist(u, v);
            bool touches = false;
            for (vertex_t w : prof.center)
                if (dist(u, w) + dist(w, v) == duv) touches = true;
            auto witness = "diametrical pair (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")";
            if (!touches) return fail("diametrical.center_cut", witness + " has no central vertex on any shortest path");
            ++stamp;
            queue.clear();
            if (!prof.is_central(u)) {
                queue.push_back(u);
                seen[u] = stamp;
            }
            for (std::size_t h = 0; h < queue.size(); ++h) {
                vertex_t x = queue[h];
                if (x == v) return fail("diametrical.center_cut", witness + " has a shortest path avoiding C(G)");
                for (vertex_t y : g.neighbors(x)) {
                    if (seen[y] == stamp || prof.is_central(y)) continue;
                    if (dist(u, y) != dist(u, x) + 1 || dist(u, y) + dist(y, v) != duv) continue;
                    seen[y] = stamp;
                    queue.push_back(y);
                }
            }
        }
    }
    return pass("diametrical.center_cut");
}

}  // namespace eccspectra
