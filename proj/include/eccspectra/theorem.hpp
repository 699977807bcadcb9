#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eccspectra/analysis.hpp"
#include "eccspectra/check.hpp"
#include "eccspectra/spectral.hpp"

namespace eccspectra {

enum class PartitionCase { OddCut, OddBothCut, EvenNonCut, EvenCut };

inline const char* to_string(PartitionCase c) {
    switch (c) {
    case PartitionCase::OddCut: return "odd-case-1";
    case PartitionCase::OddBothCut: return "odd-case-2";
    case PartitionCase::EvenNonCut: return "even-noncut";
    case PartitionCase::EvenCut: return "even-cut";
    }
    return "?";
}

/// Named vertices the partition is built around; unused ones stay -1.
struct Anchors {
    vertex_t z = -1;       // even: center of T_G
    vertex_t z1 = -1;      // odd: central cut-vertex
    vertex_t z2 = -1;      // odd: the other center of T_G
    vertex_t zprime = -1;  // odd-case-1: second cut-vertex of the central block
    vertex_t w1 = -1;      // even-noncut: cut-vertices of the central block
    vertex_t w2 = -1;
};

/**
 * Ordered cells U1..Uk of the vertex set. A cell the construction leaves
 * empty in a degenerate subcase is absent rather than an empty vector.
 */
struct UPartition {
    PartitionCase tag = PartitionCase::OddCut;
    std::vector<std::optional<std::vector<vertex_t>>> cells;
    Anchors anchors;
    int m = 0;
    int r = 0;  // even-cut: number of components reaching distance m

    int cell_count() const { return static_cast<int>(cells.size()); }
    bool present(int i) const { return cells[i].has_value(); }
    /// Index of the cell containing v, or -1.
    int cell_of(vertex_t v) const {
        for (int i = 0; i < cell_count(); ++i)
            if (cells[i] && std::binary_search(cells[i]->begin(), cells[i]->end(), v)) return i;
        return -1;
    }
};

namespace detail {

inline std::vector<int> components_after_removal(const Graph& g, const std::vector<Edge>& removed) {
    std::set<Edge> gone(removed.begin(), removed.end());
    std::vector<Edge> kept;
    for (const auto& e : g.edges())
        if (!gone.count(e)) kept.push_back(e);
    return component_ids(Graph(g.order(), std::move(kept)));
}

inline std::vector<Edge> block_edges(const Graph& g, const Block& b) {
    std::vector<Edge> out;
    for (auto ei : b.edges) out.push_back(g.edges()[ei]);
    return out;
}

inline std::optional<std::vector<vertex_t>> nonempty(std::vector<vertex_t> v) {
    if (v.empty()) return std::nullopt;
    std::sort(v.begin(), v.end());
    return v;
}

inline std::vector<vertex_t> without(std::vector<vertex_t> v, std::initializer_list<vertex_t> drop) {
    v.erase(std::remove_if(v.begin(), v.end(),
                           [&](vertex_t x) { return std::find(drop.begin(), drop.end(), x) != drop.end(); }),
            v.end());
    return v;
}

/// Splits component `comp` into vertices at distance `level` from `anchor` and those strictly closer.
inline std::pair<std::vector<vertex_t>, std::vector<vertex_t>> split_by_level(const std::vector<int>& comp, int id,
                                                                              const DistanceMatrix& d,
                                                                              vertex_t anchor, int level) {
    std::vector<vertex_t> far, near;
    for (vertex_t x = 0; x < static_cast<int>(comp.size()); ++x) {
        if (comp[x] != id) continue;
        (d(x, anchor) == level ? far : near).push_back(x);
    }
    return {far, near};
}

}  // namespace detail

/**
 * U-partition for a class-B graph of diameter >= 4. The case follows the
 * center analysis: odd diameter with one or two central cut-vertices,
 * even diameter with the T_G center a non-cut or a cut vertex.
 */
inline UPartition build_partition(const Analysis& a) {
    require_theorem_hypotheses(a);
    const CenterInfo& c = *a.center;
    const auto& g = a.g;
    const auto& bd = a.bd;
    const auto& d = a.dist;
    UPartition p;

    if (a.prof.diameter % 2 == 1) {
        const int m = (a.prof.diameter - 1) / 2;
        p.m = m;
        const Block& b = bd.blocks[*c.block];
        const auto& parts = *b.parts;
        vertex_t z1 = c.z1, z2 = c.z2;
        if (c.tag == CenterCase::OddZ2Cut) std::swap(z1, z2);
        auto comp = detail::components_after_removal(g, detail::block_edges(g, b));
        const auto& v1 = parts.part(parts.side_of(z1));
        const auto& v2 = parts.part(parts.side_of(z2));
        p.anchors.z1 = z1;
        p.anchors.z2 = z2;
        if (c.tag == CenterCase::OddBothCut) {
            p.tag = PartitionCase::OddBothCut;
            auto [u1, u2] = detail::split_by_level(comp, comp[z1], d, z1, m);
            auto [u3, u4] = detail::split_by_level(comp, comp[z2], d, z2, m);
            p.cells = {detail::nonempty(u1), detail::nonempty(u2), detail::nonempty(u3), detail::nonempty(u4),
                       detail::nonempty(detail::without(v1, {z1})), detail::nonempty(detail::without(v2, {z2}))};
        } else {
            p.tag = PartitionCase::OddCut;
            vertex_t zp = -1;
            for (vertex_t v : v1)
                if (v != z1 && bd.is_cut(v)) zp = v;
            if (zp < 0) throw Error(ErrorKind::Invalid, "central block has no second cut-vertex beside z1");
            p.anchors.zprime = zp;
            auto [u1, u2] = detail::split_by_level(comp, comp[z1], d, z1, m);
            auto [u3, u4] = detail::split_by_level(comp, comp[zp], d, zp, m - 1);
            p.cells = {detail::nonempty(u1), detail::nonempty(u2), detail::nonempty(u3), detail::nonempty(u4),
                       detail::nonempty(detail::without(v1, {z1, zp})), detail::nonempty(v2)};
        }
        return p;
    }

    const int m = a.prof.diameter / 2;
    p.m = m;
    vertex_t z = c.z1;
    p.anchors.z = z;
    if (c.tag == CenterCase::EvenNonCut) {
        p.tag = PartitionCase::EvenNonCut;
        const Block& b = bd.blocks[*c.block];
        const auto& parts = *b.parts;
        const auto& v1 = parts.part(parts.side_of(z));
        const auto& v2 = parts.part(1 - parts.side_of(z));
        std::vector<vertex_t> w;
        for (vertex_t v : v2)
            if (bd.is_cut(v)) w.push_back(v);
        if (w.size() != 2) throw Error(ErrorKind::Invalid, "central block does not have two cut-vertices opposite z");
        vertex_t w1 = w[0], w2 = w[1];
        if (a.prof.ecc[w1] > a.prof.ecc[w2]) std::swap(w1, w2);
        p.anchors.w1 = w1;
        p.anchors.w2 = w2;
        auto comp = detail::components_after_removal(g, detail::block_edges(g, b));
        auto [u1, u3] = detail::split_by_level(comp, comp[w1], d, w1, m - 1);
        auto [u2, u4] = detail::split_by_level(comp, comp[w2], d, w2, m - 1);
        p.cells = {detail::nonempty(u1), detail::nonempty(u2), detail::nonempty(u3), detail::nonempty(u4),
                   detail::nonempty(v1), detail::nonempty(detail::without(v2, {w1, w2}))};
        return p;
    }

    p.tag = PartitionCase::EvenCut;
    std::vector<Edge> incident;
    for (vertex_t y : g.neighbors(z)) incident.emplace_back(std::min(z, y), std::max(z, y));
    auto comp = detail::components_after_removal(g, incident);
    // component ids are assigned in order of first vertex, so ascending id = ascending minimum label
    std::map<int, std::pair<std::vector<vertex_t>, std::vector<vertex_t>>> reach;
    std::vector<vertex_t> rest;
    std::set<int> far_ids;
    for (vertex_t x = 0; x < g.order(); ++x)
        if (d(x, z) == m) far_ids.insert(comp[x]);
    for (vertex_t x = 0; x < g.order(); ++x) {
        if (x != z && far_ids.count(comp[x]))
            (d(x, z) == m ? reach[comp[x]].first : reach[comp[x]].second).push_back(x);
        else
            rest.push_back(x);
    }
    p.r = static_cast<int>(reach.size());
    std::vector<std::optional<std::vector<vertex_t>>> outer, inner;
    for (auto& [id, cells] : reach) {
        outer.push_back(detail::nonempty(cells.first));
        inner.push_back(detail::nonempty(cells.second));
    }
    p.cells = outer;
    p.cells.insert(p.cells.end(), inner.begin(), inner.end());
    p.cells.push_back(detail::nonempty(rest));
    return p;
}

/// Disjointness, coverage and anchor placement.
inline CheckResult check_partition(const UPartition& p, int n) {
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < p.cell_count(); ++i) {
        if (!p.cells[i]) continue;
        for (vertex_t v : *p.cells[i]) {
            if (owner[v] >= 0)
                return fail("partition.cells", "vertex " + std::to_string(v + 1) + " in U" + std::to_string(owner[v] + 1) +
                                                   " and U" + std::to_string(i + 1));
            owner[v] = i;
        }
    }
    for (vertex_t v = 0; v < n; ++v)
        if (owner[v] < 0) return fail("partition.cells", "vertex " + std::to_string(v + 1) + " is in no cell");
    auto in = [&](vertex_t v, int cell) { return v < 0 || owner[v] == cell; };
    const auto& an = p.anchors;
    bool ok = true;
    switch (p.tag) {
    case PartitionCase::OddCut: ok = in(an.z1, 1) && in(an.zprime, 3) && in(an.z2, 5); break;
    case PartitionCase::OddBothCut: ok = in(an.z1, 1) && in(an.z2, 3); break;
    case PartitionCase::EvenNonCut: ok = in(an.w1, 2) && in(an.w2, 3) && in(an.z, 4); break;
    case PartitionCase::EvenCut: ok = in(an.z, 2 * p.r); break;
    }
    if (!ok) return fail("partition.cells", "an anchor vertex is outside its cell");
    if (p.tag == PartitionCase::EvenCut && p.r < 2)
        return fail("partition.cells", "even-cut case with r=" + std::to_string(p.r));
    return pass("partition.cells");
}

// ---------------------------------------------------------------------------
// Block templates
// ---------------------------------------------------------------------------

/// Expected shape of E restricted to U_i x U_j.
struct BlockTemplate {
    enum class Kind { Zero, Const, ColEcc, RowEcc, TwoJMinusI };
    Kind kind = Kind::Zero;
    long long value = 0;
};

namespace detail {

inline BlockTemplate upper_template(const UPartition& p, int i, int j) {
    using K = BlockTemplate::Kind;
    const long long m = p.m;
    auto is = [&](int a, int b) { return i == a - 1 && j == b - 1; };
    switch (p.tag) {
    case PartitionCase::OddCut:
        if (is(1, 3)) return {K::Const, 2 * m + 1};
        if (is(1, 4)) return {K::ColEcc, 0};
        if (is(1, 5)) return {K::Const, m + 2};
        if (is(1, 6)) return {K::Const, m + 1};
        if (is(2, 3)) return {K::RowEcc, 0};
        break;
    case PartitionCase::OddBothCut:
        if (is(1, 3)) return {K::Const, 2 * m + 1};
        if (is(1, 4)) return {K::ColEcc, 0};
        if (is(1, 5)) return {K::Const, m + 2};
        if (is(2, 3)) return {K::RowEcc, 0};
        if (is(3, 6)) return {K::Const, m + 2};
        break;
    case PartitionCase::EvenNonCut:
        if (is(1, 2)) return {K::Const, 2 * m};
        if (is(1, 4)) return {K::ColEcc, 0};
        if (is(1, 5)) return {K::Const, m};
        if (is(1, 6)) return {K::Const, m + 1};
        if (is(2, 3)) return {K::ColEcc, 0};
        if (is(2, 5)) return {K::Const, m};
        if (is(2, 6)) return {K::Const, m + 1};
        if (is(5, 5) && m == 2) return {K::TwoJMinusI, 2};
        break;
    case PartitionCase::EvenCut: {
        const int r = p.r;
        if (i < r && j < r && i != j) return {K::Const, 2 * m};
        if (i < r && j >= r && j < 2 * r && j - r != i) return {K::ColEcc, 0};
        if (i < r && j == 2 * r) return {K::ColEcc, 0};
        break;
    }
    }
    return {K::Zero, 0};
}

}  // namespace detail

inline BlockTemplate block_template(const UPartition& p, int i, int j) {
    if (i <= j) return detail::upper_template(p, i, j);
    auto t = detail::upper_template(p, j, i);
    if (t.kind == BlockTemplate::Kind::ColEcc)
        t.kind = BlockTemplate::Kind::RowEcc;
    else if (t.kind == BlockTemplate::Kind::RowEcc)
        t.kind = BlockTemplate::Kind::ColEcc;
    return t;
}

inline long long expected_entry(const BlockTemplate& t, vertex_t a, vertex_t b, const std::vector<int>& ecc) {
    switch (t.kind) {
    case BlockTemplate::Kind::Zero: return 0;
    case BlockTemplate::Kind::Const: return t.value;
    case BlockTemplate::Kind::ColEcc: return ecc[b];
    case BlockTemplate::Kind::RowEcc: return ecc[a];
    case BlockTemplate::Kind::TwoJMinusI: return a == b ? 0 : t.value;
    }
    return 0;
}

/**
 * Compares every entry of E against the block template of its cell pair.
 * The failure witness names the first offending entry in row-major order.
 */
inline CheckResult verify_block_structure(const EccMatrix& e, const UPartition& p) {
    auto cells = check_partition(p, e.order());
    if (!cells.passed) return fail("partition.block_structure", cells.witness);
    std::vector<int> cell(static_cast<std::size_t>(e.order()));
    for (vertex_t v = 0; v < e.order(); ++v) cell[v] = p.cell_of(v);
    for (vertex_t a = 0; a < e.order(); ++a)
        for (vertex_t b = 0; b < e.order(); ++b) {
            auto t = block_template(p, cell[a], cell[b]);
            long long want = expected_entry(t, a, b, e.ecc());
            if (e(a, b) != want)
                return fail("partition.block_structure",
                            "E(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")=" + std::to_string(e(a, b)) +
                                " expected " + std::to_string(want) + " in block U" + std::to_string(cell[a] + 1) +
                                "xU" + std::to_string(cell[b] + 1));
        }
    return pass("partition.block_structure");
}

// ---------------------------------------------------------------------------
// Diametrically distinguished vertices
// ---------------------------------------------------------------------------

struct DDReport {
    std::vector<vertex_t> vertices;              // ascending
    std::vector<std::vector<vertex_t>> witness;  // a diametrical path through each vertex
    std::vector<int> blocks;                     // distinct blocks meeting the set, ascending
    int r() const { return static_cast<int>(blocks.size()); }
};

namespace detail {

/// Shortest path from a to b, walking greedily toward b.
inline std::vector<vertex_t> shortest_path(const Graph& g, const DistanceMatrix& d, vertex_t a, vertex_t b) {
    std::vector<vertex_t> path{a};
    while (path.back() != b) {
        vertex_t x = path.back();
        for (vertex_t y : g.neighbors(x))
            if (d(y, b) == d(x, b) - 1) {
                path.push_back(y);
                break;
            }
    }
    return path;
}

}  // namespace detail

/**
 * Vertices adjacent to a central vertex that lie on some diametrical path.
 * r counts the distinct blocks holding the center-to-vertex edges.
 */
inline DDReport diametrically_distinguished(const Analysis& a) {
    require_theorem_hypotheses(a);
    if (a.center->tag != CenterCase::EvenCut)
        throw Error(ErrorKind::Hypothesis, std::string("diametrically distinguished vertices need the even-cut case, got ") +
                                               to_string(a.center->tag));
    const auto& d = a.dist;
    const int n = a.g.order(), diam = a.prof.diameter;
    std::vector<std::pair<vertex_t, vertex_t>> pairs;
    for (vertex_t x = 0; x < n; ++x)
        for (vertex_t y = x + 1; y < n; ++y)
            if (d(x, y) == diam) pairs.emplace_back(x, y);

    std::set<vertex_t> candidates;
    std::map<vertex_t, vertex_t> via;  // candidate -> adjacent central vertex
    for (vertex_t z : a.prof.center)
        for (vertex_t u : a.g.neighbors(z))
            if (!via.count(u)) via[u] = z;
    DDReport rep;
    std::set<int> blocks;
    for (auto [u, z] : via) {
        for (auto [x, y] : pairs) {
            if (d(x, u) + d(u, y) != diam) continue;
            auto path = detail::shortest_path(a.g, d, x, u);
            auto tail = detail::shortest_path(a.g, d, u, y);
            path.insert(path.end(), tail.begin() + 1, tail.end());
            rep.vertices.push_back(u);
            rep.witness.push_back(std::move(path));
            blocks.insert(a.bd.block_of(a.g, u, z));
            break;
        }
    }
    rep.blocks.assign(blocks.begin(), blocks.end());
    return rep;
}

// ---------------------------------------------------------------------------
// Inertia prediction and spectral symmetry
// ---------------------------------------------------------------------------

struct InertiaPrediction {
    Inertia inertia;
    CenterCase tag = CenterCase::EvenCut;
    std::string rule;
};

inline InertiaPrediction predicted_inertia(const Analysis& a) {
    require_theorem_hypotheses(a);
    const int n = a.g.order();
    InertiaPrediction out;
    out.tag = a.center->tag;
    if (a.prof.diameter % 2 == 1) {
        out.inertia = {2, 2, n - 4};
        out.rule = "odd diameter: (2,2,n-4)";
    } else if (a.center->tag == CenterCase::EvenNonCut) {
        const int k = static_cast<int>(a.prof.center.size());
        if (a.m() == 2) {
            out.inertia = {3, k + 1, n - k - 4};
            out.rule = "even, non-cut center, m=2: (3,k+1,n-k-4) with k=" + std::to_string(k);
        } else {
            out.inertia = {2, 2, n - 4};
            out.rule = "even, non-cut center, m>=3: (2,2,n-4)";
        }
    } else {
        const int r = diametrically_distinguished(a).r();
        out.inertia = {r, r, n - 2 * r};
        out.rule = "even, cut center: (r,r,n-2r) with r=" + std::to_string(r);
    }
    return out;
}

struct SymmetryReport {
    bool odd_diameter = false;
    bool symmetric = false;
    bool consistent() const { return odd_diameter == symmetric; }
};

inline SymmetryReport check_symmetry_theorem(const Analysis& a, const IntPolynomial& chi) {
    require_theorem_hypotheses(a);
    return {a.prof.diameter % 2 == 1, is_spectrum_symmetric(chi)};
}

inline SymmetryReport check_symmetry_theorem(const Analysis& a) {
    return check_symmetry_theorem(a, char_poly(a.e.matrix()));
}

// ---------------------------------------------------------------------------
// Eigenvector reflection
// ---------------------------------------------------------------------------

/// Cells whose coordinates change sign to turn a mu-eigenvector into a (-mu)-eigenvector.
inline std::vector<int> reflection_cells(const UPartition& p) {
    switch (p.tag) {
    case PartitionCase::OddCut: return {2, 3, 4, 5};
    case PartitionCase::OddBothCut: return {2, 3, 4};
    default: throw Error(ErrorKind::Hypothesis, "reflection needs an odd-diameter partition");
    }
}

struct ReflectionReport {
    double worst = 0.0;  // largest relative residual over nonzero eigenvalues
    int checked = 0;
};

/**
 * For each nonzero eigenpair (mu, v) of E, flips the sign of v on the
 * reflection cells and measures ||E v' + mu v'|| / (||E||_F ||v'||).
 */
inline ReflectionReport reflection_residual(const EccMatrix& e, const UPartition& p) {
    auto flip = reflection_cells(p);
    std::vector<double> sign(static_cast<std::size_t>(e.order()), 1.0);
    for (int c : flip)
        if (p.cells[c])
            for (vertex_t v : *p.cells[c]) sign[v] = -1.0;
    auto a = to_real(e.matrix());
    auto eig = jacobi_eigen(a);
    const int n = a.order();
    const double norm = std::max(frobenius_norm(a), 1.0);
    ReflectionReport rep;
    for (int k = 0; k < n; ++k) {
        double mu = eig.values[k];
        if (std::abs(mu) <= 1e-8 * norm) continue;
        std::vector<double> v(static_cast<std::size_t>(n));
        double vn = 0;
        for (int i = 0; i < n; ++i) {
            v[i] = sign[i] * eig.vectors(i, k);
            vn += v[i] * v[i];
        }
        double res = 0;
        for (int i = 0; i < n; ++i) {
            double s = mu * v[i];
            for (int j = 0; j < n; ++j) s += a(i, j) * v[j];
            res += s * s;
        }
        rep.worst = std::max(rep.worst, std::sqrt(res) / (norm * std::sqrt(vn)));
        ++rep.checked;
    }
    return rep;
}

}  // namespace eccspectra
