#pragma once

#include <string>
#include <vector>

#include "eccspectra/analysis.hpp"
#include "eccspectra/check.hpp"
#include "eccspectra/oracle.hpp"
#include "eccspectra/spectral.hpp"
#include "eccspectra/theorem.hpp"

namespace eccspectra {

struct VerifyOptions {
    double reflection_tol = 1e-6;
    int minor_sum_limit = 8;  // oracle char-poly comparison for n up to this
};

/// Results of the invariant suite on one graph.
struct CaseResult {
    std::vector<CheckResult> checks;
    std::string note;  // why the theorem checks were skipped, if they were
    bool passed() const { return all_passed(checks); }
};

namespace detail {

inline void add(std::vector<CheckResult>& out, CheckResult c) { out.push_back(std::move(c)); }

template <class F>
void guarded(std::vector<CheckResult>& out, const std::string& name, F&& f) {
    try {
        f();
    } catch (const std::exception& ex) {
        out.push_back(fail(name, std::string("exception: ") + ex.what()));
    }
}

inline std::vector<CheckResult> base_checks(const Analysis& a, const IntPolynomial& chi, const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const int n = a.g.order();

    if (same_distances(a.dist, oracle_distances(a.g)))
        add(out, pass("distances.oracle"));
    else
        add(out, fail("distances.oracle", "BFS and Floyd-Warshall distances differ"));

    CheckResult shape = pass("ecc_matrix.shape");
    for (vertex_t i = 0; i < n && shape.passed; ++i) {
        bool row_nonzero = false;
        for (vertex_t j = 0; j < n; ++j) {
            if (a.e(i, j) != a.e(j, i) || a.e(i, j) < 0 || (i == j && a.e(i, j) != 0)) {
                shape = fail("ecc_matrix.shape", "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                break;
            }
            row_nonzero |= a.e(i, j) != 0;
        }
        if (shape.passed && n > 1 && !row_nonzero)
            shape = fail("ecc_matrix.shape", "row " + std::to_string(i + 1) + " is zero");
    }
    add(out, shape);

    if (n <= opt.minor_sum_limit) {
        if (oracle_char_poly(a.e.matrix()) == chi)
            add(out, pass("char_poly.minor_sums"));
        else
            add(out, fail("char_poly.minor_sums", "Berkowitz " + format_polynomial(chi) + " vs minors " +
                                                      format_polynomial(oracle_char_poly(a.e.matrix()))));
    }

    guarded(out, "inertia.float_agreement", [&] {
        auto exact = inertia_exact(chi);
        auto real = to_real(a.e.matrix());
        auto spec = eigenvalues_float(a.e.matrix());
        auto approx = float_inertia(spec.values, 1e-8 * std::max(frobenius_norm(real), 1.0));
        if (exact == approx)
            add(out, pass("inertia.float_agreement"));
        else
            add(out, fail("inertia.float_agreement", "exact " + to_string(exact) + " float " + to_string(approx)));
    });

    if (rank_exact(chi, n) == bareiss_rank(a.e.matrix()))
        add(out, pass("rank.agreement"));
    else
        add(out, fail("rank.agreement", "char-poly rank " + std::to_string(rank_exact(chi, n)) + " Bareiss rank " +
                                            std::to_string(bareiss_rank(a.e.matrix()))));
    return out;
}

}  // namespace detail

/**
 * Runs every invariant that applies to the graph. Base checks run on any
 * connected graph; T_G checks need class B; the center, partition and
 * inertia theorems also need diameter >= 4.
 */
inline CaseResult run_invariants(const Analysis& a, const VerifyOptions& opt = {}) {
    CaseResult res;
    auto chi = char_poly(a.e.matrix());
    res.checks = detail::base_checks(a, chi, opt);
    auto& out = res.checks;

    if (!a.cls.in_class_b()) {
        res.note = std::string("not in class B (") + to_string(a.cls.kind) + "): " + a.cls.witness;
        return res;
    }
    for (auto& c : verify_tg(a.g, a.bd, *a.tg, a.dist, a.prof)) out.push_back(std::move(c));
    out.push_back(check_distance_realization(a.dist, *a.tg));
    if (a.prof.diameter < 4) {
        res.note = "diameter " + std::to_string(a.prof.diameter) + " < 4: theorem checks skipped";
        return res;
    }
    const CenterInfo& c = *a.center;
    out.push_back(check_center_pair_has_cut(c, a.bd));
    out.push_back(check_center_subset(c, a.prof));
    out.push_back(check_center_theorem(c, a.prof));
    detail::guarded(out, "ecc.lemma_table", [&] { out.push_back(check_ecc_table(a.bd, a.prof)); });
    out.push_back(check_diametrical_paths(a.g, a.dist, a.prof));

    if (is_irreducible(a.e))
        out.push_back(pass("ecc_matrix.irreducible"));
    else
        out.push_back(fail("ecc_matrix.irreducible", "support graph of E is disconnected"));

    detail::guarded(out, "partition.block_structure", [&] {
        auto p = build_partition(a);
        out.push_back(check_partition(p, a.g.order()));
        out.push_back(verify_block_structure(a.e, p));
        if (p.tag == PartitionCase::EvenCut) {
            auto dd = diametrically_distinguished(a);
            if (dd.r() >= 2 && dd.r() == p.r)
                out.push_back(pass("dd.block_count"));
            else
                out.push_back(fail("dd.block_count", "r from dd vertices " + std::to_string(dd.r()) +
                                                         ", from components " + std::to_string(p.r)));
        }
        if (a.prof.diameter % 2 == 1) {
            auto refl = reflection_residual(a.e, p);
            if (refl.worst <= opt.reflection_tol)
                out.push_back(pass("eigen.reflection"));
            else
                out.push_back(fail("eigen.reflection", "relative residual " + std::to_string(refl.worst)));
        }
    });

    detail::guarded(out, "inertia.predicted", [&] {
        auto pred = predicted_inertia(a);
        auto exact = inertia_exact(chi);
        if (pred.inertia == exact)
            out.push_back(pass("inertia.predicted"));
        else
            out.push_back(fail("inertia.predicted", pred.rule + " gives " + to_string(pred.inertia) + ", exact " +
                                                        to_string(exact)));
    });

    auto sym = check_symmetry_theorem(a, chi);
    if (sym.consistent())
        out.push_back(pass("spectrum.symmetry"));
    else
        out.push_back(fail("spectrum.symmetry", std::string("diameter ") + (sym.odd_diameter ? "odd" : "even") +
                                                    ", spectrum " + (sym.symmetric ? "symmetric" : "asymmetric")));
    return res;
}

inline CaseResult run_invariants(const Graph& g, const VerifyOptions& opt = {}) {
    return run_invariants(analyze_graph(g), opt);
}

/**
 * Greedy shrink: repeatedly deletes a vertex while the remainder stays
 * connected and still fails `still_fails`. Returns the smallest graph found.
 */
template <class Pred>
Graph shrink_witness(Graph g, Pred&& still_fails) {
    bool progress = true;
    while (progress && g.order() > 2) {
        progress = false;
        for (vertex_t v = 0; v < g.order(); ++v) {
            Graph h = delete_vertex(g, v);
            if (!is_connected(h)) continue;
            bool fails = false;
            try {
                fails = still_fails(h);
            } catch (const std::exception&) {
                fails = false;
            }
            if (fails) {
                g = std::move(h);
                progress = true;
                break;
            }
        }
    }
    return g;
}

}  // namespace eccspectra
