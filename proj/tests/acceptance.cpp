// Acceptance run: one PASS/FAIL line per criterion.
// Exit status is 0 when the failing criteria are exactly those given with --known-failures.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eccspectra/eccspectra.hpp"
#include "property_checks.hpp"

using namespace eccspectra;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

std::string read_data(const std::string& name) {
    std::ifstream in(std::string(ECCSPECTRA_DATA) + "/" + name);
    if (!in) throw std::runtime_error("cannot read " + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

bool close_values(const std::vector<double>& got, const std::vector<double>& want, double tol) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (std::abs(got[i] - want[i]) > tol) return false;
    return true;
}

bool contains_value(const std::vector<double>& values, double x, double tol) {
    for (double v : values)
        if (std::abs(v - x) <= tol) return true;
    return false;
}

std::vector<double> nonzero(const std::vector<double>& v, double tol) {
    std::vector<double> out;
    for (double x : v)
        if (std::abs(x) > tol) out.push_back(x);
    return out;
}

std::vector<vertex_t> zero_based(std::vector<int> labels) {
    for (int& x : labels) --x;
    return labels;
}

Outcome golden_h() {
    Outcome o;
    auto a = analyze_graph(parse_graph(read_data("h.edges")));
    o.require(a.e.matrix() == parse_matrix(read_data("h.matrix")), "E(H) differs from the printed matrix");
    auto s = eigenvalues_float(a.e.matrix());
    o.require(close_values(s.values, {-4.1394, -2, -0.7849, 2, 4.9243}, 1e-3), "eigenvalues of E(H)");
    auto chi = char_poly(a.e.matrix());
    o.require(!is_spectrum_symmetric(chi), "E(H) spectrum reported symmetric");
    o.require(inertia_exact(chi) == Inertia{2, 3, 0}, "inertia " + to_string(inertia_exact(chi)));
    return o;
}

Outcome golden_example16() {
    Outcome o;
    auto a = analyze_graph(parse_graph(read_data("example16.edges")));
    o.require(a.tg && a.tg->vertices == zero_based({1, 2, 3, 5, 7, 9, 10, 13, 15}),
              "T_G vertex set " + (a.tg ? format_labels(a.tg->vertices) : std::string("missing")));
    o.require(a.prof.diameter == 7, "diam(G)=" + std::to_string(a.prof.diameter));
    if (a.tg) {
        int dt = ecc_profile(all_pairs_distances(a.tg->tree)).diameter;
        o.require(dt == 7, "diam(T_G)=" + std::to_string(dt));
    }
    auto p = build_partition(a);
    std::vector<std::optional<std::vector<vertex_t>>> want{zero_based({1, 2, 6}),     zero_based({3, 4, 5, 7}),
                                                           zero_based({15, 16}),      zero_based({9, 13, 14}),
                                                           zero_based({8}),           zero_based({10, 11, 12})};
    o.require(p.cells == want, "U-partition cells");
    std::vector<long long> prow, qcol;
    for (vertex_t b : zero_based({13, 14, 9})) prow.push_back(a.e((*p.cells[0])[0], b));
    for (vertex_t r : *p.cells[1]) qcol.push_back(a.e(r, (*p.cells[2])[0]));
    for (vertex_t r : *p.cells[0])
        o.require(a.e(r, 12) == 6 && a.e(r, 13) == 6 && a.e(r, 8) == 5, "P rows differ");
    for (vertex_t r : *p.cells[1]) o.require(a.e(r, 14) == a.e(r, 15), "Q columns differ");
    o.require(prow == std::vector<long long>{6, 6, 5}, "P row");
    o.require(qcol == std::vector<long long>{6, 6, 5, 4}, "Q column");
    o.require(verify_block_structure(a.e, p).passed, "block structure");
    auto chi = char_poly(a.e.matrix());
    o.require(inertia_exact(chi) == Inertia{2, 2, 12}, "inertia " + to_string(inertia_exact(chi)));
    o.require(is_spectrum_symmetric(chi), "spectrum not symmetric");
    auto s = eigenvalues_float(a.e.matrix());
    for (double x : {30.0375, -30.0375, 11.3025, -11.3025})
        o.require(contains_value(s.values, x, 1e-3), "eigenvalue " + std::to_string(x) + " missing");
    o.require(is_irreducible(a.e), "E(G) reducible");
    return o;
}

Outcome golden_nonb9() {
    Outcome o;
    auto g = parse_graph(read_data("nonb9.edges"));
    auto a = analyze_graph(g);
    o.require(!a.cls.in_class_b(), "graph classified as class B");
    o.require(a.e.matrix() == parse_matrix(read_data("nonb9.matrix")), "E(G) differs from the printed matrix");
    auto chi = char_poly(a.e.matrix());
    o.require(inertia_exact(chi) == Inertia{3, 3, 3}, "inertia " + to_string(inertia_exact(chi)));
    o.require(!is_spectrum_symmetric(chi), "spectrum reported symmetric");
    auto s = eigenvalues_float(a.e.matrix());
    o.require(close_values(nonzero(s.values, 1e-6), {-9.4967, -4.3784, -2.9329, 1.4150, 5.2920, 10.1010}, 1e-3),
              "nonzero eigenvalues");
    return o;
}

struct FuzzRun {
    std::map<std::string, int> ran, failed;
    std::map<std::string, std::string> first;
    int cases = 0;
};

FuzzRun run_fuzz() {
    FuzzRun f;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        GenParams p;
        p.seed = seed;
        auto r = run_invariants(random_class_b(p));
        ++f.cases;
        for (const auto& c : r.checks) {
            ++f.ran[c.name];
            if (c.passed) continue;
            if (!f.failed[c.name]++) f.first[c.name] = "seed " + std::to_string(seed) + " " + c.witness;
        }
    }
    return f;
}

Outcome fuzz_theorems(const FuzzRun& f) {
    Outcome o;
    for (const char* name : {"inertia.predicted", "spectrum.symmetry", "ecc_matrix.irreducible", "tg.equal_diameter",
                             "tg.equal_eccentricity", "center.tg_subset", "center.theorem", "ecc.lemma_table",
                             "diametrical.center_cut", "partition.block_structure"}) {
        auto it = f.ran.find(name);
        o.require(it != f.ran.end() && it->second == f.cases, std::string(name) + " not run on every case");
    }
    for (const auto& [name, count] : f.failed)
        if (count && name.rfind("distances.", 0) != 0 && name.rfind("char_poly.", 0) != 0 &&
            name != "inertia.float_agreement")
            o.require(false, name + " failed on " + std::to_string(count) + "/" + std::to_string(f.cases) +
                                 " (first: " + f.first.at(name) + ")");
    return o;
}

Outcome oracle_agreement(const FuzzRun& f) {
    Outcome o;
    for (const char* name : {"distances.oracle", "inertia.float_agreement"}) {
        o.require(f.ran.count(name) && f.ran.at(name) == f.cases, std::string(name) + " not run on every case");
        if (f.failed.count(name) && f.failed.at(name))
            o.require(false, std::string(name) + " failed: " + f.first.at(name));
    }
    int small = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        GenParams p;
        p.seed = seed;
        p.max_vertices = 8;
        p.min_diameter = 2;
        auto m = eccentricity_matrix(random_class_b(p)).matrix();
        ++small;
        if (char_poly(m) != oracle_char_poly(m)) o.require(false, "minor sums differ, small seed " + std::to_string(seed));
    }
    int fuzz_small = f.ran.count("char_poly.minor_sums") ? f.ran.at("char_poly.minor_sums") : 0;
    if (f.failed.count("char_poly.minor_sums") && f.failed.at("char_poly.minor_sums"))
        o.require(false, "minor sums differ: " + f.first.at("char_poly.minor_sums"));
    o.notes.push_back(std::to_string(small + fuzz_small) + " matrices of order <= 8 compared with minor sums");
    return o;
}

Outcome matrix_properties() {
    Outcome o;
    auto il = props::interlacing(2024, 100);
    auto sc = props::schur_additivity(77, 50);
    o.require(il.draws == 100 && il.ok(), il.failures.empty() ? "interlacing draw count" : il.failures.front());
    o.require(sc.draws == 50 && sc.ok(), sc.failures.empty() ? "Schur draw count" : sc.failures.front());
    return o;
}

Outcome reflection() {
    Outcome o;
    double worst = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GenParams p;
        p.seed = seed;
        p.parity = Parity::Odd;
        auto a = analyze_graph(random_class_b(p));
        auto r = reflection_residual(a.e, build_partition(a));
        worst = std::max(worst, r.worst);
        o.require(r.checked > 0, "no eigenpairs checked, seed " + std::to_string(seed));
        o.require(r.worst <= 1e-6, "seed " + std::to_string(seed) + " residual " + std::to_string(r.worst));
    }
    std::ostringstream s;
    s << "worst relative residual " << worst;
    o.notes.push_back(s.str());
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> known;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--known-failures" && i + 1 < argc) {
            std::stringstream list(argv[++i]);
            for (std::string item; std::getline(list, item, ',');) known.insert(std::stoi(item));
        } else {
            std::cerr << "usage: acceptance [--known-failures N,M,...]\n";
            return 2;
        }
    }

    FuzzRun fuzz;
    double fuzz_seconds = 0;
    struct Criterion {
        int id;
        std::string title;
        double budget;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, "golden graph H", 1, golden_h},
        {2, "golden 16-vertex graph", 1, golden_example16},
        {3, "golden 9-vertex graph outside the class", 1, golden_nonb9},
        {4, "theorem fuzz, seeds 1..200", 60,
         [&] {
             auto t0 = std::chrono::steady_clock::now();
             fuzz = run_fuzz();
             fuzz_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
             return fuzz_theorems(fuzz);
         }},
        {5, "exact/oracle agreement", 60, [&] { return oracle_agreement(fuzz); }},
        {6, "interlacing and Schur-complement inertia", 10, matrix_properties},
        {7, "eigenvector reflection on 20 odd cases", 60, reflection},
    };

    std::set<int> failed;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& ex) {
            o.require(false, std::string("exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.id == 5) secs += fuzz_seconds;
        o.require(secs < c.budget, "runtime over budget");
        if (!o.ok) failed.insert(c.id);
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << secs << " s)";
        for (const auto& n : o.notes) std::cout << "\n    " << n;
        std::cout << std::endl;
    }
    if (!known.empty()) {
        std::cout << "known failures:";
        for (int k : known) std::cout << ' ' << k;
        std::cout << std::endl;
    }
    return failed == known ? 0 : 1;
}
