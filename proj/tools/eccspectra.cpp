// eccspectra: command-line front end for the eccentricity-matrix library.
//
// Exit codes: 0 ok, 1 property failure, 2 input error or violated hypothesis,
// 3 infeasible generation, 4 I/O error, 5 numerical failure.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eccspectra/eccspectra.hpp"

using namespace eccspectra;
using nlohmann::json;

namespace {

constexpr int kSchema = 1;

enum Exit { Ok = 0, PropertyFailure = 1, InputError = 2, InfeasibleGen = 3, IoError = 4, Numerical = 5 };

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::Infeasible: return InfeasibleGen;
    case ErrorKind::Convergence: return Numerical;
    default: return InputError;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    if (in.bad()) throw IoFailure("error reading " + path);
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw IoFailure("cannot write " + path);
}

unsigned thread_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ECCSPECTRA_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return std::min(hw, static_cast<unsigned>(v));
        } catch (const std::exception&) {
        }
        return 1;
    }
    return hw;
}

// ---------------------------------------------------------------------------
// JSON helpers

double round6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

json exact(const BigInt& x) {
    static const BigInt limit = BigInt(1) << 53;
    if (abs(x) <= limit) return static_cast<long long>(x);
    return x.str();
}

/// Eigenvalues rounded for display; those within 1e-8 ||E|| of zero print as 0.
std::vector<double> display_values(const Spectrum& s, const IntMatrix& e) {
    const double tol = 1e-8 * std::max(frobenius_norm(to_real(e)), 1.0);
    std::vector<double> out;
    for (double x : s.values) out.push_back(std::abs(x) <= tol ? 0.0 : round6(x));
    return out;
}

json labels(const std::vector<vertex_t>& vs) {
    json a = json::array();
    for (vertex_t v : vs) a.push_back(label_of(v));
    return a;
}

json inertia_json(const Inertia& in) { return {{"plus", in.plus}, {"minus", in.minus}, {"zero", in.zero}}; }

json polynomial_json(const IntPolynomial& p) {
    json a = json::array();
    for (int k = p.degree(); k >= 0; --k) a.push_back(exact(p.coeffs[static_cast<std::size_t>(k)]));
    return a;
}

json checks_json(const std::vector<CheckResult>& cs) {
    json a = json::array();
    for (const auto& c : cs) {
        json o = {{"name", c.name}, {"passed", c.passed}};
        if (!c.passed) o["witness"] = c.witness;
        a.push_back(o);
    }
    return a;
}

std::string fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json fingerprint(const Graph& g, const std::string& source) {
    return {{"source", source}, {"n", g.order()}, {"m", g.size()}, {"hash", "fnv1a:" + fnv1a(format_edge_list(g))}};
}

json report(const std::string& command, const Graph& g, const std::string& source) {
    return {{"schema", kSchema}, {"command", command}, {"input", fingerprint(g, source)}, {"results", json::object()}};
}

// ---------------------------------------------------------------------------
// Shared options

struct Common {
    bool json_out = false;
    bool roundtrip = false;
    std::string out;
};

struct Emitter {
    const Common& opt;
    std::ostringstream text;

    // Returns false when the round-trip check fails.
    bool emit(const json& j) {
        std::string s = j.dump();
        bool ok = true;
        if (opt.roundtrip) ok = json::parse(s).dump() == s;
        if (opt.json_out) text << s << '\n';
        return ok;
    }

    void flush() {
        if (opt.out.empty())
            std::cout << text.str() << std::flush;
        else
            write_file(opt.out, text.str());
    }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_flag("--json", c.json_out, "Print a JSON report");
    sub->add_flag("--check-roundtrip", c.roundtrip, "Fail unless the JSON report re-serializes byte-identically");
    sub->add_option("--out", c.out, "Write output to this file instead of stdout");
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::string cell_name(int i) { return "U" + std::to_string(i + 1); }

// ---------------------------------------------------------------------------
// analyze

int cmd_analyze(const std::string& path, const Common& opt) {
    Graph g = load_graph(path);
    auto a = analyze_graph(std::move(g), thread_cap());
    auto chi = char_poly(a.e.matrix());
    auto in = inertia_exact(chi);
    bool symmetric = is_spectrum_symmetric(chi);
    bool irreducible = is_irreducible(a.e);
    auto spec = display_values(eigenvalues_float(a.e.matrix()), a.e.matrix());

    json r = report("analyze", a.g, path);
    auto& res = r["results"];
    res["class"] = to_string(a.cls.kind);
    if (!a.cls.in_class_b() && !a.cls.witness.empty()) res["class_witness"] = a.cls.witness;
    res["blocks"] = a.bd.blocks.size();
    res["cut_vertices"] = labels(a.bd.cut_vertices);
    res["diameter"] = a.prof.diameter;
    res["radius"] = a.prof.radius;
    res["center"] = labels(a.prof.center);
    res["eccentricities"] = a.prof.ecc;
    res["char_poly"] = polynomial_json(chi);
    res["inertia"] = inertia_json(in);
    res["rank"] = in.rank();
    res["symmetric"] = symmetric;
    res["irreducible"] = irreducible;
    res["eigenvalues"] = spec;

    std::ostringstream t;
    t << "graph " << path << ": n=" << a.g.order() << " m=" << a.g.size() << ", " << to_string(a.cls.kind)
      << '\n';
    if (!a.cls.in_class_b() && !a.cls.witness.empty()) t << "  not in class B: " << a.cls.witness << '\n';
    t << "diameter " << a.prof.diameter << ", radius " << a.prof.radius << ", center "
      << format_labels(a.prof.center) << '\n';
    t << "blocks " << a.bd.blocks.size() << ", cut-vertices " << format_labels(a.bd.cut_vertices) << '\n';
    t << "char poly " << format_polynomial(chi) << '\n';
    t << "inertia " << to_string(in) << ", rank " << in.rank() << ", symmetric spectrum "
      << (symmetric ? "yes" : "no") << ", irreducible " << (irreducible ? "yes" : "no") << '\n';
    t << "eigenvalues";
    for (double x : spec) t << ' ' << x;
    t << '\n';

    bool ok = true;
    if (a.theorem_applicable()) {
        const auto& c = *a.center;
        auto pred = predicted_inertia(a);
        auto sym = check_symmetry_theorem(a, chi);
        auto p = build_partition(a);
        bool consistent = pred.inertia == in;
        ok = consistent && sym.consistent();
        res["tg_vertices"] = labels(a.tg->vertices);
        res["center_case"] = to_string(c.tag);
        res["center_tg"] = labels(c.center_tg);
        res["partition_case"] = to_string(p.tag);
        json cells = json::array();
        for (const auto& cell : p.cells) cells.push_back(cell ? labels(*cell) : json(nullptr));
        res["partition"] = cells;
        res["predicted_inertia"] = inertia_json(pred.inertia);
        res["prediction_rule"] = pred.rule;
        res["inertia_consistent"] = consistent;
        res["symmetry_consistent"] = sym.consistent();

        t << "T_G vertices " << format_labels(a.tg->vertices) << ", center case " << to_string(c.tag) << '\n';
        t << "partition " << to_string(p.tag);
        for (int i = 0; i < p.cell_count(); ++i)
            t << ' ' << cell_name(i) << '=' << (p.cells[i] ? format_labels(*p.cells[i]) : std::string("-"));
        t << '\n';
        t << "predicted inertia " << to_string(pred.inertia) << " [" << pred.rule << "]: "
          << (consistent ? "PASS" : "FAIL") << '\n';
        t << "symmetric iff odd diameter: " << (sym.consistent() ? "PASS" : "FAIL") << '\n';
    } else if (a.cls.in_class_b()) {
        t << "theorem checks skipped: diameter " << a.prof.diameter << " < 4\n";
        res["tg_vertices"] = labels(a.tg->vertices);
    }

    Emitter e{opt, {}};
    bool rt = e.emit(r);
    if (!opt.json_out) e.text << t.str();
    e.flush();
    if (!rt) std::cerr << "JSON round-trip mismatch\n";
    return ok && rt ? Ok : PropertyFailure;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::optional<std::string> path;
    std::string expect_matrix;
    int count = 1;
    GenParams gen;
    std::string witness_out = "eccspectra-witness.edges";
};

CheckResult expect_matrix_check(const EccMatrix& e, const IntMatrix& want) {
    if (want.order() != e.order())
        return fail("ecc_matrix.expected", "order " + std::to_string(e.order()) + " vs file " +
                                               std::to_string(want.order()));
    for (int i = 0; i < e.order(); ++i)
        for (int j = 0; j < e.order(); ++j)
            if (e(i, j) != want(i, j))
                return fail("ecc_matrix.expected", "E(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                       ")=" + std::to_string(e(i, j)) + " file has " +
                                                       std::to_string(want(i, j)));
    return pass("ecc_matrix.expected");
}

struct VerifyCase {
    std::string label;
    Graph g;
    CaseResult result;
    std::string error;
};

int cmd_verify(const VerifyArgs& va, const Common& opt) {
    std::vector<VerifyCase> cases;
    std::optional<IntMatrix> expected;
    if (!va.expect_matrix.empty()) expected = parse_matrix(read_file(va.expect_matrix));
    if (va.path) {
        cases.push_back({*va.path, load_graph(*va.path), {}, {}});
    } else {
        if (va.count < 1) throw Error(ErrorKind::Invalid, "--count must be positive");
        va.gen.validate();
        for (int i = 0; i < va.count; ++i) {
            GenParams p = va.gen;
            p.seed = va.gen.seed + static_cast<std::uint64_t>(i);
            cases.push_back({"seed " + std::to_string(p.seed), random_class_b(p), {}, {}});
        }
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < cases.size();) {
            auto& c = cases[i];
            try {
                auto a = analyze_graph(c.g);
                c.result = run_invariants(a);
                if (expected) c.result.checks.push_back(expect_matrix_check(a.e, *expected));
            } catch (const std::exception& ex) {
                c.error = ex.what();
            }
        }
    };
    unsigned threads = std::min<unsigned>(thread_cap(), static_cast<unsigned>(cases.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    Emitter e{opt, {}};
    bool rt = true;
    int failed = 0;
    const VerifyCase* first_failure = nullptr;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        bool ok = c.error.empty() && c.result.passed();
        if (!ok) {
            ++failed;
            if (!first_failure) first_failure = &c;
        }
        if (opt.json_out) {
            json j = report("verify", c.g, c.label);
            j["case"] = i;
            j["passed"] = ok;
            j["checks"] = checks_json(c.result.checks);
            if (!c.result.note.empty()) j["note"] = c.result.note;
            if (!c.error.empty()) j["error"] = c.error;
            rt = e.emit(j) && rt;
        } else {
            e.text << (ok ? "PASS" : "FAIL") << " case " << i << " (" << c.label << ", n=" << c.g.order() << ", "
                   << c.result.checks.size() << " checks)";
            if (!c.result.note.empty()) e.text << " note: " << c.result.note;
            e.text << '\n';
            for (const auto& ch : c.result.checks)
                if (!ch.passed) e.text << "  " << ch.name << ": " << ch.witness << '\n';
            if (!c.error.empty()) e.text << "  error: " << c.error << '\n';
        }
    }
    e.flush();
    std::cerr << cases.size() - static_cast<std::size_t>(failed) << "/" << cases.size() << " cases passed\n";

    if (first_failure) {
        std::string name;
        for (const auto& ch : first_failure->result.checks)
            if (!ch.passed) {
                name = ch.name;
                break;
            }
        Graph w = first_failure->g;
        if (!name.empty() && name != "ecc_matrix.expected") {
            w = shrink_witness(w, [&](const Graph& h) {
                try {
                    for (const auto& ch : run_invariants(h).checks)
                        if (ch.name == name && !ch.passed) return true;
                } catch (const std::exception&) {
                }
                return false;
            });
        }
        std::vector<std::string> header{"witness from " + first_failure->label,
                                        "failing check: " + (name.empty() ? first_failure->error : name)};
        write_file(va.witness_out, format_edge_list(w, header));
        std::cerr << "witness (" << w.order() << " vertices) written to " << va.witness_out << '\n';
    }
    if (!rt) std::cerr << "JSON round-trip mismatch\n";
    return failed || !rt ? PropertyFailure : Ok;
}

// ---------------------------------------------------------------------------
// thin wrappers

int cmd_blocks(const std::string& path, const Common& opt) {
    Graph g = load_graph(path);
    auto bd = decompose(g);
    auto cls = classify(g, bd);
    json r = report("blocks", g, path);
    auto& res = r["results"];
    res["class"] = to_string(cls.kind);
    res["cut_vertices"] = labels(bd.cut_vertices);
    json bl = json::array();
    std::ostringstream t;
    t << "class " << to_string(cls.kind);
    if (!cls.witness.empty()) t << " (" << cls.witness << ")";
    t << "\ncut-vertices " << format_labels(bd.cut_vertices) << '\n';
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        const auto& b = bd.blocks[i];
        json o = {{"vertices", labels(b.vertices)}, {"kind", to_string(b.kind)}, {"cut_count", b.cut_count}};
        t << "block " << i + 1 << ": " << to_string(b.kind) << ' ' << format_labels(b.vertices);
        if (b.parts) {
            o["parts"] = {labels(b.parts->first), labels(b.parts->second)};
            t << " K_{" << b.parts->first.size() << ',' << b.parts->second.size() << "} "
              << format_labels(b.parts->first) << '|' << format_labels(b.parts->second);
        } else {
            o["parts"] = nullptr;
            t << " not complete bipartite";
        }
        t << ", " << b.cut_count << " cut-vertices\n";
        bl.push_back(o);
    }
    res["blocks"] = bl;
    Emitter e{opt, {}};
    bool rt = e.emit(r);
    if (!opt.json_out) e.text << t.str();
    e.flush();
    return rt ? Ok : PropertyFailure;
}

int cmd_tg(const std::string& path, const Common& opt) {
    Graph g = load_graph(path);
    auto bd = decompose(g);
    auto tg = build_tg(g, bd);
    auto dist = all_pairs_distances(g, thread_cap());
    auto prof = ecc_profile(dist);
    auto checks = verify_tg(g, bd, tg, dist, prof);
    json r = report("tg", g, path);
    auto& res = r["results"];
    res["vertices"] = labels(tg.vertices);
    json edges = json::array();
    std::ostringstream t;
    t << "T_G vertices " << format_labels(tg.vertices) << '\n';
    t << tg.tree.order() << ' ' << tg.tree.size() << '\n';
    for (auto [u, v] : tg.tree.edges()) {
        edges.push_back({label_of(tg.vertices[u]), label_of(tg.vertices[v])});
        t << label_of(tg.vertices[u]) << ' ' << label_of(tg.vertices[v]) << '\n';
    }
    res["edges"] = edges;
    r["checks"] = checks_json(checks);
    for (const auto& c : checks) t << (c.passed ? "PASS " : "FAIL ") << c.name << (c.passed ? "" : ": " + c.witness) << '\n';
    Emitter e{opt, {}};
    bool rt = e.emit(r);
    if (!opt.json_out) e.text << t.str();
    e.flush();
    return all_passed(checks) && rt ? Ok : PropertyFailure;
}

int cmd_center(const std::string& path, const Common& opt) {
    auto a = analyze_graph(load_graph(path), thread_cap());
    require_theorem_hypotheses(a);
    const auto& c = *a.center;
    std::vector<CheckResult> checks{check_center_subset(c, a.prof), check_center_theorem(c, a.prof),
                                    check_center_pair_has_cut(c, a.bd)};
    json r = report("center", a.g, path);
    auto& res = r["results"];
    res["center"] = labels(c.center_g);
    res["center_tg"] = labels(c.center_tg);
    res["case"] = to_string(c.tag);
    res["brute_force_center"] = labels(a.prof.center);
    r["checks"] = checks_json(checks);
    std::ostringstream t;
    t << "C(G) " << format_labels(c.center_g) << ", C(T_G) " << format_labels(c.center_tg) << ", case "
      << to_string(c.tag) << '\n';
    t << "brute force " << format_labels(a.prof.center) << '\n';
    for (const auto& ch : checks) t << (ch.passed ? "PASS " : "FAIL ") << ch.name << (ch.passed ? "" : ": " + ch.witness) << '\n';
    Emitter e{opt, {}};
    bool rt = e.emit(r);
    if (!opt.json_out) e.text << t.str();
    e.flush();
    return all_passed(checks) && rt ? Ok : PropertyFailure;
}

int cmd_ecc_matrix(const std::string& path, bool dump, const Common& opt) {
    Graph g = load_graph(path);
    auto dist = all_pairs_distances(g, thread_cap());
    auto prof = ecc_profile(dist);
    auto e = eccentricity_matrix(dist, prof);
    json r = report("ecc-matrix", g, path);
    json rows = json::array();
    for (int i = 0; i < e.order(); ++i) {
        json row = json::array();
        for (int j = 0; j < e.order(); ++j) row.push_back(e(i, j));
        rows.push_back(row);
    }
    r["results"]["matrix"] = rows;
    r["results"]["eccentricities"] = prof.ecc;
    Emitter em{opt, {}};
    bool rt = em.emit(r);
    if (!opt.json_out) {
        if (!dump) {
            em.text << "# eccentricities";
            for (int x : prof.ecc) em.text << ' ' << x;
            em.text << '\n';
        }
        em.text << format_matrix(e.matrix());
    }
    em.flush();
    return rt ? Ok : PropertyFailure;
}

int cmd_spectrum(const std::string& path, const Common& opt) {
    Graph g = load_graph(path);
    auto e = eccentricity_matrix(g).matrix();
    auto chi = char_poly(e);
    auto in = inertia_exact(chi);
    auto spec = eigenvalues_float(e);
    auto shown = display_values(spec, e);
    json r = report("spectrum", g, path);
    auto& res = r["results"];
    res["char_poly"] = polynomial_json(chi);
    res["inertia"] = inertia_json(in);
    res["rank"] = in.rank();
    res["symmetric"] = is_spectrum_symmetric(chi);
    res["eigenvalues"] = shown;
    res["clusters"] = spec.cluster;
    std::ostringstream t;
    t << "char poly " << format_polynomial(chi) << '\n';
    t << "inertia " << to_string(in) << ", rank " << in.rank() << ", symmetric "
      << (is_spectrum_symmetric(chi) ? "yes" : "no") << '\n';
    t << "eigenvalues";
    for (double x : shown) t << ' ' << x;
    t << '\n';
    Emitter em{opt, {}};
    bool rt = em.emit(r);
    if (!opt.json_out) em.text << t.str();
    em.flush();
    return rt ? Ok : PropertyFailure;
}

int cmd_partition(const std::string& path, const Common& opt) {
    auto a = analyze_graph(load_graph(path), thread_cap());
    auto p = build_partition(a);
    std::vector<CheckResult> checks{check_partition(p, a.g.order()), verify_block_structure(a.e, p)};
    json r = report("partition", a.g, path);
    auto& res = r["results"];
    res["case"] = to_string(p.tag);
    res["m"] = p.m;
    if (p.tag == PartitionCase::EvenCut) res["r"] = p.r;
    json cells = json::array();
    std::ostringstream t;
    t << "partition " << to_string(p.tag) << ", m=" << p.m;
    if (p.tag == PartitionCase::EvenCut) t << ", r=" << p.r;
    t << '\n';
    for (int i = 0; i < p.cell_count(); ++i) {
        cells.push_back(p.cells[i] ? labels(*p.cells[i]) : json(nullptr));
        t << cell_name(i) << ' ' << (p.cells[i] ? format_labels(*p.cells[i]) : std::string("-")) << '\n';
    }
    res["cells"] = cells;
    r["checks"] = checks_json(checks);
    for (const auto& ch : checks) t << (ch.passed ? "PASS " : "FAIL ") << ch.name << (ch.passed ? "" : ": " + ch.witness) << '\n';
    Emitter em{opt, {}};
    bool rt = em.emit(r);
    if (!opt.json_out) em.text << t.str();
    em.flush();
    return all_passed(checks) && rt ? Ok : PropertyFailure;
}

int cmd_generate(const GenParams& p, int count, const Common& opt) {
    if (count < 1) throw Error(ErrorKind::Invalid, "--count must be positive");
    std::ostringstream text;
    for (int i = 0; i < count; ++i) {
        GenParams q = p;
        q.seed = p.seed + static_cast<std::uint64_t>(i);
        Graph g = random_class_b(q);
        text << format_edge_list(g, {"eccspectra generate " + q.describe()});
    }
    if (opt.out.empty())
        std::cout << text.str();
    else
        write_file(opt.out, text.str());
    return Ok;
}

void add_gen_options(CLI::App* sub, GenParams& p, std::string& parity) {
    sub->add_option("--seed", p.seed, "Generator seed");
    sub->add_option("--min-diam", p.min_diameter, "Minimum diameter");
    sub->add_option("--parity", parity, "Diameter parity: any, odd or even");
    sub->add_option("--min-blocks", p.min_blocks, "Minimum number of blocks");
    sub->add_option("--max-blocks", p.max_blocks, "Maximum number of blocks");
    sub->add_option("--min-part", p.min_part, "Minimum part size of a block");
    sub->add_option("--max-part", p.max_part, "Maximum part size of a block");
    sub->add_option("--max-vertices", p.max_vertices, "Vertex budget");
    sub->add_option("--max-attempts", p.max_attempts, "Rejection budget");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eccentricity matrices of bi-block graphs"};
    app.require_subcommand(1);

    Common common;
    std::string path;
    std::string parity = "any";
    VerifyArgs va;
    GenParams gp;
    int gen_count = 1;
    bool dump = false;

    auto file_cmd = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("graph", path, "Edge-list file")->required();
        add_common(s, common);
        return s;
    };
    auto* analyze = file_cmd("analyze", "Full spectral and structural report");
    auto* blocks = file_cmd("blocks", "Block decomposition and classification");
    auto* tg = file_cmd("tg", "Associated tree T_G");
    auto* center = file_cmd("center", "Center of G via T_G");
    auto* ecc = file_cmd("ecc-matrix", "Eccentricity matrix");
    ecc->add_flag("--dump-matrix", dump, "Print only the matrix rows");
    auto* spectrum = file_cmd("spectrum", "Characteristic polynomial, inertia and eigenvalues");
    auto* partition = file_cmd("partition", "Vertex partition and block form of E(G)");

    auto* verify = app.add_subcommand("verify", "Run the invariant suite on a file or on generated graphs");
    std::string vpath;
    verify->add_option("graph", vpath, "Edge-list file (otherwise graphs are generated)");
    verify->add_option("--count", va.count, "Number of generated cases");
    verify->add_option("--expect-matrix", va.expect_matrix, "Compare E(G) with this matrix file");
    verify->add_option("--witness", va.witness_out, "Where to write the shrunk failing graph");
    add_gen_options(verify, va.gen, parity);
    add_common(verify, common);

    auto* generate = app.add_subcommand("generate", "Emit random class-B graphs");
    add_gen_options(generate, gp, parity);
    generate->add_option("--count", gen_count, "Number of graphs");
    add_common(generate, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : InputError;
    }

    try {
        if (*analyze) return cmd_analyze(path, common);
        if (*blocks) return cmd_blocks(path, common);
        if (*tg) return cmd_tg(path, common);
        if (*center) return cmd_center(path, common);
        if (*ecc) return cmd_ecc_matrix(path, dump, common);
        if (*spectrum) return cmd_spectrum(path, common);
        if (*partition) return cmd_partition(path, common);
        if (*verify) {
            if (!vpath.empty()) va.path = vpath;
            va.gen.parity = parse_parity(parity);
            return cmd_verify(va, common);
        }
        if (*generate) {
            gp.parity = parse_parity(parity);
            return cmd_generate(gp, gen_count, common);
        }
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return IoError;
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_code(e.kind());
    }
    return InputError;
}
