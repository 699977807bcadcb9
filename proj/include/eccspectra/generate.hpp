#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eccspectra/blocks.hpp"
#include "eccspectra/error.hpp"
#include "eccspectra/graph.hpp"

namespace eccspectra {

/**
 * xoshiro256** (Blackman and Vigna), state seeded by four splitmix64 outputs.
 * splitmix64: x += 0x9E3779B97F4A7C15; z = x; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
 * z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31.
 * next(): result = rotl(s1 * 5, 7) * 9; t = s1 << 17; s2 ^= s0; s3 ^= s1;
 * s1 ^= s2; s0 ^= s3; s2 ^= t; s3 = rotl(s3, 45).
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : s_) w = splitmix64(x);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform integer in [lo, hi] by rejection (no modulo bias).
    int uniform(int lo, int hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t threshold = (0 - range) % range;
        std::uint64_t x;
        do x = next();
        while (x < threshold);
        return lo + static_cast<int>(x % range);
    }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

enum class Parity { Any, Odd, Even };

inline const char* to_string(Parity p) {
    switch (p) {
    case Parity::Any: return "any";
    case Parity::Odd: return "odd";
    case Parity::Even: return "even";
    }
    return "?";
}

inline Parity parse_parity(const std::string& s) {
    if (s == "any") return Parity::Any;
    if (s == "odd") return Parity::Odd;
    if (s == "even") return Parity::Even;
    throw Error(ErrorKind::Invalid, "parity must be odd, even or any, got '" + s + "'");
}

struct GenParams {
    std::uint64_t seed = 1;
    int min_blocks = 2, max_blocks = 12;
    int min_part = 1, max_part = 3;
    Parity parity = Parity::Any;
    int min_diameter = 4;
    int max_vertices = 60;
    int max_attempts = 10000;

    void validate() const {
        if (min_blocks < 1 || min_blocks > max_blocks) throw Error(ErrorKind::Invalid, "empty block-count range");
        if (min_part < 1 || min_part > max_part) throw Error(ErrorKind::Invalid, "empty part-size range");
        if (max_vertices < 2) throw Error(ErrorKind::Invalid, "max_vertices must be at least 2");
        if (max_attempts < 1) throw Error(ErrorKind::Invalid, "max_attempts must be positive");
    }

    std::string describe() const {
        return "seed=" + std::to_string(seed) + " blocks=" + std::to_string(min_blocks) + ".." +
               std::to_string(max_blocks) + " parts=" + std::to_string(min_part) + ".." + std::to_string(max_part) +
               " parity=" + to_string(parity) + " min_diam=" + std::to_string(min_diameter) +
               " max_vertices=" + std::to_string(max_vertices);
    }
};

namespace detail {

struct GrowState {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> blocks_of;  // per vertex
    std::vector<int> cut_count;               // per block
};

/// Adds K_{l,m} (K_{1,1} when l or m is 1); `attach`, if given, joins part `side`.
inline bool add_block(GrowState& s, Rng& rng, int l, int m, int attach, int max_vertices) {
    if (l == 1 || m == 1) l = m = 1;
    const int block = static_cast<int>(s.cut_count.size());
    int side = attach >= 0 ? rng.uniform(0, 1) : 0;
    int fresh = l + m - (attach >= 0 ? 1 : 0);
    if (s.n + fresh > max_vertices) return false;
    std::vector<int> part[2];
    for (int p = 0; p < 2; ++p) {
        int size = p == 0 ? l : m;
        for (int i = 0; i < size; ++i) {
            if (attach >= 0 && p == side && i == 0) {
                part[p].push_back(attach);
            } else {
                part[p].push_back(s.n++);
                s.blocks_of.emplace_back();
            }
        }
    }
    s.cut_count.push_back(0);
    if (attach >= 0) {
        if (s.blocks_of[attach].size() == 1) ++s.cut_count[s.blocks_of[attach][0]];
        if (!s.blocks_of[attach].empty()) ++s.cut_count[block];
    }
    for (int a : part[0])
        for (int b : part[1]) s.edges.emplace_back(a, b);
    for (int p = 0; p < 2; ++p)
        for (int v : part[p]) s.blocks_of[v].push_back(block);
    return true;
}

inline bool grow(GrowState& s, Rng& rng, const GenParams& p, int blocks) {
    if (!add_block(s, rng, rng.uniform(p.min_part, p.max_part), rng.uniform(p.min_part, p.max_part), -1,
                   p.max_vertices))
        return false;
    for (int b = 1; b < blocks; ++b) {
        std::vector<int> eligible;
        for (int v = 0; v < s.n; ++v)
            if (s.blocks_of[v].size() >= 2 || s.cut_count[s.blocks_of[v][0]] <= 1) eligible.push_back(v);
        if (eligible.empty()) return false;
        int attach = eligible[rng.uniform(0, static_cast<int>(eligible.size()) - 1)];
        int l = rng.uniform(p.min_part, p.max_part), m = rng.uniform(p.min_part, p.max_part);
        if (!add_block(s, rng, l, m, attach, p.max_vertices)) return false;
    }
    return true;
}

inline Graph shuffle_labels(const Graph& g, Rng& rng) {
    std::vector<vertex_t> perm(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) perm[i] = i;
    for (int i = g.order() - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform(0, i)]);
    return relabel(g, perm);
}

inline bool diameter_ok(const Graph& g, const GenParams& p) {
    int diam = ecc_profile(all_pairs_distances(g)).diameter;
    if (diam < p.min_diameter) return false;
    if (p.parity == Parity::Odd && diam % 2 == 0) return false;
    if (p.parity == Parity::Even && diam % 2 == 1) return false;
    return true;
}

}  // namespace detail

/**
 * Random class-B graph: a chain of attachments of complete bipartite blocks,
 * each attached at an existing vertex whose blocks still allow another
 * cut-vertex. Rejection sampling enforces diameter and parity; throws
 * Infeasible when the attempt budget runs out.
 */
inline Graph random_class_b(const GenParams& p) {
    if (p.max_blocks < 2) throw Error(ErrorKind::Infeasible, "class B needs at least two blocks");
    p.validate();
    Rng rng(p.seed);
    for (int attempt = 0; attempt < p.max_attempts; ++attempt) {
        detail::GrowState s;
        int blocks = rng.uniform(std::max(2, p.min_blocks), p.max_blocks);
        if (!detail::grow(s, rng, p, blocks)) continue;
        Graph g = detail::shuffle_labels(Graph(s.n, s.edges), rng);
        if (!detail::diameter_ok(g, p)) continue;
        if (!classify(g).in_class_b()) throw Error(ErrorKind::Invalid, "generator produced a graph outside class B");
        return g;
    }
    throw Error(ErrorKind::Infeasible, "no graph satisfied the parameters in " + std::to_string(p.max_attempts) +
                                           " attempts (" + p.describe() + ")");
}

/// Random labelled tree on n vertices: vertex i attaches to a uniform earlier vertex, then labels are shuffled.
inline Graph random_tree(std::uint64_t seed, int n) {
    if (n < 1) throw Error(ErrorKind::Invalid, "tree needs at least one vertex");
    Rng rng(seed);
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(rng.uniform(0, i - 1), i);
    return detail::shuffle_labels(Graph(n, std::move(e)), rng);
}

}  // namespace eccspectra
