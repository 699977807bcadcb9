#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "eccspectra/error.hpp"

namespace eccspectra {

/// Vertex index, 0-based. The external label of vertex v is v + 1.
using vertex_t = int;

using Edge = std::pair<vertex_t, vertex_t>;

inline int label_of(vertex_t v) { return v + 1; }

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Edges are stored once as (u, v) with u < v, sorted lexicographically, so an
 * edge has a stable index usable as a key. Neighbor lists are sorted
 * ascending. The graph is immutable after construction; it may be
 * disconnected (support graphs of eccentricity matrices often are).
 */
class Graph {
public:
    Graph() = default;

    /// Builds from 0-based edges. Throws on loops, duplicates or out-of-range ends.
    Graph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 0) throw Error(ErrorKind::Invalid, "negative vertex count");
        for (auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw Error(ErrorKind::LabelRange,
                            "edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                ") has a label outside 1.." + std::to_string(n));
            if (u == v) throw Error(ErrorKind::Loop, "loop at vertex " + std::to_string(u + 1));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        auto dup = std::adjacent_find(edges.begin(), edges.end());
        if (dup != edges.end())
            throw Error(ErrorKind::Duplicate, "duplicate edge (" + std::to_string(dup->first + 1) +
                                                  "," + std::to_string(dup->second + 1) + ")");
        edges_ = std::move(edges);
        adj_.assign(static_cast<std::size_t>(n), {});
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    /// Builds from 1-based labels, as they appear in edge-list files.
    static Graph from_labels(int n, const std::vector<std::pair<int, int>>& labeled) {
        std::vector<Edge> e;
        e.reserve(labeled.size());
        for (auto [a, b] : labeled) e.emplace_back(a - 1, b - 1);
        return Graph(n, std::move(e));
    }

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    std::span<const vertex_t> neighbors(vertex_t v) const { return adj_[v]; }
    int degree(vertex_t v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_edge(vertex_t u, vertex_t v) const {
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    /// Index of edge {u,v} in edges(), or nullopt.
    std::optional<std::size_t> edge_index(vertex_t u, vertex_t v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<vertex_t>> adj_;
};

/// BFS distances from src; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, vertex_t src) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<vertex_t> queue;
    queue.reserve(dist.size());
    dist[src] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        vertex_t u = queue[head];
        for (vertex_t w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

/// Component id per vertex, numbered in order of smallest member.
inline std::vector<int> component_ids(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    std::vector<vertex_t> stack;
    for (vertex_t s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            vertex_t u = stack.back();
            stack.pop_back();
            for (vertex_t w : g.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

/// Subgraph induced by `vertices` (host indices). Vertex i of the result is vertices[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<vertex_t>& vertices) {
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges())
        if (local[u] >= 0 && local[v] >= 0) e.emplace_back(local[u], local[v]);
    return Graph(static_cast<int>(vertices.size()), std::move(e));
}

/// Graph with vertex v renamed to perm[v].
inline Graph relabel(const Graph& g, const std::vector<vertex_t>& perm) {
    std::vector<Edge> e;
    e.reserve(g.size());
    for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), std::move(e));
}

/// Graph with vertex v removed; remaining vertices keep their relative order.
inline Graph delete_vertex(const Graph& g, vertex_t v) {
    std::vector<Edge> e;
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        e.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return Graph(g.order() - 1, std::move(e));
}

// ---------------------------------------------------------------------------
// Edge-list text format
//
//   # comment
//   n m
//   u v        (m lines, 1 <= u < v <= n)
// ---------------------------------------------------------------------------

namespace detail {

struct LineCursor {
    std::string_view line;
    std::size_t lineno;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
            ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= line.size();
    }
    long long read_int(const char* what) {
        skip_ws();
        if (pos >= line.size())
            throw SyntaxError(lineno, pos + 1, std::string("expected ") + what);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
        if (ec != std::errc() ) throw SyntaxError(lineno, pos + 1, std::string("expected ") + what);
        std::size_t end = static_cast<std::size_t>(ptr - line.data());
        if (end < line.size() && !(line[end] == ' ' || line[end] == '\t' || line[end] == '\r'))
            throw SyntaxError(lineno, end + 1, std::string("unexpected character in ") + what);
        pos = end;
        return value;
    }
};

inline bool is_blank_or_comment(std::string_view line) {
    auto p = line.find_first_not_of(" \t\r");
    return p == std::string_view::npos || line[p] == '#';
}

}  // namespace detail

/// Parses the edge-list format without requiring connectivity.
inline Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t lineno = 0;
    for (std::size_t start = 0; start <= text.size();) {
        std::size_t nl = text.find('\n', start);
        std::string_view line =
            text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        ++lineno;
        if (!detail::is_blank_or_comment(line)) lines.emplace_back(lineno, line);
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    if (lines.empty()) throw SyntaxError(1, 1, "empty input: expected header \"n m\"");

    detail::LineCursor header{lines[0].second, lines[0].first};
    long long n = header.read_int("vertex count");
    long long m = header.read_int("edge count");
    if (!header.at_end()) throw SyntaxError(header.lineno, header.pos + 1, "trailing tokens in header");
    if (n <= 0) throw SyntaxError(header.lineno, 1, "vertex count must be positive");
    if (m < 0) throw SyntaxError(header.lineno, 1, "edge count must be nonnegative");
    if (n > std::numeric_limits<int>::max() / 2)
        throw SyntaxError(header.lineno, 1, "vertex count too large");

    if (static_cast<long long>(lines.size()) - 1 != m) {
        if (static_cast<long long>(lines.size()) - 1 < m)
            throw SyntaxError(lineno, 1,
                              "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(lines.size() - 1));
        auto [extra_no, extra] = lines[static_cast<std::size_t>(m) + 1];
        (void)extra;
        throw SyntaxError(extra_no, 1, "more edge lines than the header's m=" + std::to_string(m));
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::vector<std::size_t> origin;  // line number per edge, for error messages
    for (std::size_t i = 1; i < lines.size(); ++i) {
        detail::LineCursor c{lines[i].second, lines[i].first};
        long long u = c.read_int("vertex label");
        long long v = c.read_int("vertex label");
        if (!c.at_end()) throw SyntaxError(c.lineno, c.pos + 1, "trailing tokens after edge");
        auto where = "line " + std::to_string(c.lineno) + ": ";
        if (u < 1 || u > n || v < 1 || v > n)
            throw Error(ErrorKind::LabelRange, where + "vertex label outside 1.." + std::to_string(n));
        if (u == v) throw Error(ErrorKind::Loop, where + "loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<vertex_t>(std::min(u, v) - 1),
                           static_cast<vertex_t>(std::max(u, v) - 1));
        origin.push_back(c.lineno);
    }
    {
        std::vector<std::size_t> order(edges.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
        for (std::size_t i = 1; i < order.size(); ++i)
            if (edges[order[i]] == edges[order[i - 1]])
                throw Error(ErrorKind::Duplicate,
                            "line " + std::to_string(origin[order[i]]) + ": duplicate edge (" +
                                std::to_string(edges[order[i]].first + 1) + "," +
                                std::to_string(edges[order[i]].second + 1) + ")");
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

/// Parses and validates an input graph; disconnected graphs are rejected.
inline Graph parse_graph(std::string_view text) {
    Graph g = parse_edge_list(text);
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "input graph is disconnected");
    return g;
}

/// Serializes to the edge-list format. Each comment line is prefixed with "# ".
inline std::string format_edge_list(const Graph& g, const std::vector<std::string>& comments = {}) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << '\n';
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Distances and eccentricities
// ---------------------------------------------------------------------------

/// Dense n x n matrix of shortest-path lengths.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n)
        : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

    int order() const noexcept { return n_; }
    int operator()(vertex_t u, vertex_t v) const { return d_[index(u, v)]; }
    int& at(vertex_t u, vertex_t v) { return d_[index(u, v)]; }
    std::span<const int> row(vertex_t u) const {
        return {d_.data() + index(u, 0), static_cast<std::size_t>(n_)};
    }

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::size_t index(vertex_t u, vertex_t v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }
    int n_ = 0;
    std::vector<int> d_;
};

/**
 * All-pairs shortest paths by one BFS per source. Sources are split into
 * contiguous ranges over `threads` workers; each worker writes only its own
 * rows, so the result does not depend on scheduling.
 */
inline DistanceMatrix all_pairs_distances(const Graph& g, unsigned threads = 1) {
    const int n = g.order();
    DistanceMatrix d(n);
    bool disconnected = false;
    auto work = [&](int lo, int hi, bool& bad) {
        for (vertex_t s = lo; s < hi; ++s) {
            auto row = bfs_distances(g, s);
            for (vertex_t t = 0; t < n; ++t) {
                if (row[t] < 0) bad = true;
                d.at(s, t) = row[t];
            }
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max(n, 1))));
    if (threads == 1) {
        work(0, n, disconnected);
    } else {
        std::vector<char> flags(threads, 0);
        std::vector<std::jthread> pool;
        int chunk = (n + static_cast<int>(threads) - 1) / static_cast<int>(threads);
        for (unsigned t = 0; t < threads; ++t) {
            int lo = static_cast<int>(t) * chunk, hi = std::min(n, lo + chunk);
            pool.emplace_back([&, lo, hi, t] {
                bool bad = false;
                work(lo, hi, bad);
                flags[t] = bad;
            });
        }
        pool.clear();
        disconnected = std::any_of(flags.begin(), flags.end(), [](char c) { return c != 0; });
    }
    if (disconnected) throw Error(ErrorKind::Disconnected, "graph is disconnected");
    return d;
}

struct EccProfile {
    std::vector<int> ecc;
    int radius = 0;
    int diameter = 0;
    std::vector<vertex_t> center;  // ascending

    bool is_central(vertex_t v) const { return ecc[v] == radius; }
};

inline EccProfile ecc_profile(const DistanceMatrix& d) {
    const int n = d.order();
    if (n == 0) throw Error(ErrorKind::Invalid, "empty distance matrix");
    EccProfile p;
    p.ecc.resize(static_cast<std::size_t>(n));
    for (vertex_t v = 0; v < n; ++v) {
        auto row = d.row(v);
        p.ecc[v] = *std::max_element(row.begin(), row.end());
    }
    p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
    p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
    for (vertex_t v = 0; v < n; ++v)
        if (p.ecc[v] == p.radius) p.center.push_back(v);
    return p;
}

}  // namespace eccspectra
