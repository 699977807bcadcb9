#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eccspectra/check.hpp"
#include "eccspectra/error.hpp"
#include "eccspectra/graph.hpp"

namespace eccspectra {

/// The two partite sets of a complete bipartite block. `first` holds the
/// block's minimum-label vertex; both sides are sorted.
struct Bipartition {
    std::vector<vertex_t> first;
    std::vector<vertex_t> second;

    const std::vector<vertex_t>& part(int side) const { return side == 0 ? first : second; }

    /// 0 or 1 for a member vertex, -1 otherwise.
    int side_of(vertex_t v) const {
        if (std::binary_search(first.begin(), first.end(), v)) return 0;
        if (std::binary_search(second.begin(), second.end(), v)) return 1;
        return -1;
    }
};

enum class BlockKind { Isolated, Leaf, Bridge, Internal };

inline const char* to_string(BlockKind k) {
    switch (k) {
    case BlockKind::Isolated: return "isolated";
    case BlockKind::Leaf: return "leaf";
    case BlockKind::Bridge: return "bridge";
    case BlockKind::Internal: return "internal";
    }
    return "?";
}

struct Block {
    std::vector<vertex_t> vertices;   // ascending
    std::vector<std::size_t> edges;   // indices into Graph::edges(), ascending
    std::optional<Bipartition> parts; // present iff complete bipartite
    int cut_count = 0;
    BlockKind kind = BlockKind::Isolated;

    bool contains(vertex_t v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
    bool is_single_edge() const { return vertices.size() == 2 && edges.size() == 1; }
};

struct BlockDecomposition {
    std::vector<Block> blocks;                   // ordered by minimum vertex
    std::vector<vertex_t> cut_vertices;          // ascending
    std::vector<int> block_of_edge;              // edge index -> block index
    std::vector<std::vector<int>> blocks_of_vertex;

    bool is_cut(vertex_t v) const { return blocks_of_vertex[v].size() >= 2; }

    int block_of(const Graph& g, vertex_t u, vertex_t v) const {
        auto idx = g.edge_index(u, v);
        if (!idx) throw Error(ErrorKind::Invalid, "no edge between the given vertices");
        return block_of_edge[*idx];
    }
};

/// 2-colors the block and accepts it iff every cross pair is an edge.
inline std::optional<Bipartition> recognize_bipartite_block(const Graph& g, const Block& b) {
    if (b.vertices.size() < 2 || b.edges.empty()) return std::nullopt;
    std::vector<std::vector<vertex_t>> local_adj(b.vertices.size());
    auto local = [&](vertex_t v) {
        return static_cast<std::size_t>(
            std::lower_bound(b.vertices.begin(), b.vertices.end(), v) - b.vertices.begin());
    };
    for (auto e : b.edges) {
        auto [u, v] = g.edges()[e];
        local_adj[local(u)].push_back(v);
        local_adj[local(v)].push_back(u);
    }
    std::vector<int> color(b.vertices.size(), -1);
    std::vector<vertex_t> queue{b.vertices.front()};
    color[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        vertex_t u = queue[head];
        int cu = color[local(u)];
        for (vertex_t w : local_adj[local(u)]) {
            auto lw = local(w);
            if (color[lw] < 0) {
                color[lw] = 1 - cu;
                queue.push_back(w);
            } else if (color[lw] == cu) {
                return std::nullopt;
            }
        }
    }
    Bipartition parts;
    for (std::size_t i = 0; i < b.vertices.size(); ++i) {
        if (color[i] < 0) return std::nullopt;
        (color[i] == 0 ? parts.first : parts.second).push_back(b.vertices[i]);
    }
    if (parts.first.empty() || parts.second.empty()) return std::nullopt;
    if (b.edges.size() != parts.first.size() * parts.second.size()) return std::nullopt;
    return parts;
}

/**
 * Blocks and cut-vertices by the low-link depth-first method, run with an
 * explicit stack so deep graphs do not exhaust the call stack.
 */
inline BlockDecomposition decompose(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw Error(ErrorKind::Invalid, "empty graph");
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is disconnected");

    BlockDecomposition bd;
    bd.block_of_edge.assign(g.size(), -1);
    bd.blocks_of_vertex.assign(static_cast<std::size_t>(n), {});

    std::vector<Block> raw;
    if (n == 1) {
        Block b;
        b.vertices = {0};
        raw.push_back(std::move(b));
    } else {
        std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
        std::vector<std::size_t> edge_stack;
        struct Frame {
            vertex_t v;
            vertex_t parent;
            std::size_t next;  // position in neighbor list
        };
        std::vector<Frame> stack;
        int timer = 0;

        auto emit_block = [&](std::size_t closing_edge) {
            Block b;
            while (true) {
                std::size_t e = edge_stack.back();
                edge_stack.pop_back();
                b.edges.push_back(e);
                if (e == closing_edge) break;
            }
            for (auto e : b.edges) {
                b.vertices.push_back(g.edges()[e].first);
                b.vertices.push_back(g.edges()[e].second);
            }
            std::sort(b.vertices.begin(), b.vertices.end());
            b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
            std::sort(b.edges.begin(), b.edges.end());
            raw.push_back(std::move(b));
        };

        disc[0] = low[0] = timer++;
        stack.push_back({0, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                vertex_t w = nb[f.next++];
                if (w == f.parent) continue;
                if (disc[w] < 0) {
                    edge_stack.push_back(*g.edge_index(f.v, w));
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(*g.edge_index(f.v, w));
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                vertex_t w = f.v;
                vertex_t v = f.parent;
                stack.pop_back();
                if (v < 0) continue;
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) emit_block(*g.edge_index(v, w));
            }
        }
    }

    std::sort(raw.begin(), raw.end(),
              [](const Block& a, const Block& b) { return a.vertices.front() < b.vertices.front() ||
                                                          (a.vertices.front() == b.vertices.front() &&
                                                           a.vertices < b.vertices); });
    for (std::size_t i = 0; i < raw.size(); ++i) {
        for (auto e : raw[i].edges) bd.block_of_edge[e] = static_cast<int>(i);
        for (auto v : raw[i].vertices) bd.blocks_of_vertex[v].push_back(static_cast<int>(i));
    }
    for (vertex_t v = 0; v < n; ++v)
        if (bd.blocks_of_vertex[v].size() >= 2) bd.cut_vertices.push_back(v);

    for (auto& b : raw) {
        b.cut_count = static_cast<int>(std::count_if(b.vertices.begin(), b.vertices.end(),
                                                     [&](vertex_t v) { return bd.is_cut(v); }));
        b.kind = b.cut_count == 0   ? BlockKind::Isolated
                 : b.cut_count == 1 ? BlockKind::Leaf
                 : b.cut_count == 2 ? BlockKind::Bridge
                                    : BlockKind::Internal;
        b.parts = recognize_bipartite_block(g, b);
    }
    bd.blocks = std::move(raw);
    return bd;
}

struct GraphClass {
    enum class Kind { Tree, ClassB, BiBlockNotB, Other };

    Kind kind = Kind::Other;
    bool tree = false;               // every block is a single edge
    std::optional<int> witness_block;
    std::string witness;             // human-readable reason when not ClassB

    bool in_class_b() const { return kind == Kind::ClassB; }
};

inline const char* to_string(GraphClass::Kind k) {
    switch (k) {
    case GraphClass::Kind::Tree: return "tree";
    case GraphClass::Kind::ClassB: return "class-b";
    case GraphClass::Kind::BiBlockNotB: return "bi-block-not-b";
    case GraphClass::Kind::Other: return "other";
    }
    return "?";
}

inline GraphClass classify(const Graph& g, const BlockDecomposition& bd) {
    GraphClass c;
    c.tree = g.order() >= 2 && std::all_of(bd.blocks.begin(), bd.blocks.end(),
                                           [](const Block& b) { return b.is_single_edge(); });
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        if (!bd.blocks[i].parts) {
            c.kind = GraphClass::Kind::Other;
            c.witness_block = static_cast<int>(i);
            c.witness = "block " + format_labels(bd.blocks[i].vertices) + " is not complete bipartite";
            return c;
        }
    }
    if (bd.blocks.size() < 2) {
        c.kind = c.tree ? GraphClass::Kind::Tree : GraphClass::Kind::BiBlockNotB;
        if (!c.tree) {
            c.witness_block = 0;
            c.witness = "only one block";
        }
        return c;
    }
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        if (bd.blocks[i].cut_count > 2) {
            c.kind = GraphClass::Kind::BiBlockNotB;
            c.witness_block = static_cast<int>(i);
            c.witness = "block " + format_labels(bd.blocks[i].vertices) + " contains " +
                        std::to_string(bd.blocks[i].cut_count) + " cut-vertices";
            return c;
        }
    }
    c.kind = GraphClass::Kind::ClassB;
    return c;
}

inline GraphClass classify(const Graph& g) { return classify(g, decompose(g)); }

}  // namespace eccspectra
