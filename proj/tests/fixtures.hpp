#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "eccspectra/graph.hpp"
#include "eccspectra/matrix.hpp"

namespace fixtures {

inline std::string read_file(const std::string& name) {
    std::ifstream in(std::string(ECCSPECTRA_DATA) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline eccspectra::Graph graph(const std::string& name) { return eccspectra::parse_graph(read_file(name)); }
inline eccspectra::IntMatrix matrix(const std::string& name) { return eccspectra::parse_matrix(read_file(name)); }

inline eccspectra::Graph path(int n) {
    std::vector<eccspectra::Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return eccspectra::Graph(n, e);
}

/// Center 1 with legs 1-2-3, 1-4-5, 1-6-7.
inline eccspectra::Graph spider3() { return eccspectra::Graph::from_labels(7, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}}); }

/**
 * K_{3,2} with parts {1,2,3} and {4,5}; vertices 4 and 5 each carry four
 * pendant leaves (6..9 on 4, 10..13 on 5). Diameter 4, center {1,2,3}.
 */
inline eccspectra::Graph even_noncut_witness() {
    std::vector<std::pair<int, int>> e;
    for (int a : {1, 2, 3})
        for (int b : {4, 5}) e.emplace_back(a, b);
    for (int l = 6; l <= 9; ++l) e.emplace_back(4, l);
    for (int l = 10; l <= 13; ++l) e.emplace_back(5, l);
    return eccspectra::Graph::from_labels(13, e);
}

}  // namespace fixtures
