#pragma once

#include <algorithm>
#include <vector>

#include "eccspectra/graph.hpp"
#include "eccspectra/matrix.hpp"

namespace eccspectra {

/**
 * Eccentricity matrix: entry (i,j) is d(i,j) when d(i,j) equals
 * min(e(i), e(j)) and zero otherwise. Keeps the eccentricities it was built
 * from so block-structure checks can refer to them.
 */
class EccMatrix {
public:
    EccMatrix() = default;
    EccMatrix(IntMatrix entries, std::vector<int> ecc) : m_(std::move(entries)), ecc_(std::move(ecc)) {}

    int order() const noexcept { return m_.order(); }
    long long operator()(vertex_t i, vertex_t j) const { return m_(i, j); }
    const IntMatrix& matrix() const noexcept { return m_; }
    const std::vector<int>& ecc() const noexcept { return ecc_; }

    /// Copy with one entry (and its mirror) replaced; for mutation tests.
    EccMatrix with_entry(vertex_t i, vertex_t j, long long value) const {
        EccMatrix c = *this;
        c.m_(i, j) = value;
        c.m_(j, i) = value;
        return c;
    }

private:
    IntMatrix m_;
    std::vector<int> ecc_;
};

inline EccMatrix eccentricity_matrix(const DistanceMatrix& d, const EccProfile& p) {
    const int n = d.order();
    IntMatrix m(n);
    for (vertex_t i = 0; i < n; ++i)
        for (vertex_t j = 0; j < n; ++j)
            if (i != j && d(i, j) == std::min(p.ecc[i], p.ecc[j])) m(i, j) = d(i, j);
    return {std::move(m), p.ecc};
}

inline EccMatrix eccentricity_matrix(const Graph& g) {
    auto d = all_pairs_distances(g);
    return eccentricity_matrix(d, ecc_profile(d));
}

/// Graph on the matrix's index set with an edge wherever the entry is nonzero.
inline Graph support_graph(const IntMatrix& m) {
    std::vector<Edge> e;
    for (int i = 0; i < m.order(); ++i)
        for (int j = i + 1; j < m.order(); ++j)
            if (m(i, j) != 0 || m(j, i) != 0) e.emplace_back(i, j);
    return Graph(m.order(), std::move(e));
}

inline Graph support_graph(const EccMatrix& e) { return support_graph(e.matrix()); }

/// A nonnegative symmetric matrix is irreducible iff its support graph is connected.
inline bool is_irreducible(const IntMatrix& m) {
    if (m.order() <= 1) return true;
    return is_connected(support_graph(m));
}

inline bool is_irreducible(const EccMatrix& e) { return is_irreducible(e.matrix()); }

}  // namespace eccspectra
