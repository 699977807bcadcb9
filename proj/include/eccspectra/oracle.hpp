#pragma once

#include <algorithm>
#include <bit>
#include <vector>

#include "eccspectra/error.hpp"
#include "eccspectra/graph.hpp"
#include "eccspectra/matrix.hpp"
#include "eccspectra/spectral.hpp"

namespace eccspectra {

/// Floyd-Warshall; independent of the BFS distances it is compared against.
inline std::vector<std::vector<int>> oracle_distances(const Graph& g) {
    const int n = g.order();
    const int inf = n + 1;
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (int& x : row)
            if (x == inf) x = -1;
    return d;
}

inline bool same_distances(const DistanceMatrix& d, const std::vector<std::vector<int>>& o) {
    for (int i = 0; i < d.order(); ++i)
        for (int j = 0; j < d.order(); ++j)
            if (d(i, j) != o[i][j]) return false;
    return true;
}

namespace detail {

inline BigInt cofactor_det(const std::vector<std::vector<BigInt>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    BigInt sum = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c] == 0) continue;
        std::vector<std::vector<BigInt>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<BigInt> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(a[i][j]);
            minor.push_back(std::move(row));
        }
        BigInt term = a[0][c] * cofactor_det(minor);
        sum += (c % 2 == 0) ? term : BigInt(-term);
    }
    return sum;
}

}  // namespace detail

/// Sum of all principal minors of order r, by subset enumeration and cofactor expansion (n <= 8).
inline BigInt oracle_minor_sums(const IntMatrix& m, int r) {
    const int n = m.order();
    if (n > 8) throw Error(ErrorKind::Invalid, "minor-sum oracle is limited to n <= 8");
    if (r < 0 || r > n) throw Error(ErrorKind::Invalid, "minor order out of range");
    BigInt total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != r) continue;
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        std::vector<std::vector<BigInt>> sub(idx.size(), std::vector<BigInt>(idx.size()));
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = m(idx[i], idx[j]);
        total += detail::cofactor_det(sub);
    }
    return total;
}

/// Characteristic polynomial from minor sums: coefficient of x^(n-r) is (-1)^r times the order-r sum.
inline IntPolynomial oracle_char_poly(const IntMatrix& m) {
    const int n = m.order();
    IntPolynomial p;
    p.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int r = 0; r <= n; ++r) {
        BigInt s = oracle_minor_sums(m, r);
        p.coeffs[static_cast<std::size_t>(n - r)] = (r % 2 == 0) ? s : BigInt(-s);
    }
    return p;
}

}  // namespace eccspectra
