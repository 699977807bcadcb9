#pragma once

#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eccspectra/error.hpp"

namespace eccspectra {

/// Dense square row-major matrix.
template <class T>
class SquareMatrix {
public:
    using value_type = T;

    SquareMatrix() = default;
    explicit SquareMatrix(int n, const T& fill = T{})
        : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

    int order() const noexcept { return n_; }

    const T& operator()(int i, int j) const { return a_[index(i, j)]; }
    T& operator()(int i, int j) { return a_[index(i, j)]; }

    std::span<const T> row(int i) const { return {a_.data() + index(i, 0), static_cast<std::size_t>(n_)}; }

    bool is_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    /// Principal submatrix on the given (ordered) index set.
    SquareMatrix principal(const std::vector<int>& idx) const {
        SquareMatrix s(static_cast<int>(idx.size()));
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                s(static_cast<int>(i), static_cast<int>(j)) = (*this)(idx[i], idx[j]);
        return s;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }
    int n_ = 0;
    std::vector<T> a_;
};

using IntMatrix = SquareMatrix<long long>;
using RealMatrix = SquareMatrix<double>;

template <class T>
SquareMatrix<T> matrix_from_rows(const std::vector<std::vector<T>>& rows) {
    SquareMatrix<T> m(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw Error(ErrorKind::Invalid, "matrix is not square");
        for (std::size_t j = 0; j < rows.size(); ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return m;
}

template <class T>
RealMatrix to_real(const SquareMatrix<T>& m) {
    RealMatrix r(m.order());
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j) r(i, j) = static_cast<double>(m(i, j));
    return r;
}

/// Matrix dump: one row per line, entries separated by single spaces.
template <class T>
std::string format_matrix(const SquareMatrix<T>& m) {
    std::ostringstream out;
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
    return out.str();
}

/// Reads a matrix dump; blank lines and '#' comments are skipped.
inline IntMatrix parse_matrix(std::string_view text) {
    std::vector<std::vector<long long>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#') continue;
        std::istringstream ls(line);
        std::vector<long long> row;
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size())
                throw SyntaxError(lineno, line.find(tok) + 1, "expected an integer, got '" + tok + "'");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != rows.size())
            throw Error(ErrorKind::Syntax, "matrix row " + std::to_string(i + 1) + " has " +
                                               std::to_string(rows[i].size()) + " entries, expected " +
                                               std::to_string(rows.size()));
    return matrix_from_rows(rows);
}

}  // namespace eccspectra
