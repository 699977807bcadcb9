#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eccspectra/error.hpp"
#include "eccspectra/matrix.hpp"

namespace eccspectra {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Integer polynomial with coefficients stored in ascending degree order.
struct IntPolynomial {
    std::vector<BigInt> coeffs;  // coeffs[k] multiplies x^k

    int degree() const {
        for (std::size_t k = coeffs.size(); k-- > 0;)
            if (coeffs[k] != 0) return static_cast<int>(k);
        return -1;
    }
    bool is_zero() const { return degree() < 0; }

    const BigInt& coeff(std::size_t k) const {
        static const BigInt zero = 0;
        return k < coeffs.size() ? coeffs[k] : zero;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
        for (std::size_t k = 0; k < n; ++k)
            if (a.coeff(k) != b.coeff(k)) return false;
        return true;
    }
};

/// Degree-descending coefficient list on one line, e.g. "1 0 -1" for x^2 - 1.
inline std::string format_polynomial(const IntPolynomial& p) {
    std::ostringstream out;
    int d = p.degree();
    if (d < 0) return "0";
    for (int k = d; k >= 0; --k) {
        out << p.coeffs[static_cast<std::size_t>(k)];
        if (k) out << ' ';
    }
    return out.str();
}

/**
 * Characteristic polynomial det(xI - A) by the Samuelson-Berkowitz
 * recurrence. Uses only ring operations, so every intermediate value is an
 * exact integer. The k-th step multiplies the polynomial of the leading k x k
 * block by a lower-triangular Toeplitz matrix whose first column is
 * (1, -a_kk, -R S, -R A S, ..., -R A^{k-1} S), with R, S the new row/column
 * and A the leading block. Zero entries are skipped, which pays off on
 * eccentricity matrices.
 */
template <class T>
IntPolynomial char_poly(const SquareMatrix<T>& a) {
    const int n = a.order();
    // nonzero column indices per row, ascending
    std::vector<std::vector<int>> nz(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a(i, j) != 0) nz[i].push_back(j);

    std::vector<BigInt> desc{BigInt(1)};  // descending coefficients
    if (n == 0) return {{BigInt(1)}};
    desc.push_back(-BigInt(a(0, 0)));

    std::vector<BigInt> v, w, toeplitz, next;
    for (int r = 1; r < n; ++r) {
        const auto ur = static_cast<std::size_t>(r);
        toeplitz.assign(ur + 2, BigInt(0));
        toeplitz[0] = 1;
        toeplitz[1] = -BigInt(a(r, r));
        v.assign(ur, BigInt(0));
        for (int i = 0; i < r; ++i) v[i] = BigInt(a(i, r));
        w.assign(ur, BigInt(0));
        for (std::size_t k = 0; k < ur; ++k) {
            BigInt s = 0;
            for (int j : nz[r]) {
                if (j >= r) break;
                s += BigInt(a(r, j)) * v[j];
            }
            toeplitz[k + 2] = -s;
            if (k + 1 < ur) {
                for (int i = 0; i < r; ++i) {
                    BigInt acc = 0;
                    for (int j : nz[i]) {
                        if (j >= r) break;
                        acc += BigInt(a(i, j)) * v[j];
                    }
                    w[i] = std::move(acc);
                }
                std::swap(v, w);
            }
        }
        next.assign(ur + 2, BigInt(0));
        for (std::size_t i = 0; i < ur + 2; ++i) {
            BigInt s = 0;
            for (std::size_t j = 0; j <= i && j < desc.size(); ++j)
                if (toeplitz[i - j] != 0 && desc[j] != 0) s += toeplitz[i - j] * desc[j];
            next[i] = std::move(s);
        }
        std::swap(desc, next);
    }
    IntPolynomial p;
    p.coeffs.assign(desc.rbegin(), desc.rend());
    return p;
}

struct Inertia {
    int plus = 0;
    int minus = 0;
    int zero = 0;

    int order() const { return plus + minus + zero; }
    int rank() const { return plus + minus; }

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

inline std::string to_string(const Inertia& in) {
    return "(" + std::to_string(in.plus) + "," + std::to_string(in.minus) + "," +
           std::to_string(in.zero) + ")";
}

namespace detail {

inline int sign_variations(const IntPolynomial& p, bool negate_odd) {
    int changes = 0, last = 0;
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
        int s = p.coeffs[k].sign();
        if (s == 0) continue;
        if (negate_odd && (k % 2 == 1)) s = -s;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace detail

/**
 * Inertia from a real-rooted characteristic polynomial. i0 is the
 * multiplicity of the root 0; Descartes' rule counts positive roots exactly
 * on real-rooted input, applied to p(x) for i+ and to p(-x) for i-. If the
 * counts fail to add up the input was not real-rooted and is rejected.
 */
inline Inertia inertia_exact(const IntPolynomial& p) {
    const int n = p.degree();
    if (n < 0) throw Error(ErrorKind::Invalid, "inertia of the zero polynomial is undefined");
    int zero = 0;
    while (p.coeffs[static_cast<std::size_t>(zero)] == 0) ++zero;
    Inertia in;
    in.zero = zero;
    in.plus = detail::sign_variations(p, false);
    in.minus = n - zero - in.plus;
    if (detail::sign_variations(p, true) != in.minus)
        throw Error(ErrorKind::Invalid, "polynomial is not real-rooted");
    return in;
}

template <class T>
Inertia inertia_exact(const SquareMatrix<T>& a) {
    if (!a.is_symmetric()) throw Error(ErrorKind::Invalid, "inertia requires a symmetric matrix");
    return inertia_exact(char_poly(a));
}

/// p(-x) == (-1)^n p(x): every coefficient of parity opposite to n vanishes.
inline bool is_spectrum_symmetric(const IntPolynomial& p) {
    const int n = p.degree();
    for (int k = 0; k <= n; ++k)
        if ((n - k) % 2 == 1 && p.coeffs[static_cast<std::size_t>(k)] != 0) return false;
    return true;
}

/// Rank of a symmetric matrix from its characteristic polynomial: n - i0.
inline int rank_exact(const IntPolynomial& p, int n) {
    int zero = 0;
    while (zero <= n && p.coeff(static_cast<std::size_t>(zero)) == 0) ++zero;
    return n - zero;
}

/// Rank by fraction-free (Bareiss) elimination; independent of the char-poly route.
template <class T>
int bareiss_rank(const SquareMatrix<T>& a) {
    const int n = a.order();
    std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = BigInt(a(i, j));
    BigInt prev = 1;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int i = rank; i < n; ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        for (int i = rank + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j)
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Floating-point eigenvalues (reporting and cross-checks only)
// ---------------------------------------------------------------------------

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    RealMatrix vectors;          // column k is the unit eigenvector for values[k]
    double residual = 0.0;       // off-diagonal Frobenius norm at exit
    int sweeps = 0;
};

struct Spectrum {
    std::vector<double> values;  // ascending
    std::vector<int> cluster;    // equal ids mark numerically repeated eigenvalues
    double residual = 0.0;
};

inline double frobenius_norm(const RealMatrix& a) {
    double s = 0;
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

/**
 * Cyclic Jacobi rotations. Stops when the off-diagonal Frobenius norm drops
 * below rel_tol * ||A||_F; throws with the residual if `max_sweeps` is spent.
 */
inline EigenDecomposition jacobi_eigen(RealMatrix a, double rel_tol = 1e-10, int max_sweeps = 100) {
    const int n = a.order();
    if (!a.is_symmetric()) throw Error(ErrorKind::Invalid, "Jacobi method requires a symmetric matrix");
    RealMatrix v(n);
    for (int i = 0; i < n; ++i) v(i, i) = 1.0;
    const double scale = frobenius_norm(a);
    auto off = [&] {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };
    EigenDecomposition out;
    double resid = off();
    int sweep = 0;
    while (resid > rel_tol * scale) {
        if (sweep == max_sweeps)
            throw Error(ErrorKind::Convergence,
                        "Jacobi eigensolver did not converge; residual " + std::to_string(resid));
        ++sweep;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (apq == 0.0) continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
        resid = off();
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) < a(y, y); });
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors = RealMatrix(n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    out.residual = resid;
    out.sweeps = sweep;
    return out;
}

template <class T>
Spectrum eigenvalues_float(const SquareMatrix<T>& m) {
    RealMatrix a = to_real(m);
    const double scale = frobenius_norm(a);
    auto eig = jacobi_eigen(std::move(a));
    Spectrum s;
    s.values = std::move(eig.values);
    s.residual = eig.residual;
    s.cluster.resize(s.values.size());
    const double tol = 1e-8 * std::max(scale, 1.0);
    int id = 0;
    for (std::size_t k = 0; k < s.values.size(); ++k) {
        if (k > 0 && s.values[k] - s.values[k - 1] > tol) ++id;
        s.cluster[k] = id;
    }
    return s;
}

/// Sign counts of floating eigenvalues; |lambda| <= zero_tol counts as zero.
inline Inertia float_inertia(const std::vector<double>& values, double zero_tol) {
    Inertia in;
    for (double x : values) {
        if (x > zero_tol) ++in.plus;
        else if (x < -zero_tol) ++in.minus;
        else ++in.zero;
    }
    return in;
}

}  // namespace eccspectra
