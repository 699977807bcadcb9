#include <gtest/gtest.h>

#include <cmath>

#include "eccspectra/ecc_matrix.hpp"
#include "eccspectra/oracle.hpp"
#include "eccspectra/spectral.hpp"
#include "fixtures.hpp"

using namespace eccspectra;

namespace {

IntPolynomial descending(std::vector<long long> c) {
    IntPolynomial p;
    for (auto it = c.rbegin(); it != c.rend(); ++it) p.coeffs.emplace_back(*it);
    return p;
}

void expect_close(const std::vector<double>& got, const std::vector<double>& want, double tol) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "index " << i;
}

}  // namespace

TEST(CharPoly, TwoByTwo) {
    auto p = char_poly(matrix_from_rows<long long>({{0, 1}, {1, 0}}));
    EXPECT_EQ(p, descending({1, 0, -1}));
    EXPECT_EQ(format_polynomial(p), "1 0 -1");
}

TEST(CharPoly, GraphH) {
    auto p = char_poly(fixtures::matrix("h.matrix"));
    EXPECT_EQ(p, descending({1, 0, -25, -16, 84, 64}));
}

TEST(CharPoly, Example16) {
    auto e = eccentricity_matrix(fixtures::graph("example16.edges"));
    auto p = char_poly(e.matrix());
    std::vector<long long> want{1, 0, -1030, 0, 115260};
    want.resize(17, 0);
    EXPECT_EQ(p, descending(want));
}

TEST(CharPoly, NonB) {
    auto p = char_poly(fixtures::matrix("nonb9.matrix"));
    EXPECT_EQ(p, descending({1, 0, -125, -72, 2869, 2952, -9225, 0, 0, 0}));
}

TEST(CharPoly, MatchesMinorSumsOnSmallGraphs) {
    auto h = fixtures::matrix("h.matrix");
    EXPECT_EQ(char_poly(h), oracle_char_poly(h));
    for (int n = 2; n <= 8; ++n) {
        auto m = eccentricity_matrix(fixtures::path(n)).matrix();
        EXPECT_EQ(char_poly(m), oracle_char_poly(m)) << "path " << n;
    }
}

TEST(CharPoly, NonSymmetricInput) {
    auto p = char_poly(matrix_from_rows<long long>({{1, 2}, {3, 4}}));
    EXPECT_EQ(p, descending({1, -5, -2}));
}

TEST(Inertia, GoldenExamples) {
    EXPECT_EQ(inertia_exact(fixtures::matrix("h.matrix")), (Inertia{2, 3, 0}));
    EXPECT_EQ(inertia_exact(fixtures::matrix("nonb9.matrix")), (Inertia{3, 3, 3}));
    auto e = eccentricity_matrix(fixtures::graph("example16.edges"));
    EXPECT_EQ(inertia_exact(e.matrix()), (Inertia{2, 2, 12}));
}

TEST(Inertia, RejectsNonRealRooted) {
    EXPECT_THROW(inertia_exact(descending({1, 0, 1})), Error);
    EXPECT_THROW(inertia_exact(IntPolynomial{}), Error);
    EXPECT_THROW(inertia_exact(matrix_from_rows<long long>({{0, 1}, {2, 0}})), Error);
}

TEST(Symmetry, Detection) {
    EXPECT_FALSE(is_spectrum_symmetric(char_poly(fixtures::matrix("h.matrix"))));
    EXPECT_FALSE(is_spectrum_symmetric(char_poly(fixtures::matrix("nonb9.matrix"))));
    auto e = eccentricity_matrix(fixtures::graph("example16.edges"));
    EXPECT_TRUE(is_spectrum_symmetric(char_poly(e.matrix())));
}

TEST(Rank, PathOnFive) {
    auto e = eccentricity_matrix(fixtures::path(5));
    EXPECT_EQ(rank_exact(char_poly(e.matrix()), 5), 4);
    EXPECT_EQ(bareiss_rank(e.matrix()), 4);
}

TEST(Rank, Example16) {
    auto e = eccentricity_matrix(fixtures::graph("example16.edges"));
    EXPECT_EQ(bareiss_rank(e.matrix()), 4);
    EXPECT_EQ(bareiss_rank(IntMatrix(3)), 0);
}

TEST(Eigen, GraphH) {
    auto s = eigenvalues_float(fixtures::matrix("h.matrix"));
    expect_close(s.values, {-4.1394, -2, -0.7849, 2, 4.9243}, 1e-3);
}

TEST(Eigen, NonB) {
    auto s = eigenvalues_float(fixtures::matrix("nonb9.matrix"));
    expect_close(s.values, {-9.4967, -4.3784, -2.9329, 0, 0, 0, 1.4150, 5.2920, 10.1010}, 1e-3);
    EXPECT_EQ(s.cluster[3], s.cluster[5]);
    EXPECT_NE(s.cluster[2], s.cluster[3]);
}

TEST(Eigen, VectorsSatisfyEquation) {
    auto a = to_real(eccentricity_matrix(fixtures::graph("example16.edges")).matrix());
    auto eig = jacobi_eigen(a);
    for (int k = 0; k < a.order(); ++k) {
        double worst = 0;
        for (int i = 0; i < a.order(); ++i) {
            double s = -eig.values[k] * eig.vectors(i, k);
            for (int j = 0; j < a.order(); ++j) s += a(i, j) * eig.vectors(j, k);
            worst = std::max(worst, std::abs(s));
        }
        EXPECT_LT(worst, 1e-7);
    }
}

TEST(Eigen, ConvergenceBudget) {
    auto a = to_real(eccentricity_matrix(fixtures::graph("example16.edges")).matrix());
    EXPECT_THROW(jacobi_eigen(a, 1e-10, 0), Error);
}

TEST(Eigen, FloatInertia) {
    EXPECT_EQ(float_inertia({-1.0, 1e-12, 2.0}, 1e-8), (Inertia{1, 1, 1}));
}
