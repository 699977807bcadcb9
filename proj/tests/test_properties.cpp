#include <gtest/gtest.h>

#include "property_checks.hpp"

using namespace eccspectra;

TEST(Interlacing, HundredDraws) {
    auto t = props::interlacing(2024, 100);
    EXPECT_EQ(t.draws, 100);
    for (const auto& f : t.failures) ADD_FAILURE() << f;
}

TEST(Interlacing, DiagonalExample) {
    auto a = matrix_from_rows<long long>({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
    auto full = inertia_exact(a), sub = inertia_exact(a.principal({0, 1}));
    EXPECT_EQ(full, (Inertia{2, 1, 0}));
    EXPECT_EQ(sub, (Inertia{2, 0, 0}));
}

TEST(Schur, FiftyRationalMatrices) {
    auto t = props::schur_additivity(77, 50);
    EXPECT_EQ(t.draws, 50);
    for (const auto& f : t.failures) ADD_FAILURE() << f;
}

TEST(Schur, HandExample) {
    // M = [2 1; 1 -1]: A = 2, M/A = -1 - 1/2 = -3/2
    props::RatMatrix m{{BigRational(2), BigRational(1)}, {BigRational(1), BigRational(-1)}};
    EXPECT_EQ(props::rational_inertia(m), (Inertia{1, 1, 0}));
    props::RatMatrix s{{BigRational(-3, 2)}};
    EXPECT_EQ(props::rational_inertia(s), (Inertia{0, 1, 0}));
    auto inv = props::inverse({{BigRational(2), BigRational(1)}, {BigRational(1), BigRational(1)}});
    ASSERT_EQ(inv.size(), 2u);
    EXPECT_EQ(inv[0][1], BigRational(-1));
    EXPECT_TRUE(props::inverse({{BigRational(1), BigRational(2)}, {BigRational(2), BigRational(4)}}).empty());
}

TEST(Schur, ClearingDenominatorsKeepsSign) {
    props::RatMatrix m{{BigRational(1, 3), BigRational(1, 2)}, {BigRational(1, 2), BigRational(-5, 4)}};
    auto z = props::clear_denominators(m);
    EXPECT_EQ(z(0, 0), 4);
    EXPECT_EQ(z(0, 1), 6);
    EXPECT_EQ(z(1, 1), -15);
}
