#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "phaseless/linalg.hpp"

namespace phaseless {
namespace {

using testing::q;
using testing::qs;

TEST(ExactRank, SpecExamples) {
    EXPECT_EQ(exact_rank(RationalMatrix::identity(2)), 2u);
    EXPECT_EQ(exact_rank(RationalMatrix(3, 4)), 0u);
    const RationalMatrix m = RationalMatrix::from_rows({qs({"1", "0"}), qs({"1/2", "1/2"}), qs({"0", "1"})});
    EXPECT_EQ(exact_rank(m), 2u);
}

TEST(ExactRank, DetectsDependenciesWithFractions) {
    const RationalMatrix m =
        RationalMatrix::from_rows({qs({"1/3", "2/7", "5"}), qs({"2/3", "4/7", "10"}), qs({"0", "1/11", "-1"})});
    EXPECT_EQ(exact_rank(m), 2u);
}

TEST(NullSpace, SpecExamples) {
    EXPECT_TRUE(null_space(RationalMatrix::identity(2)).empty());
    const auto basis = null_space(RationalMatrix::from_rows({qs({"1", "1"})}));
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0], qs({"1", "-1"}));
}

TEST(NullSpace, FirstNonzeroEntryIsOne) {
    const RationalMatrix m = RationalMatrix::from_rows({qs({"0", "2", "4", "6"})});
    for (const RationalVector& v : null_space(m)) {
        const auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
        ASSERT_NE(first, v.end());
        EXPECT_EQ(*first, 1);
    }
}

TEST(LinearAlgebra, RankNullityOnRandomMatrices) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        RationalMatrix m = testing::random_matrix(rng, dim(rng), dim(rng), 2);
        // Scale some rows by fractions so the elimination sees denominators.
        for (std::size_t c = 0; c < m.cols(); ++c) {
            m(0, c) /= 3;
        }
        const auto basis = null_space(m);
        EXPECT_EQ(exact_rank(m) + basis.size(), m.cols());
        for (const RationalVector& v : basis) {
            for (const Rational& x : m.multiply(v)) {
                EXPECT_EQ(x, 0);
            }
        }
    }
}

TEST(Determinant, MatchesCofactorExpansion) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        RationalMatrix m = testing::random_matrix(rng, 3, 3, 3);
        m(1, 2) /= 5;
        const Rational cofactor = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                                  m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                                  m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        EXPECT_EQ(determinant(m), cofactor);
    }
    EXPECT_THROW(determinant(RationalMatrix(2, 3)), std::invalid_argument);
}

TEST(ReducedRowEchelon, PivotsAndIdentityColumns) {
    const RationalMatrix m = RationalMatrix::from_rows({qs({"0", "2", "4"}), qs({"1", "1", "1"})});
    const RowEchelon e = reduced_row_echelon(m);
    ASSERT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(e.reduced(0, 0), 1);
    EXPECT_EQ(e.reduced(1, 0), 0);
    EXPECT_EQ(e.reduced(0, 1), 0);
    EXPECT_EQ(e.reduced(1, 1), 1);
    EXPECT_EQ(e.reduced(0, 2), -1);
    EXPECT_EQ(e.reduced(1, 2), 2);
}

TEST(CanonicalSpan, EqualSpansGiveEqualBases) {
    const auto a = canonical_span({qs({"1", "1", "0"}), qs({"0", "1", "1"})}, 3);
    const auto b = canonical_span({qs({"1", "2", "1"}), qs({"2", "1", "-1"}), qs({"3", "3", "0"})}, 3);
    EXPECT_EQ(a, b);
    const auto c = canonical_span({qs({"1", "0", "0"})}, 3);
    EXPECT_NE(a, c);
}

TEST(RationalMatrix, ShapeOperations) {
    const RationalMatrix m = RationalMatrix::from_rows({qs({"1", "2", "3"}), qs({"4", "5", "6"})});
    EXPECT_EQ(m.transposed()(2, 1), 6);
    const std::vector<std::size_t> cols{2, 0};
    EXPECT_EQ(m.select_columns(cols)(1, 0), 6);
    EXPECT_EQ(RationalMatrix::stack(m, m).rows(), 4u);
    EXPECT_THROW(RationalMatrix::from_rows({qs({"1"}), qs({"1", "2"})}), std::invalid_argument);
    EXPECT_EQ(m.multiply(qs({"1", "1", "1"})), qs({"6", "15"}));
}

}  // namespace
}  // namespace phaseless
