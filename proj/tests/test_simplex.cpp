#include "hrum/simplex.hpp"

#include <gtest/gtest.h>

#include <random>

using hrum::find_nonnegative_solution;
using hrum::LinearSystem;
using hrum::Rational;

namespace {

bool satisfies(const LinearSystem& s, const std::vector<Rational>& x) {
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < x.size(); ++j) lhs += s.rows[i][j] * x[j];
        if (lhs != s.rhs[i]) return false;
    }
    for (const auto& v : x) {
        if (v < 0) return false;
    }
    return true;
}

}  // namespace

TEST(Simplex, FeasibleSystem) {
    LinearSystem s{{{1, 1, 1}, {1, -1, 0}}, {1, 0}};
    const auto x = find_nonnegative_solution(s);
    ASSERT_TRUE(x.has_value());
    EXPECT_TRUE(satisfies(s, *x));
}

TEST(Simplex, InfeasibleSystem) {
    LinearSystem s{{{1, 1}, {1, 1}}, {1, 2}};
    EXPECT_FALSE(find_nonnegative_solution(s).has_value());
    LinearSystem negative{{{1, 1}}, {-1}};
    EXPECT_FALSE(find_nonnegative_solution(negative).has_value());
}

TEST(Simplex, RedundantAndNegativeRows) {
    LinearSystem s{{{1, 2, 0}, {2, 4, 0}, {0, -1, -1}}, {4, 8, Rational(-3, 2)}};
    const auto x = find_nonnegative_solution(s);
    ASSERT_TRUE(x.has_value());
    EXPECT_TRUE(satisfies(s, *x));
}

TEST(Simplex, BoundaryZeroSolution) {
    LinearSystem s{{{1, -1}, {1, 1}}, {0, 0}};
    const auto x = find_nonnegative_solution(s);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0], 0);
    EXPECT_EQ((*x)[1], 0);
}

TEST(Simplex, ShapeErrors) {
    EXPECT_THROW(find_nonnegative_solution(LinearSystem{}), std::invalid_argument);
    EXPECT_THROW(find_nonnegative_solution(LinearSystem{{{1, 2}, {1}}, {1, 1}}), std::invalid_argument);
    EXPECT_THROW(find_nonnegative_solution(LinearSystem{{{1, 2}}, {1, 1}}), std::invalid_argument);
}

TEST(Simplex, RandomPlantedSolutionsAreFound) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> val(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + trial % 5;
        const std::size_t n = 1 + (trial / 5) % 7;
        std::vector<Rational> planted(n);
        for (auto& v : planted) {
            v = Rational(val(rng), 1 + val(rng));
            v.canonicalize();
        }
        LinearSystem s;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Rational> row(n);
            Rational b = 0;
            for (std::size_t j = 0; j < n; ++j) {
                row[j] = coef(rng);
                b += row[j] * planted[j];
            }
            s.rows.push_back(row);
            s.rhs.push_back(b);
        }
        const auto x = find_nonnegative_solution(s);
        ASSERT_TRUE(x.has_value()) << "trial " << trial;
        EXPECT_TRUE(satisfies(s, *x)) << "trial " << trial;
    }
}
