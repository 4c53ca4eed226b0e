#include <gtest/gtest.h>

#include "selorb/curves/curve.hpp"

using namespace selorb;

namespace {
std::vector<Z> C(std::vector<long> v)
{
    std::vector<Z> out;
    for (long x : v)
        out.push_back(Z(x));
    return out;
}
} // namespace

TEST(Normalize, Examples)
{
    auto [c1, u1] = normalize_indivisible(C({16, 64}));
    EXPECT_EQ(c1, C({1, 1}));
    EXPECT_EQ(u1, 2);
    auto [c2, u2] = normalize_indivisible(C({4, 8}));
    EXPECT_EQ(c2, C({4, 8}));
    EXPECT_EQ(u2, 1);
    auto [c3, u3] = normalize_indivisible(C({0, 0, 0, 1}));
    EXPECT_EQ(c3, C({0, 0, 0, 1}));
    EXPECT_EQ(u3, 1);
    EXPECT_THROW(normalize_indivisible(C({0, 0})), validation_error);
}

TEST(Normalize, IdempotentAndScaling)
{
    for (long a = -20; a <= 20; ++a)
        for (long b = -20; b <= 20; ++b) {
            if (a == 0 && b == 0)
                continue;
            auto [c, u] = normalize_indivisible(C({a, b}));
            auto [c2, u2] = normalize_indivisible(c);
            EXPECT_EQ(c2, c);
            EXPECT_EQ(u2, 1);
            EXPECT_TRUE(is_indivisible(c));
        }
    /* c_m -> u^{2m} c_m multiplies each |c_k|^{N/k} by u^{2N} */
    for (int n = 1; n <= 3; ++n)
        for (long u = 1; u <= 3; ++u) {
            std::vector<Z> ca, cb;
            for (int k = 2; k <= 2 * n + 1; ++k) {
                ca.push_back(Z(k % 3 - 1 + k));
                cb.push_back(ca.back() * ipow(Z(u), 2 * k));
            }
            HyperCurve a{n, ca}, b{n, cb};
            Height ha = curve_height(a), hb = curve_height(b);
            long N = 2L * n * (2 * n + 1);
            EXPECT_EQ(hb.power_value(), ha.power_value() * ipow(ipow(Z(u), 2 * N), Height::pow_needed(n)));
        }
}

TEST(Height, Examples)
{
    HyperCurve a{1, C({2, 3})};
    EXPECT_EQ(curve_height(a).power_value(), 9);
    HyperCurve b{1, C({0, 1})};
    EXPECT_EQ(curve_height(b).power_value(), 1);
    HyperCurve c{2, C({1, 1, 1, 1})};
    EXPECT_FALSE(height_below(c, Z(1)));
    EXPECT_TRUE(height_below(c, Z(2)));
    /* exact comparator: |c_k|^N < X^k for every k */
    EXPECT_TRUE(height_below(a, Z(10)));
    EXPECT_FALSE(height_below(a, Z(9)));
    EXPECT_EQ(Height::pow_needed(1), 1);
    EXPECT_EQ(Height::pow_needed(2), 3);
}

TEST(Discriminant, Examples)
{
    EXPECT_EQ(curve_discriminant(HyperCurve{1, C({0, 1})}), -432);
    EXPECT_EQ(curve_discriminant(HyperCurve{1, C({-1, 0})}), 64);
    EXPECT_EQ(curve_discriminant(HyperCurve{1, C({0, 0})}), 0);
}

TEST(Enumerate, SmallBounds)
{
    EXPECT_TRUE(enumerate_curves(1, Z(1)).empty());
    auto two = enumerate_curves(1, Z(2));
    EXPECT_EQ(two.size(), 8u);
}

TEST(Enumerate, OrderedAndFiltered)
{
    for (int n : {1, 2}) {
        auto v = enumerate_curves(n, Z(n == 1 ? 3000 : 40));
        for (size_t i = 0; i < v.size(); ++i) {
            EXPECT_TRUE(is_indivisible(v[i].c));
            EXPECT_NE(curve_discriminant(v[i]), 0);
            EXPECT_TRUE(height_below(v[i], Z(n == 1 ? 3000 : 40)));
            if (i)
                EXPECT_TRUE(v[i - 1] < v[i]);
        }
    }
}

TEST(Enumerate, BoxCountOracle)
{
    /* brute force over the coefficient box with direct predicates */
    Z X = 500;
    long count = 0;
    for (long a = -100; a <= 100; ++a)
        for (long b = -100; b <= 100; ++b) {
            HyperCurve c{1, C({a, b})};
            if ((a != 0 || b != 0) && ipow(abs(Z(a)), 6) < ipow(X, 2) && ipow(abs(Z(b)), 6) < ipow(X, 3) &&
                normalize_indivisible(c.c).second == 1 && curve_discriminant(c) != 0)
                ++count;
        }
    EXPECT_EQ(static_cast<long>(enumerate_curves(1, X).size()), count);
    EXPECT_EQ(enumerate_curves(1, X, 3).size(), enumerate_curves(1, X, 1).size());
}

TEST(Mod3Filter, Examples)
{
    EXPECT_TRUE(mod3_chabauty_filter(HyperCurve{1, C({2, 2})}));
    EXPECT_FALSE(mod3_chabauty_filter(HyperCurve{1, C({0, 1})}));
    for (auto &c : enumerate_curves(2, Z(30)))
        if (mod3_chabauty_filter(c))
            for (long x = 0; x < 3; ++x)
                EXPECT_EQ(mod(c.f().eval(Z(x)), 3), 2);
}

TEST(Enumerate, GoodReductionAtSeven)
{
    auto v = enumerate_curves(1, Z(200000));
    ASSERT_GE(v.size(), 100000u);
    long good = 0;
    for (auto &c : v)
        good += curve_discriminant(c) % 7 != 0;
    double rate = static_cast<double>(good) / v.size();
    EXPECT_NEAR(rate, 6.0 / 7.0, 0.02);
}
