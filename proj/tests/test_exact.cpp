#include <gtest/gtest.h>

#include <random>
#include <set>

#include "selorb/exact/hnf.hpp"
#include "selorb/exact/integer.hpp"
#include "selorb/exact/matrix.hpp"
#include "selorb/exact/poly.hpp"
#include "selorb/exact/resultant.hpp"
#include "selorb/exact/sturm.hpp"

using namespace selorb;

namespace {

PolyZ P(std::vector<long> c)
{
    std::vector<Z> v;
    for (long x : c)
        v.push_back(Z(x));
    return PolyZ(v);
}

/* Sylvester matrix determinant, the textbook definition */
Q sylvester_resultant(const PolyQ &a, const PolyQ &b)
{
    int m = a.deg(), n = b.deg();
    MatQ S(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            S(i, i + j) = a[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            S(n + i, i + j) = b[n - j];
    return det_cofactor(S);
}

PolyZ random_poly(std::mt19937_64 &rng, int deg, int bound, bool monic)
{
    std::vector<Z> c(deg + 1);
    for (auto &x : c)
        x = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    if (monic)
        c[deg] = 1;
    else if (c[deg] == 0)
        c[deg] = 1;
    return PolyZ(c);
}

} // namespace

TEST(Integer, PowersAndRoots)
{
    EXPECT_EQ(ipow(3, 5), 243);
    EXPECT_EQ(iroot(Z(1000), 3), 10);
    EXPECT_EQ(iroot(Z(999), 3), 9);
    EXPECT_EQ(qpow(Q(2, 3), -2), Q(9, 4));
}

TEST(Integer, Valuations)
{
    EXPECT_EQ(valuation(Z(-432), Z(2)), 4);
    EXPECT_EQ(valuation(Z(-432), Z(3)), 3);
    EXPECT_EQ(valuation(Q(5, 27), Z(3)), -3);
    EXPECT_EQ(valuation(Z(0), Z(3)), VAL_INF);
}

TEST(Integer, SquareRootsModPrimePowers)
{
    for (long p : {3L, 5L, 7L, 13L, 17L, 101L})
        for (long a = 1; a < p; ++a) {
            if (legendre(Z(a), Z(p)) != 1)
                continue;
            Z r = sqrt_mod_p(Z(a), Z(p));
            EXPECT_EQ(mod(r * r - a, Z(p)), 0);
            Z r6 = sqrt_mod_pk(Z(a), Z(p), 6);
            EXPECT_EQ(mod(r6 * r6 - a, ipow(p, 6)), 0);
        }
}

TEST(Integer, FactorAgreesWithProduct)
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        Z n = Z(static_cast<unsigned long>(rng() % 1000000007ULL)) * Z(static_cast<unsigned long>(rng() % 100000ULL + 2));
        Z prod = 1;
        for (auto &[q, e] : factor(n)) {
            EXPECT_TRUE(is_prime(q));
            prod *= ipow(q, e);
        }
        EXPECT_EQ(prod, abs(n));
    }
}

TEST(Poly, ArithmeticAndDivision)
{
    PolyZ f = P({1, 0, 0, 1}); // x^3 + 1
    PolyZ g = P({1, 1});       // x + 1
    auto [q, r] = divmod_monic(f, g);
    EXPECT_EQ(q, P({1, -1, 1}));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(f.derivative(), P({0, 0, 3}));
    EXPECT_EQ(shift(f, Z(1)), P({2, 3, 3, 1}));
    EXPECT_EQ(f.eval(Z(2)), 9);
}

TEST(Poly, GcdAndBezout)
{
    PolyQ a = to_Q(P({-1, 0, 1})), b = to_Q(P({1, 2, 1}));
    auto [g, s, t] = xgcd(a, b);
    EXPECT_EQ(g, to_Q(P({1, 1})));
    EXPECT_EQ(s * a + t * b, g);
}

TEST(Resultant, MatchesSylvesterDeterminant)
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        PolyQ a = to_Q(random_poly(rng, 1 + t % 5, 6, false));
        PolyQ b = to_Q(random_poly(rng, 1 + (t / 5) % 4, 6, false));
        EXPECT_EQ(resultant(a, b), sylvester_resultant(a, b)) << t;
    }
}

TEST(Resultant, DiscriminantExamples)
{
    EXPECT_EQ(discriminant(P({1, 0, 0, 1})), -27);
    EXPECT_EQ(discriminant(P({0, -1, 0, 1})), 4);
    EXPECT_EQ(discriminant(P({-1, 0, 1})), 4);
    EXPECT_EQ(discriminant(P({0, 0, 0, 1})), 0);
    /* disc of a monic f equals (-1)^{d(d-1)/2} Res(f, f') */
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        PolyZ f = random_poly(rng, 2 + t % 5, 5, true);
        int d = f.deg();
        Q s = sylvester_resultant(to_Q(f), to_Q(f.derivative()));
        if ((d * (d - 1) / 2) % 2)
            s = -s;
        EXPECT_EQ(Q(discriminant(f)), s);
    }
}

TEST(Sturm, CountsRootsOfProducts)
{
    /* products of distinct linear factors: the count is known by construction */
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        std::set<long> roots;
        int k = 1 + t % 6;
        while (static_cast<int>(roots.size()) < k)
            roots.insert(static_cast<long>(rng() % 41) - 20);
        PolyZ f(Z(1));
        for (long r : roots)
            f = f * P({-r, 1});
        PolyZ g = f * P({1, 0, 1}); // adds two non-real roots
        EXPECT_EQ(sturm_real_root_count(f), k);
        EXPECT_EQ(sturm_real_root_count(g), k);
        auto iv = isolate_real_roots(to_Q(g));
        ASSERT_EQ(static_cast<int>(iv.size()), k);
        auto it = roots.begin();
        for (auto &[a, b] : iv) {
            EXPECT_LT(a, Q(*it));
            EXPECT_GE(b, Q(*it));
            ++it;
        }
    }
    EXPECT_THROW(sturm_real_root_count(P({0, 0, 1})), validation_error);
}

TEST(Sturm, SignAtRootByBisection)
{
    /* sign of g at the real roots of f = x^3 - 2x, compared with a numeric evaluation */
    PolyQ f = to_Q(P({0, -2, 0, 1}));
    PolyQ g = to_Q(P({-1, 0, 1})); // x^2 - 1: at -sqrt2 -> +, 0 -> -, sqrt2 -> +
    auto iv = isolate_real_roots(f);
    ASSERT_EQ(iv.size(), 3u);
    std::vector<int> want{1, -1, 1};
    for (size_t i = 0; i < 3; ++i)
        EXPECT_EQ(sign_at_root(g, f, iv[i].first, iv[i].second), want[i]);
}

TEST(Matrix, BareissMatchesCofactor)
{
    std::mt19937_64 rng(9);
    for (int t = 0; t < 40; ++t) {
        int n = 1 + t % 6;
        MatZ m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m(i, j) = static_cast<long>(rng() % 11) - 5;
        EXPECT_EQ(det_bareiss(m), det_cofactor(m));
    }
}

TEST(Matrix, CharpolyAndInverse)
{
    MatQ m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 3;
    m(1, 1) = 4;
    EXPECT_EQ(charpoly(m), to_Q(P({-2, -5, 1})));
    EXPECT_EQ(inverse(m) * m, MatQ::identity(2));
    EXPECT_EQ(rank(m), 2);
    MatZ A = anti_identity<Z>(3);
    EXPECT_EQ(det_bareiss(A), -1);
}

TEST(Hnf, SmallExamples)
{
    MatZ g(2, 2);
    g(0, 0) = 2;
    g(1, 0) = 1;
    g(1, 1) = 1;
    MatZ H = hnf_rows(g);
    EXPECT_EQ(H(0, 0), 1);
    EXPECT_EQ(H(0, 1), 1);
    EXPECT_EQ(H(1, 0), 0);
    EXPECT_EQ(H(1, 1), 2);
    EXPECT_TRUE(hnf_coordinates(H, {Z(3), Z(5)}).has_value());
    EXPECT_FALSE(hnf_coordinates(H, {Z(0), Z(1)}).has_value());
}

TEST(Hnf, IndexEqualsAbsoluteDeterminant)
{
    std::mt19937_64 rng(13);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + t % 3;
        MatZ m(n + 2, n);
        for (int i = 0; i < n + 2; ++i)
            for (int j = 0; j < n; ++j)
                m(i, j) = static_cast<long>(rng() % 9) - 4;
        MatZ sq(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                sq(i, j) = m(i, j);
        Z d = det_bareiss(sq);
        if (d == 0)
            continue;
        MatZ H = hnf_rows(sq);
        Z prod = 1;
        for (int i = 0; i < n; ++i)
            prod *= H(i, i);
        EXPECT_EQ(prod, abs(d));
        /* every generator lies in the lattice */
        for (int i = 0; i < n; ++i) {
            std::vector<Z> v(n);
            for (int j = 0; j < n; ++j)
                v[j] = sq(i, j);
            EXPECT_TRUE(hnf_coordinates(H, v).has_value());
        }
    }
}
