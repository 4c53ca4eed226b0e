#include <gtest/gtest.h>

#include <random>

#include "selorb/curves/curve.hpp"
#include "selorb/finite/fp_poly.hpp"
#include "selorb/padic/chabauty.hpp"
#include "selorb/padic/lattice.hpp"
#include "selorb/padic/local.hpp"

using namespace selorb;

namespace {

PolyZ P(std::vector<long> c)
{
    std::vector<Z> v;
    for (long x : c)
        v.push_back(Z(x));
    return PolyZ(v);
}

PolyZ random_separable(std::mt19937_64 &rng, int N, int bound)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    for (;;) {
        std::vector<Z> v(N + 1);
        v[N] = 1;
        for (int i = 0; i + 2 <= N; ++i)
            v[i] = d(rng);
        PolyZ f(v);
        if (discriminant(f) != 0)
            return f;
    }
}

/* z^k * a, truncated to len */
Series shift(const Series &a, size_t k, size_t len)
{
    Series r(len, Q(0));
    for (size_t j = 0; j + k < len && j < a.size(); ++j)
        r[j + k] = a[j];
    return r;
}

} // namespace

TEST(Padic, ApproxArithmetic)
{
    Z p = 5;
    auto a = PadicApprox::from(Q(2, 25), p, 6), b = PadicApprox::from(Q(75, 7), p, 6);
    EXPECT_EQ(a.val, -2);
    EXPECT_TRUE((a * b).equals_at(Q(6, 7), 6));
    auto c = PadicApprox::from(Q(1), p, 4) + PadicApprox::from(Q(-1 + 625), p, 4);
    EXPECT_TRUE(c.is_zero() || c.val >= 4);
    EXPECT_TRUE((PadicApprox::from(Q(3), p, 4) + PadicApprox::from(Q(22), p, 4)).equals_at(Q(25), 3));
}

TEST(NewtonPolygon, Examples)
{
    auto a = newton_polygon(P({1, 0, 0, 1}), 3);
    ASSERT_EQ(a.root_valuations().size(), 1u);
    EXPECT_EQ(a.root_valuations()[0].first, 0);
    for (auto f : {P({3, 3, 0, 1}), P({3, 9, 0, 1})}) {
        auto np = newton_polygon(f, 3);
        EXPECT_EQ(np.vertices, (std::vector<std::pair<int, long>>{{0, 1}, {3, 0}}));
        EXPECT_EQ(np.root_valuations()[0], (std::pair<Q, int>{Q(1, 3), 3}));
    }
}

TEST(NewtonPolygon, ValuationOfConstantTerm)
{
    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; ++t) {
        Z p = std::vector<int>{2, 3, 5}[t % 3];
        std::vector<Z> v(6);
        v[5] = 1;
        for (int i = 0; i < 5; ++i)
            v[i] = Z(static_cast<long>(rng() % 200) - 100) * ipow(p, static_cast<unsigned long>(rng() % 4));
        if (v[0] == 0)
            v[0] = 1;
        PolyZ f(v);
        auto np = newton_polygon(f, p);
        Q sum = 0;
        int len = 0;
        for (auto [val, k] : np.root_valuations()) {
            sum += val * k;
            len += k;
        }
        EXPECT_EQ(len, 5);
        EXPECT_EQ(sum, valuation(f[0], p));
        for (size_t s = 1; s + 1 < np.vertices.size(); ++s) /* strictly convex */
            EXPECT_GT(np.root_valuations()[s - 1].first, np.root_valuations()[s].first);
    }
}

TEST(FactorShape, Examples)
{
    auto a = factor_shape(P({1, 0, 0, 1}), 7);
    EXPECT_EQ(a.degrees, (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(a.m(), 2);
    auto b = factor_shape(P({1, 0, 0, 1}), 2);
    EXPECT_EQ(b.degrees, (std::vector<int>{1, 2}));
    EXPECT_TRUE(b.unramified());
    auto c = factor_shape(P({3, 3, 0, 1}), 3);
    EXPECT_EQ(c.degrees, (std::vector<int>{3}));
    EXPECT_EQ(c.ramification, (std::vector<int>{3}));
    EXPECT_EQ(factor_shape(P({1, 0, 0, 1}), 3).degrees, (std::vector<int>{1, 2}));
    EXPECT_EQ(factor_shape(P({0, -1, 0, 1}), 3).degrees, (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(factor_shape(P({-8, 0, 0, 1}), 2).degrees, (std::vector<int>{1, 2}));
}

TEST(FactorShape, Errors)
{
    EXPECT_THROW(factor_shape(P({0, 0, 0, 1}), 3), validation_error);
    EXPECT_THROW(factor_shape(P({1, 0, 0, 1}), 3, 6), precision_error); /* v_3(disc) = 3 */
    EXPECT_NO_THROW(factor_shape(P({1, 0, 0, 1}), 3, 7));
    PolyZ deep(std::vector<Z>{ipow(Z(3), 10), 0, 0, 1}); /* v_3(disc) = 23 */
    EXPECT_THROW(factor_shape(deep, 3), unsupported_error);
    EXPECT_EQ(default_precision(P({1, 0, 0, 1}), 3), 16);
}

TEST(FactorShape, UnramifiedPrimesMatchReduction)
{
    std::mt19937_64 rng(8);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        PolyZ f = random_separable(rng, t % 2 ? 5 : 3, 12);
        for (long p : {3, 5, 7, 11}) {
            if (discriminant(f) % p == 0)
                continue;
            PrimeField k(p);
            auto want = fp::factor_degrees_squarefree(fp::reduce(f, k), k);
            std::sort(want.begin(), want.end());
            auto s = factor_shape(f, p);
            EXPECT_EQ(s.degrees, want);
            EXPECT_TRUE(s.unramified());
            ++checked;
        }
    }
    EXPECT_GT(checked, 500);
}

TEST(FactorShape, ShiftInvariant)
{
    std::mt19937_64 rng(12);
    int done = 0;
    for (int t = 0; t < 100; ++t) {
        PolyZ f = random_separable(rng, 3, 30);
        long p = std::vector<long>{3, 5, 7}[t % 3];
        Z a = static_cast<long>(rng() % 11) - 5;
        try {
            auto s = factor_shape(f, p);
            auto s2 = factor_shape(shift(f, a), p);
            EXPECT_EQ(s.degrees, s2.degrees);
            EXPECT_EQ(s.ramification, s2.ramification);
            ++done;
        } catch (const unsupported_error &) {
        }
    }
    EXPECT_GT(done, 80);
}

TEST(LocalOrders, Examples)
{
    PolyZ f = P({1, 0, 0, 1});
    EXPECT_EQ(j2_local_order(f, 7), 4);
    EXPECT_EQ(jmod2j_local_order(f, 7, 1), 4);
    EXPECT_EQ(j2_local_order(f, 2), 2);
    EXPECT_EQ(jmod2j_local_order(f, 2, 1), 4);
    EXPECT_EQ(j2_local_order(P({3, 3, 0, 1}), 3), 1);
    EXPECT_EQ(local_unit_h1_order(f, 7), 16);
    EXPECT_EQ(local_unit_h1_order(f, 2), 16);
    EXPECT_EQ(local_unit_h1_order(P({3, 3, 0, 1}), 3), 1);
    EXPECT_THROW(local_unit_h1_order(P({2, 0, 0, 1}), 2), unsupported_error);
    EXPECT_EQ(local_orbit_count(1), 3);
    EXPECT_EQ(local_orbit_count(2), 10);
    EXPECT_EQ(local_orbit_count(0), 1);
}

TEST(LocalOrders, MassTable)
{
    auto t = local_mass_table(P({1, 0, 0, 1}));
    ASSERT_EQ(t.size(), 3u);
    EXPECT_EQ(t[0].rho, Q(1, 2));
    EXPECT_EQ(t[1].rho, 2);
    EXPECT_EQ(t[2].place, 3);
    EXPECT_EQ(t[2].rho, 1);
    Q prod = 1;
    for (auto &e : t)
        prod *= e.rho;
    EXPECT_EQ(prod, 1);
}

TEST(Lattice, Examples)
{
    for (int n = 1; n <= 3; ++n) {
        MatZ A = standard_form(n);
        EXPECT_TRUE(is_normalized_mod(A, lattice_normalize_odd_p(A, 5, 6), 5, 6));
    }
    MatZ G{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
    MatZ U = lattice_normalize_odd_p(G, 5, 6);
    MatZ R = U.transpose() * G * U;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            EXPECT_EQ(mod(R(i, j) - (i + j == 2), Z(15625)), 0);
    EXPECT_THROW(lattice_normalize_odd_p(G, 2, 6), unsupported_error);
    MatZ bad{{1, 0, 0}, {0, 1, 0}, {0, 0, -2}}; /* det class 2, a nonsquare mod 5 */
    EXPECT_THROW(lattice_normalize_odd_p(bad, 5, 6), validation_error);
    MatZ sing{{5, 0, 0}, {0, 1, 0}, {0, 0, -1}};
    EXPECT_THROW(lattice_normalize_odd_p(sing, 5, 6), validation_error);
}

TEST(Lattice, RoundTrip)
{
    std::mt19937_64 rng(21);
    int done = 0;
    for (int t = 0; t < 120; ++t) {
        int n = 1 + t % 3, N = 2 * n + 1;
        long p = std::vector<long>{3, 5, 7, 11}[t % 4];
        MatZ U0(N, N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                U0(i, j) = static_cast<long>(rng() % 9) - 4;
        if (mod(det_bareiss(U0), Z(p)) == 0)
            continue;
        MatZ A = standard_form(n);
        MatZ G = U0.transpose() * A * U0;
        MatZ U = lattice_normalize_odd_p(G, p, 6);
        EXPECT_TRUE(is_normalized_mod(G, U, p, 6));
        EXPECT_NE(mod(det_bareiss(U), Z(p)), 0);
        ++done;
    }
    EXPECT_GT(done, 60);
}

TEST(Strassmann, Examples)
{
    EXPECT_EQ(strassmann_zero_count({Q(0), Q(1)}, 3).bound, 1);
    auto r = strassmann_zero_count({Q(0), Q(3), Q(0), Q(1, 3)}, 3);
    EXPECT_EQ(r.bound, 3);
    EXPECT_EQ(r.refined, 1); /* 1 + t^2 has no root mod 3 */
    EXPECT_THROW(strassmann_zero_count({Q(0), Q(0), Q(0), Q(0), Q(0), Q(1)}, 3), precision_error);
}

TEST(Strassmann, UnitConditionBoundsZeros)
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 300; ++t) {
        Series a(16, Q(0));
        for (size_t j = 0; j < a.size(); j += 2)
            a[j] = static_cast<long>(rng() % 19) - 9;
        if (t % 2)
            a[0] = 3 * a[0] + 1;
        else
            a[2] = 3 * a[2] + 1;
        Series F(a.size() + 1, Q(0));
        for (size_t j = 0; j < a.size(); ++j)
            F[j + 1] = a[j] / Q(static_cast<long>(j + 1));
        EXPECT_LE(strassmann_zero_count(F, 3).bound, 3);
    }
}

TEST(Omega, DefiningRelations)
{
    std::vector<HyperCurve> curves = {HyperCurve(1, {Z(0), Z(1)}), HyperCurve(1, {Z(2), Z(2)}),
                                      HyperCurve(2, {Z(1), Z(-2), Z(3), Z(5)}), HyperCurve(3, {Z(1), Z(0), Z(-1), Z(2), Z(0), Z(7)})};
    for (auto &C : curves)
        for (int i = 0; i < C.n; ++i) {
            const size_t L = 20;
            auto ex = omega_expansion(C, i, static_cast<int>(L));
            int n = C.n, N = 2 * n + 1;
            ASSERT_EQ(ex.x.size(), L);
            /* z = x^n / y */
            EXPECT_EQ(series::power(ex.x, n, L), ex.y);
            /* y^2 = f(x) */
            Series lhs = series::mul(ex.y, ex.y, L);
            Series rhs = series::power(ex.x, N, L);
            for (int m = 2; m <= N; ++m) {
                Series t = shift(series::power(ex.x, N - m, L), 2 * m, L);
                for (size_t j = 0; j < L; ++j)
                    rhs[j] += Q(C.coef(m)) * t[j];
            }
            EXPECT_EQ(lhs, rhs);
            /* 2 y omega = -z^{2(n-1-i)} x^i dx/dz, with the z-powers cleared */
            Series D(L, Q(0));
            for (size_t j = 0; j < L; ++j)
                D[j] = ex.x[j] * Q(static_cast<long>(j) - 2);
            Series right = shift(series::mul(series::power(ex.x, i, L), D, L), 2 * (n - 1 - i), L);
            Series left = series::mul(ex.y, ex.omega, L);
            for (size_t j = 0; j < L; ++j)
                EXPECT_EQ(Q(2) * left[j], -right[j]) << j;
            for (size_t j = 1; j < L; j += 2)
                EXPECT_EQ(ex.omega[j], 0);
            for (size_t j = 0; j < L; ++j)
                EXPECT_EQ(ex.integral[j + 1] * Q(static_cast<long>(j + 1)), ex.omega[j]);
        }
    EXPECT_EQ(omega_expansion(curves[0], 0, 20).omega[0], 1);
}

TEST(Chabauty, Examples)
{
    auto r = chabauty_bound_at_3(HyperCurve(1, {Z(2), Z(2)}));
    EXPECT_TRUE(r.applicable);
    EXPECT_TRUE(r.rank_assumption);
    EXPECT_GE(r.bound, 0);
    EXPECT_LE(r.bound, 3);
    EXPECT_FALSE(chabauty_bound_at_3(HyperCurve(1, {Z(0), Z(1)})).applicable);
}

TEST(Chabauty, FilterPassingGenusTwo)
{
    int seen = 0;
    for (long a = -6; a <= 6; a += 3)
        for (long b = -4; b <= 4; ++b)
            for (long c = -4; c <= 4; ++c)
                for (long d = -4; d <= 4; ++d) {
                    HyperCurve C(2, {Z(a), Z(b), Z(c), Z(d)});
                    if (curve_discriminant(C) == 0 || !mod3_chabauty_filter(C))
                        continue;
                    auto r = chabauty_bound_at_3(C);
                    EXPECT_LE(r.bound, 3);
                    ++seen;
                }
    EXPECT_GT(seen, 10);
}
