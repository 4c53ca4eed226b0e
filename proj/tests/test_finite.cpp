#include <gtest/gtest.h>

#include <random>
#include <set>

#include "selorb/exact/matrix.hpp"
#include "selorb/finite/census.hpp"
#include "selorb/finite/fp_poly.hpp"
#include "selorb/finite/group.hpp"
#include "selorb/orbit/distinguished.hpp"

using namespace selorb;

namespace {

std::int64_t md(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

/* rank of an r x c matrix mod p by plain elimination */
int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p)
{
    PrimeField k(p);
    int r = static_cast<int>(m.size()), c = r ? static_cast<int>(m[0].size()) : 0, rank = 0;
    for (int col = 0; col < c && rank < r; ++col) {
        int piv = -1;
        for (int i = rank; i < r; ++i)
            if (m[i][col]) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[piv], m[rank]);
        auto inv = k.inv(m[rank][col]);
        for (int i = 0; i < r; ++i) {
            if (i == rank || !m[i][col])
                continue;
            auto t = k.mul(m[i][col], inv);
            for (int j = 0; j < c; ++j)
                m[i][j] = k.sub(m[i][j], k.mul(t, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

/* T = A B is regular iff some vector is cyclic; brute force over all vectors */
bool regular_by_cyclic_vector(const std::int64_t *B, int N, std::int64_t p)
{
    std::vector<std::int64_t> T(N * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            T[i * N + j] = B[(N - 1 - i) * N + j];
    std::uint64_t total = 1;
    for (int i = 0; i < N; ++i)
        total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 1; code < total; ++code) {
        std::vector<std::int64_t> v(N);
        std::uint64_t c = code;
        for (auto &x : v) {
            x = static_cast<std::int64_t>(c % p);
            c /= p;
        }
        std::vector<std::vector<std::int64_t>> K;
        for (int t = 0; t < N; ++t) {
            K.push_back(v);
            std::vector<std::int64_t> w(N, 0);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    w[i] = md(w[i] + T[i * N + j] * v[j], p);
            v = w;
        }
        if (rank_mod_p(K, p) == N)
            return true;
    }
    return false;
}

} // namespace

TEST(Group, OrderFormula)
{
    EXPECT_EQ(so_order(1, Z(3)), 24);
    EXPECT_EQ(so_order(2, Z(3)), 51840);
    EXPECT_EQ(so_order(1, Z(5)), 120);
}

TEST(Group, GeneratorsAndClosure)
{
    for (std::int64_t p : {3, 5, 7}) {
        PrimeField k(p);
        auto gens = so_generators(1, p);
        for (auto &g : gens)
            EXPECT_TRUE(in_so(g, k));
        EXPECT_EQ(Z(static_cast<unsigned long>(group_closure(gens, k).size())), so_order(1, Z(p))) << p;
    }
    PrimeField k3(3);
    for (auto &g : so_generators(2, 3))
        EXPECT_TRUE(in_so(g, k3));
    EXPECT_EQ(group_closure(so_generators(2, 3), k3).size(), 51840u);
    EXPECT_THROW(so_generators(1, 2), unsupported_error);
}

TEST(Census, CharpolyAgreesWithExactPencil)
{
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 2; ++n) {
        std::int64_t p = 7;
        VBox box(n, p);
        PrimeField k(p);
        int N = box.N();
        for (int t = 0; t < 200; ++t) {
            std::uint64_t code = rng() % box.size();
            std::int64_t B[81], cp[10];
            box.decode(code, B);
            EXPECT_EQ(box.encode(B), code);
            charpoly_mod_p(B, N, k, cp);
            MatZ M(N, N);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    M(i, j) = Z(static_cast<long>(B[i * N + j]));
            ASSERT_EQ(M.anti_trace() % p, 0);
            /* centre entry is reduced mod p: fix the lift so the anti-trace is exactly 0 */
            M(n, n) -= M.anti_trace();
            PolyZ f = charpoly_pencil(M, n);
            for (int d = 0; d <= N; ++d)
                EXPECT_EQ(md(cp[d], p), mod(f[d], Z(p)).get_si()) << "n=" << n << " d=" << d;
        }
    }
}

TEST(Census, RegularityAgreesWithCyclicVectorSearch)
{
    std::mt19937_64 rng(9);
    for (auto [n, p] : {std::pair<int, std::int64_t>{1, 5}, {2, 3}}) {
        VBox box(n, p);
        PrimeField k(p);
        int hits = 0;
        for (int t = 0; t < 150; ++t) {
            std::int64_t B[81];
            std::uint64_t code = t < 3 ? static_cast<std::uint64_t>(t) : rng() % box.size();
            box.decode(code, B);
            bool reg = is_regular_mod_p(B, box.N(), k);
            EXPECT_EQ(reg, regular_by_cyclic_vector(B, box.N(), p)) << code;
            hits += !reg;
        }
        EXPECT_GT(hits, 0);
    }
}

TEST(Census, FactorAgreesWithRootCount)
{
    std::mt19937_64 rng(1);
    for (std::int64_t p : {5, 7, 11}) {
        PrimeField k(p);
        for (int t = 0; t < 100; ++t) {
            int d = 1 + static_cast<int>(rng() % 6);
            fpoly f(d + 1);
            for (auto &c : f)
                c = static_cast<std::int64_t>(rng() % p);
            f[d] = 1;
            auto fac = fp::factor(f, k);
            fpoly prod{1};
            int linear = 0;
            for (auto &e : fac) {
                for (int i = 0; i < e.mult; ++i)
                    prod = fp::mul(prod, e.g, k);
                if (fp::deg(e.g) == 1)
                    linear += e.mult;
                /* no factor of degree 2 or 3 has a root */
                if (fp::deg(e.g) == 2 || fp::deg(e.g) == 3)
                    for (std::int64_t x = 0; x < p; ++x)
                        EXPECT_NE(fp::eval(e.g, x, k), 0);
            }
            EXPECT_EQ(prod, f);
            /* roots with multiplicity, by repeated division */
            int roots = 0;
            for (std::int64_t x = 0; x < p; ++x) {
                fpoly g = f, lin{k.neg(x), 1};
                while (fp::deg(g) >= 1) {
                    auto [q, r] = fp::divmod(g, lin, k);
                    if (!r.empty())
                        break;
                    ++roots;
                    g = q;
                }
            }
            EXPECT_EQ(linear, roots);
        }
    }
}

TEST(Census, GenusOneFibres)
{
    for (std::int64_t p : {3, 5, 7}) {
        auto sc = space_census(1, p);
        std::uint64_t so = so_order(1, Z(p)).get_ui();
        EXPECT_EQ(sc.group_order, so);
        EXPECT_EQ(sc.regular, static_cast<std::uint64_t>(p * p) * so);
        EXPECT_EQ(sc.total, static_cast<std::uint64_t>(p * p * p * p * p));
        for (auto &F : sc.fibers) {
            if (!F.separable)
                continue;
            EXPECT_EQ(F.fiber_size, so);
            EXPECT_EQ(F.num_orbits, 1u << F.m);
            EXPECT_EQ(F.distinguished_orbits, 1u);
            EXPECT_EQ(F.distinguished_size, so >> F.m);
            std::uint64_t sum = 0;
            for (size_t o = 0; o < F.orbit_sizes.size(); ++o) {
                sum += F.orbit_sizes[o];
                EXPECT_EQ(F.stabilizer_orders[o], 1u << F.m);
                EXPECT_EQ(F.orbit_sizes[o] * F.stabilizer_orders[o], so);
            }
            EXPECT_EQ(sum, so);
        }
    }
}

TEST(Census, OrbitSizesAgreeWithFullGroupAction)
{
    std::int64_t p = 5;
    PrimeField k(p);
    VBox box(1, p);
    auto sc = space_census(1, p);
    auto group = group_closure(so_generators(1, p), k);
    for (auto &F : sc.fibers)
        for (size_t o = 0; o < F.representatives.size(); ++o) {
            std::int64_t B[9], C[9];
            box.decode(F.representatives[o], B);
            std::set<std::uint64_t> seen;
            for (auto &g : group) {
                conjugate_mod_p(B, g, C, p);
                seen.insert(box.encode(C));
            }
            EXPECT_EQ(seen.size(), F.orbit_sizes[o]);
        }
}

TEST(Census, FixedPolynomialExamples)
{
    auto a = census_fixed_poly(1, 3, {Z(-1), Z(0)});
    EXPECT_EQ(a.fiber_size, 24u);
    EXPECT_EQ(a.m, 2);
    EXPECT_EQ(a.num_orbits, 4u);
    EXPECT_EQ(a.distinguished_size, 6u);

    auto b = census_fixed_poly(1, 3, {Z(-1), Z(1)}); /* x^3 - x + 1, irreducible mod 3 */
    EXPECT_EQ(b.m, 0);
    EXPECT_EQ(b.num_orbits, 1u);
    EXPECT_EQ(b.orbit_size(), 24u);
    EXPECT_EQ(b.stabilizer_order(), 1u);

    auto c = census_fixed_poly(1, 5, {Z(0), Z(1)});
    EXPECT_EQ(c.fiber_size, 120u);
    EXPECT_EQ(c.orbit_sizes, (std::vector<std::uint64_t>{60, 60}));

    EXPECT_THROW(census_fixed_poly(1, 3, {Z(0), Z(0)}), validation_error);
    EXPECT_THROW(census_fixed_poly(1, 2, {Z(0), Z(1)}), unsupported_error);
    EXPECT_THROW(census_fixed_poly(3, 3, std::vector<Z>(6, Z(1))), infeasible_error);
}

TEST(Census, DistinguishedRepLiesInDistinguishedOrbit)
{
    std::int64_t p = 7;
    auto sc = space_census(1, p);
    VBox box(1, p);
    for (std::uint64_t fc = 0; fc < sc.fibers.size(); ++fc) {
        auto &F = sc.fibers[fc];
        if (!F.separable)
            continue;
        PolyZ f(std::vector<Z>{Z(F.f[1]), Z(F.f[0]), Z(0), Z(1)});
        auto M = distinguished_rep_mod_p(f, p);
        std::int64_t B[9];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                B[i * 3 + j] = M(i, j);
        EXPECT_TRUE(distinguished_shape_mod_p(B, 3));
        std::int64_t cp[4];
        charpoly_mod_p(B, 3, PrimeField(p), cp);
        EXPECT_EQ(cp[1], F.f[0]);
        EXPECT_EQ(cp[0], F.f[1]);
    }
}

/* counts frozen from tests/oracles/frozen_values.py */
TEST(Density, FrozenCounts)
{
    std::vector<std::tuple<int, std::int64_t, std::uint64_t, std::uint64_t>> want = {
        {1, 3, 4, 6}, {1, 5, 12, 20}, {1, 7, 26, 42}, {1, 11, 70, 110}, {1, 13, 100, 156}, {2, 3, 38, 54}};
    for (auto [n, p, red, sep] : want) {
        auto [r, s] = reducible_poly_density(n, p);
        EXPECT_EQ(r, red) << n << " " << p;
        EXPECT_EQ(s, sep) << n << " " << p;
    }
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        auto [r, s] = reducible_poly_density(1, p);
        EXPECT_LE(std::abs(double(r) / double(s) - 2.0 / 3.0), 10.0 / double(p));
    }
}

TEST(Census, RegularCountGenusTwo)
{
    CensusOptions opt;
    opt.orbits = false;
    opt.workers = 4;
    auto sc = space_census(2, 3, opt);
    EXPECT_EQ(sc.regular, 81u * 51840u);
    EXPECT_EQ(sc.total, 4782969u);
    for (auto &F : sc.fibers)
        if (F.separable)
            EXPECT_EQ(F.fiber_size, 51840u);
}
