#ifndef SELORB_FINITE_GROUP_HPP
#define SELORB_FINITE_GROUP_HPP

#include <cstdint>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "../orbit/field.hpp"

namespace selorb {

/* #SO(W)(q) = q^{n^2} prod_{i=1}^n (q^{2i} - 1) */
inline Z so_order(int n, const Z &q)
{
    require(n >= 1, "genus must be positive");
    Z r = ipow(q, static_cast<unsigned long>(n) * n);
    for (int i = 1; i <= n; ++i)
        r *= ipow(q, 2 * i) - 1;
    return r;
}

/* square matrix over F_p, row-major */
struct FpMat {
    int N = 0;
    std::vector<std::int64_t> a;

    FpMat() = default;
    explicit FpMat(int N_) : N(N_), a(static_cast<size_t>(N_) * N_, 0) {}
    static FpMat identity(int N)
    {
        FpMat m(N);
        for (int i = 0; i < N; ++i)
            m(i, i) = 1;
        return m;
    }
    std::int64_t &operator()(int i, int j) { return a[static_cast<size_t>(i) * N + j]; }
    std::int64_t operator()(int i, int j) const { return a[static_cast<size_t>(i) * N + j]; }
    friend bool operator==(const FpMat &x, const FpMat &y) { return x.a == y.a; }

    FpMat transpose() const
    {
        FpMat t(N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }
    std::string key() const { return std::string(reinterpret_cast<const char *>(a.data()), a.size() * sizeof(a[0])); }
};

inline FpMat mul(const FpMat &x, const FpMat &y, const PrimeField &k)
{
    FpMat r(x.N);
    for (int i = 0; i < x.N; ++i)
        for (int l = 0; l < x.N; ++l) {
            auto v = x(i, l);
            if (!v)
                continue;
            for (int j = 0; j < x.N; ++j)
                r(i, j) = (r(i, j) + v * y(l, j)) % k.p;
        }
    return r;
}

inline FpMat fp_anti_identity(int N)
{
    FpMat a(N);
    for (int i = 0; i < N; ++i)
        a(i, N - 1 - i) = 1;
    return a;
}

inline std::int64_t det_mod_p(FpMat m, const PrimeField &k)
{
    int N = m.N;
    std::int64_t d = 1;
    for (int c = 0; c < N; ++c) {
        int piv = -1;
        for (int i = c; i < N; ++i)
            if (m(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0)
            return 0;
        if (piv != c) {
            for (int j = 0; j < N; ++j)
                std::swap(m(c, j), m(piv, j));
            d = k.neg(d);
        }
        d = k.mul(d, m(c, c));
        auto inv = k.inv(m(c, c));
        for (int i = c + 1; i < N; ++i) {
            if (!m(i, c))
                continue;
            auto t = k.mul(m(i, c), inv);
            for (int j = c; j < N; ++j)
                m(i, j) = k.sub(m(i, j), k.mul(t, m(c, j)));
        }
    }
    return d;
}

inline bool in_so(const FpMat &g, const PrimeField &k)
{
    FpMat A = fp_anti_identity(g.N);
    return mul(mul(g.transpose(), A, k), g, k) == A && det_mod_p(g, k) == 1;
}

/* Root-subgroup unipotents for the simple roots and their negatives, plus the
   torus elements diag(.., g, .., g^{-1}, ..) for a primitive root g. */
inline std::vector<FpMat> so_generators(int n, std::int64_t p)
{
    PrimeField k(p);
    if (p == 2)
        throw unsupported_error("so_generators: p = 2");
    int N = 2 * n + 1;
    std::vector<FpMat> gens;
    for (int i = 0; i + 1 < n; ++i) {
        FpMat x = FpMat::identity(N);
        x(i, i + 1) = 1;
        x(N - 2 - i, N - 1 - i) = k.neg(1);
        gens.push_back(x);
        gens.push_back(x.transpose());
    }
    {
        FpMat x = FpMat::identity(N);
        x(n - 1, n) = 1;
        x(n, n + 1) = k.neg(1);
        x(n - 1, n + 1) = k.neg(k.inv(2));
        gens.push_back(x);
        gens.push_back(x.transpose());
    }
    std::int64_t g = primitive_root(Z(static_cast<long>(p))).get_si();
    for (int i = 0; i < n; ++i) {
        FpMat t = FpMat::identity(N);
        t(i, i) = g;
        t(N - 1 - i, N - 1 - i) = k.inv(g);
        gens.push_back(t);
    }
    return gens;
}

/* BFS closure of the generators; throws infeasible past `cap` elements */
inline std::vector<FpMat> group_closure(const std::vector<FpMat> &gens, const PrimeField &k, size_t cap = 2000000)
{
    int N = gens.at(0).N;
    std::vector<FpMat> elems{FpMat::identity(N)};
    std::unordered_set<std::string> seen{elems[0].key()};
    for (size_t at = 0; at < elems.size(); ++at) {
        for (auto &g : gens) {
            FpMat h = mul(g, elems[at], k);
            if (seen.insert(h.key()).second) {
                elems.push_back(std::move(h));
                if (elems.size() > cap)
                    throw infeasible_error("group closure exceeds cap");
            }
        }
    }
    return elems;
}

} // namespace selorb

#endif
