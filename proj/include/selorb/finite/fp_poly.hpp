#ifndef SELORB_FINITE_FP_POLY_HPP
#define SELORB_FINITE_FP_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "../exact/poly.hpp"
#include "../orbit/field.hpp"

namespace selorb {

/* polynomials over F_p, lowest degree first, trimmed */
using fpoly = std::vector<std::int64_t>;

namespace fp {

inline void trim(fpoly &a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}
inline int deg(const fpoly &a) { return static_cast<int>(a.size()) - 1; }

inline fpoly reduce(const PolyZ &f, const PrimeField &k)
{
    fpoly r;
    for (auto &c : f.coeffs())
        r.push_back(k.from(c));
    trim(r);
    return r;
}

inline fpoly reduce(const PolyQ &f, const PrimeField &k)
{
    fpoly r;
    for (auto &c : f.coeffs())
        r.push_back(k.from(c));
    trim(r);
    return r;
}

inline fpoly add(fpoly a, const fpoly &b, const PrimeField &k)
{
    if (b.size() > a.size())
        a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i)
        a[i] = k.add(a[i], b[i]);
    trim(a);
    return a;
}

inline fpoly sub(fpoly a, const fpoly &b, const PrimeField &k)
{
    if (b.size() > a.size())
        a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i)
        a[i] = k.sub(a[i], b[i]);
    trim(a);
    return a;
}

inline fpoly mul(const fpoly &a, const fpoly &b, const PrimeField &k)
{
    if (a.empty() || b.empty())
        return {};
    fpoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j)
                r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
    trim(r);
    return r;
}

inline std::pair<fpoly, fpoly> divmod(fpoly a, const fpoly &b, const PrimeField &k)
{
    require(!b.empty(), "F_p polynomial division by zero");
    trim(a);
    int db = deg(b);
    if (deg(a) < db)
        return {{}, a};
    fpoly q(a.size() - db, 0);
    auto inv = k.inv(b.back());
    for (int i = deg(a); i >= db; --i) {
        if (!a[i])
            continue;
        auto t = k.mul(a[i], inv);
        q[i - db] = t;
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = k.sub(a[i - db + j], k.mul(t, b[j]));
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

inline fpoly rem(const fpoly &a, const fpoly &b, const PrimeField &k) { return divmod(a, b, k).second; }

inline fpoly monic(fpoly a, const PrimeField &k)
{
    if (a.empty())
        return a;
    auto inv = k.inv(a.back());
    for (auto &v : a)
        v = k.mul(v, inv);
    return a;
}

inline fpoly gcd(fpoly a, fpoly b, const PrimeField &k)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        fpoly r = rem(a, b, k);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, k);
}

inline fpoly derivative(const fpoly &a, const PrimeField &k)
{
    fpoly d;
    for (size_t i = 1; i < a.size(); ++i)
        d.push_back(k.mul(static_cast<std::int64_t>(i % k.p), a[i]));
    trim(d);
    return d;
}

/* b^e mod m */
inline fpoly powmod(fpoly b, Z e, const fpoly &m, const PrimeField &k)
{
    fpoly r{1};
    r = rem(r, m, k);
    b = rem(b, m, k);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            r = rem(mul(r, b, k), m, k);
        e >>= 1;
        if (e > 0)
            b = rem(mul(b, b, k), m, k);
    }
    return r;
}

inline std::int64_t eval(const fpoly &a, std::int64_t x, const PrimeField &k)
{
    std::int64_t r = 0;
    for (int i = deg(a); i >= 0; --i)
        r = k.add(k.mul(r, x), a[i]);
    return r;
}

/* distinct-degree factorization of a squarefree monic polynomial:
   pairs (d, product of the degree-d irreducible factors) */
inline std::vector<std::pair<int, fpoly>> ddf(fpoly f, const PrimeField &k)
{
    std::vector<std::pair<int, fpoly>> out;
    fpoly x{0, 1};
    fpoly h = x;
    Z p(static_cast<long>(k.p));
    for (int d = 1; 2 * d <= deg(f); ++d) {
        h = powmod(h, p, f, k);
        fpoly g = gcd(f, sub(h, x, k), k);
        if (deg(g) > 0) {
            out.emplace_back(d, g);
            f = divmod(f, g, k).first;
            h = rem(h, f, k);
        }
    }
    if (deg(f) > 0)
        out.emplace_back(deg(f), monic(f, k));
    return out;
}

/* equal-degree splitting (Cantor-Zassenhaus), deterministic seed */
inline void edf(const fpoly &f, int d, const PrimeField &k, std::mt19937_64 &rng, std::vector<fpoly> &out)
{
    int n = deg(f);
    if (n == d) {
        out.push_back(monic(f, k));
        return;
    }
    Z p(static_cast<long>(k.p));
    Z e = (ipow(p, d) - 1) / 2;
    std::uniform_int_distribution<std::int64_t> U(0, k.p - 1);
    for (;;) {
        fpoly a(n);
        for (auto &v : a)
            v = U(rng);
        trim(a);
        if (deg(a) < 1)
            continue;
        fpoly g = gcd(f, a, k);
        if (deg(g) > 0 && deg(g) < n) {
            edf(g, d, k, rng, out);
            edf(divmod(f, g, k).first, d, k, rng, out);
            return;
        }
        fpoly b = sub(powmod(a, e, f, k), fpoly{1}, k);
        g = gcd(f, b, k);
        if (deg(g) > 0 && deg(g) < n) {
            edf(g, d, k, rng, out);
            edf(divmod(f, g, k).first, d, k, rng, out);
            return;
        }
    }
}

/* squarefree decomposition: pairs (squarefree factor, multiplicity) */
inline std::vector<std::pair<fpoly, int>> squarefree(const fpoly &f0, const PrimeField &k)
{
    std::vector<std::pair<fpoly, int>> out;
    fpoly f = monic(f0, k);
    if (deg(f) < 1)
        return out;
    fpoly df = derivative(f, k);
    if (df.empty()) {
        /* f = g(x^p) = g(x)^p over F_p */
        fpoly g;
        for (size_t i = 0; i < f.size(); i += k.p)
            g.push_back(f[i]);
        for (auto &pr : squarefree(g, k))
            out.emplace_back(pr.first, pr.second * static_cast<int>(k.p));
        return out;
    }
    fpoly c = gcd(f, df, k);
    fpoly w = divmod(f, c, k).first;
    int i = 1;
    while (deg(w) > 0) {
        fpoly y = gcd(w, c, k);
        fpoly z = divmod(w, y, k).first;
        if (deg(z) > 0)
            out.emplace_back(monic(z, k), i);
        ++i;
        w = y;
        c = divmod(c, y, k).first;
    }
    if (deg(c) > 0) {
        fpoly g;
        for (size_t t = 0; t < c.size(); t += k.p)
            g.push_back(c[t]);
        for (auto &pr : squarefree(g, k))
            out.emplace_back(pr.first, pr.second * static_cast<int>(k.p));
    }
    return out;
}

struct factor_entry {
    fpoly g; /* monic irreducible */
    int mult;
};

/* complete factorization into monic irreducibles with multiplicities, sorted */
inline std::vector<factor_entry> factor(const fpoly &f, const PrimeField &k)
{
    std::vector<factor_entry> out;
    std::mt19937_64 rng(0x5e1b0b5u);
    for (auto &[s, e] : squarefree(f, k))
        for (auto &[d, g] : ddf(s, k)) {
            std::vector<fpoly> parts;
            edf(g, d, k, rng, parts);
            for (auto &h : parts)
                out.push_back({h, e});
        }
    std::sort(out.begin(), out.end(), [](const factor_entry &a, const factor_entry &b) {
        if (a.g.size() != b.g.size())
            return a.g.size() < b.g.size();
        if (a.g != b.g)
            return a.g < b.g;
        return a.mult < b.mult;
    });
    /* merge equal factors coming from different squarefree layers */
    std::vector<factor_entry> merged;
    for (auto &e : out) {
        if (!merged.empty() && merged.back().g == e.g)
            merged.back().mult += e.mult;
        else
            merged.push_back(e);
    }
    return merged;
}

/* degrees of the irreducible factors of a squarefree polynomial */
inline std::vector<int> factor_degrees_squarefree(const fpoly &f, const PrimeField &k)
{
    std::vector<int> out;
    for (auto &[d, g] : ddf(monic(f, k), k))
        for (int i = 0; i < deg(g) / d; ++i)
            out.push_back(d);
    return out;
}

inline bool is_squarefree(const fpoly &f, const PrimeField &k)
{
    return deg(gcd(f, derivative(f, k), k)) == 0;
}

} // namespace fp
} // namespace selorb

#endif
