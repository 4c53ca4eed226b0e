#ifndef SELORB_EXACT_INTEGER_HPP
#define SELORB_EXACT_INTEGER_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace selorb {

using Z = mpz_class;
using Q = mpq_class;

inline Z ipow(const Z &b, unsigned long e)
{
    Z r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Q qpow(const Q &b, long e)
{
    if (e < 0)
        return qpow(1 / b, -e);
    Q r(ipow(b.get_num(), e), ipow(b.get_den(), e));
    r.canonicalize();
    return r;
}

/* floor of the k-th root of a nonnegative integer */
inline Z iroot(const Z &a, unsigned long k)
{
    Z r;
    mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
    return r;
}

inline Z parse_Z(const std::string &s)
{
    Z r;
    std::string t = s;
    if (!t.empty() && t[0] == '+')
        t.erase(0, 1);
    if (t.empty() || r.set_str(t, 10) != 0)
        throw validation_error("not an integer: '" + s + "'");
    return r;
}

inline Q parse_Q(const std::string &s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Q(parse_Z(s));
    Z num = parse_Z(s.substr(0, slash)), den = parse_Z(s.substr(slash + 1));
    if (den == 0)
        throw validation_error("zero denominator: '" + s + "'");
    Q r(num, den);
    r.canonicalize();
    return r;
}

inline std::string str(const Z &a) { return a.get_str(); }
inline std::string str(const Q &a) { return a.get_str(); }

/* v_p(a) for a != 0; p need not be prime for the loop, callers pass primes */
inline long valuation(const Z &a, const Z &p)
{
    if (a == 0)
        return std::numeric_limits<long>::max();
    Z t = a;
    long v = 0;
    while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

inline long valuation(const Q &a, const Z &p)
{
    if (a == 0)
        return std::numeric_limits<long>::max();
    return valuation(a.get_num(), p) - valuation(a.get_den(), p);
}

constexpr long VAL_INF = std::numeric_limits<long>::max();

inline bool is_prime(const Z &n)
{
    return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

inline Z mod(const Z &a, const Z &m)
{
    Z r = a % m;
    if (r < 0)
        r += m;
    return r;
}

/* a/b mod m for b invertible mod m */
inline Z mod_div(const Z &a, const Z &b, const Z &m)
{
    Z inv;
    if (!mpz_invert(inv.get_mpz_t(), Z(mod(b, m)).get_mpz_t(), m.get_mpz_t()))
        throw validation_error("non-invertible residue");
    return mod(a * inv, m);
}

/* rational reduced into Z/m, denominator must be a unit */
inline Z mod_q(const Q &a, const Z &m) { return mod_div(a.get_num(), a.get_den(), m); }

inline Z powmod(const Z &b, const Z &e, const Z &m)
{
    Z r;
    mpz_powm(r.get_mpz_t(), Z(mod(b, m)).get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

/* Legendre symbol for odd prime p */
inline int legendre(const Z &a, const Z &p)
{
    return mpz_legendre(Z(mod(a, p)).get_mpz_t(), p.get_mpz_t());
}

/* Tonelli-Shanks; a must be a nonzero square mod odd prime p */
inline Z sqrt_mod_p(const Z &a0, const Z &p)
{
    Z a = mod(a0, p);
    if (a == 0)
        return 0;
    if (legendre(a, p) != 1)
        throw validation_error("non-residue has no square root");
    Z q = p - 1;
    long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Z z = 2;
    while (legendre(z, p) != -1)
        ++z;
    Z m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        long i = 0;
        Z tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Z b = c;
        for (long j = 0; j < m.get_si() - i - 1; ++j)
            b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

/* square root of a unit a modulo p^k (p odd), Hensel lifted */
inline Z sqrt_mod_pk(const Z &a, const Z &p, unsigned k)
{
    Z pk = ipow(p, k);
    Z r = sqrt_mod_p(a, p);
    if (r == 0)
        throw validation_error("square root of a non-unit");
    Z pj = p;
    for (unsigned j = 1; j < k; j *= 2) {
        pj = std::min<Z>(pj * pj, pk);
        /* r <- r - (r^2 - a)/(2r) */
        r = mod(r - mod_div(r * r - a, 2 * r, pj), pj);
    }
    return mod(r, pk);
}

inline Z primitive_root(const Z &p)
{
    if (p == 2)
        return 1;
    Z phi = p - 1, t = phi;
    std::vector<Z> qs;
    for (Z q = 2; q * q <= t; ++q)
        if (t % q == 0) {
            qs.push_back(q);
            while (t % q == 0)
                t /= q;
        }
    if (t > 1)
        qs.push_back(t);
    for (Z g = 2;; ++g) {
        bool ok = true;
        for (auto &q : qs)
            if (powmod(g, phi / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok)
            return g;
    }
}

namespace detail {

inline Z pollard_brent(const Z &n)
{
    if (n % 2 == 0)
        return 2;
    for (unsigned long c = 1;; ++c) {
        Z y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1, m = 64;
        auto f = [&](const Z &v) -> Z { return (v * v + c) % n; };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Z d = x - y;
                    q = q * abs(d) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Z d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

inline void factor_rec(const Z &n, std::map<Z, int> &out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Z d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace detail

/* prime factorization of |n|, n != 0; primes increasing */
inline std::vector<std::pair<Z, int>> factor(const Z &n0)
{
    if (n0 == 0)
        throw validation_error("factor(0)");
    Z n = abs(n0);
    std::map<Z, int> out;
    for (unsigned long q = 2; q < 1000 && n > 1; ++q)
        while (n % q == 0) {
            ++out[Z(q)];
            n /= q;
        }
    detail::factor_rec(n, out);
    return {out.begin(), out.end()};
}

inline std::vector<Z> prime_divisors(const Z &n)
{
    std::vector<Z> r;
    for (auto &pe : factor(n))
        r.push_back(pe.first);
    return r;
}

inline std::uint64_t to_u64(const Z &a)
{
    if (a < 0 || mpz_sizeinbase(a.get_mpz_t(), 2) > 64)
        throw validation_error("value out of 64-bit range");
    return static_cast<std::uint64_t>(mpz_get_ui(a.get_mpz_t()));
}

} // namespace selorb

#endif
