#ifndef SELORB_PADIC_LOCAL_HPP
#define SELORB_PADIC_LOCAL_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "../exact/integer.hpp"
#include "../exact/poly.hpp"
#include "../exact/resultant.hpp"
#include "../exact/sturm.hpp"
#include "../finite/fp_poly.hpp"
#include "../orbit/field.hpp"

namespace selorb {

/* p^v * u with u a unit known mod p^k; zero has valuation VAL_INF */
struct PadicApprox {
    Z p = 2;
    long val = VAL_INF;
    Z unit = 0;
    unsigned k = 1;

    static PadicApprox from(const Q &a, const Z &p, unsigned k)
    {
        PadicApprox r;
        r.p = p;
        r.k = k;
        if (a == 0)
            return r;
        r.val = valuation(a, p);
        Q u = a / qpow(Q(p), r.val);
        r.unit = mod_q(u, ipow(p, k));
        return r;
    }
    bool is_zero() const { return val == VAL_INF; }
    Z modulus() const { return ipow(p, k); }
    PadicApprox operator*(const PadicApprox &o) const
    {
        PadicApprox r;
        r.p = p;
        r.k = std::min(k, o.k);
        if (is_zero() || o.is_zero())
            return r;
        r.val = val + o.val;
        r.unit = mod(unit * o.unit, r.modulus());
        return r;
    }
    /* a + b loses relative precision when the leading digits cancel */
    PadicApprox operator+(const PadicApprox &o) const
    {
        if (is_zero())
            return o;
        if (o.is_zero())
            return *this;
        long v = std::min(val, o.val);
        long top = std::min(val + long(k), o.val + long(o.k)); /* absolute precision */
        Z M = ipow(p, static_cast<unsigned long>(top - v));
        Z s = mod(unit * ipow(p, static_cast<unsigned long>(val - v)) + o.unit * ipow(p, static_cast<unsigned long>(o.val - v)), M);
        PadicApprox r;
        r.p = p;
        if (s == 0) {
            r.k = 0;
            r.val = top; /* only a lower bound is known */
            return r;
        }
        long extra = valuation(s, p);
        r.val = v + extra;
        r.k = static_cast<unsigned>(top - r.val);
        r.unit = mod(s / ipow(p, static_cast<unsigned long>(extra)), ipow(p, r.k));
        return r;
    }
    bool equals_at(const Q &a, unsigned prec) const
    {
        PadicApprox b = from(a, p, prec);
        if (is_zero() || b.is_zero())
            return is_zero() == b.is_zero();
        if (val != b.val)
            return false;
        unsigned kk = std::min({k, prec, b.k});
        Z M = ipow(p, kk);
        return mod(unit - b.unit, M) == 0;
    }
};

struct NewtonPolygon {
    std::vector<std::pair<int, long>> vertices;
    /* (root valuation, number of roots) per segment, in vertex order */
    std::vector<std::pair<Q, int>> root_valuations() const
    {
        std::vector<std::pair<Q, int>> out;
        for (size_t s = 0; s + 1 < vertices.size(); ++s) {
            int len = vertices[s + 1].first - vertices[s].first;
            Q slope(vertices[s + 1].second - vertices[s].second, len);
            slope.canonicalize();
            out.push_back({-slope, len});
        }
        return out;
    }
};

/* lower convex hull of (i, v_p(a_i)) over the nonzero coefficients */
inline NewtonPolygon newton_polygon(const PolyZ &f, const Z &p)
{
    require(!f.is_zero(), "newton_polygon: zero polynomial");
    std::vector<std::pair<int, long>> pts;
    for (int i = 0; i <= f.deg(); ++i)
        if (f[i] != 0)
            pts.push_back({i, valuation(f[i], p)});
    NewtonPolygon np;
    auto &h = np.vertices;
    for (auto &q : pts) {
        while (h.size() >= 2) {
            auto &a = h[h.size() - 2];
            auto &b = h.back();
            /* drop b if it lies on or above the segment a-q */
            long lhs = (b.second - a.second) * (q.first - a.first);
            long rhs = (q.second - a.second) * (b.first - a.first);
            if (lhs >= rhs)
                h.pop_back();
            else
                break;
        }
        h.push_back(q);
    }
    return np;
}

struct FactorShape {
    std::vector<int> degrees;      /* sorted */
    std::vector<int> ramification; /* aligned with degrees */
    int m() const { return static_cast<int>(degrees.size()) - 1; }
    bool unramified() const
    {
        return std::all_of(ramification.begin(), ramification.end(), [](int e) { return e == 1; });
    }
};

namespace detail {

inline PolyZ primitive_part(const PolyZ &g)
{
    Z c = content(g);
    if (c == 0 || c == 1)
        return g;
    std::vector<Z> v = g.coeffs();
    for (auto &x : v)
        x /= c;
    return PolyZ(std::move(v));
}

/* factors of g over Q_p whose roots have valuation > lo (lo = 0 or -1 for all);
   appends (degree, ramification) pairs */
inline void shape_rec(PolyZ g, const Z &p, const PrimeField &k, bool all_roots, int depth,
                      std::vector<std::pair<int, int>> &out)
{
    if (depth > 64)
        throw unsupported_error("factor_shape: recursion too deep");
    g = primitive_part(g);
    /* exact zero roots */
    int z = 0;
    while (z <= g.deg() && g[z] == 0)
        ++z;
    if (z > 1)
        throw validation_error("factor_shape: polynomial is not separable");
    if (z == 1) {
        out.push_back({1, 1});
        std::vector<Z> v(g.coeffs().begin() + 1, g.coeffs().end());
        g = PolyZ(std::move(v));
    }
    if (g.deg() <= 0)
        return;
    NewtonPolygon np = newton_polygon(g, p);
    auto &V = np.vertices;
    for (size_t s = 0; s + 1 < V.size(); ++s) {
        int i0 = V[s].first, i1 = V[s + 1].first;
        long v0 = V[s].second, v1 = V[s + 1].second;
        long num = v0 - v1; /* root valuation = num / len */
        int len = i1 - i0;
        if (num < 0 || (num == 0 && !all_roots))
            continue;
        long gg = std::gcd(num, static_cast<long>(len));
        long h = num / gg;
        int e = static_cast<int>(len / gg);
        /* residual polynomial on the lattice points of the segment */
        int rdeg = len / e;
        fpoly R(rdeg + 1, 0);
        for (int j = 0; j <= rdeg; ++j) {
            int i = i0 + j * e;
            if (g[i] == 0)
                continue;
            long want = v0 - j * h;
            long have = valuation(g[i], p);
            if (have == want)
                R[j] = k.from(Z(g[i] / ipow(p, static_cast<unsigned long>(want))));
        }
        fp::trim(R);
        for (auto &fe : fp::factor(R, k)) {
            int d = fp::deg(fe.g);
            if (fe.mult == 1) {
                out.push_back({e * d, e});
                continue;
            }
            if (e != 1 || d != 1)
                throw unsupported_error("factor_shape: ramification beyond the supported depth");
            /* repeated residual root c: recentre on p^h (c + x) */
            std::int64_t c = fe.g[0] ? k.p - fe.g[0] : 0;
            PolyZ t = PolyZ(std::vector<Z>{ipow(p, static_cast<unsigned long>(h)) * Z(static_cast<long>(c)),
                                           ipow(p, static_cast<unsigned long>(h))});
            shape_rec(g.compose(t), p, k, false, depth + 1, out);
        }
    }
}

} // namespace detail

/* degrees of the irreducible factors of a separable f over Q_p.
   The computation is exact over Z; prec is validated against the Hensel bound. */
inline FactorShape factor_shape(const PolyZ &f, const Z &p, long prec = -1)
{
    require(f.deg() >= 1 && f.is_monic(), "factor_shape: f must be monic of positive degree");
    require(is_prime(p), "factor_shape: p must be prime");
    Z d = discriminant(f);
    if (d == 0)
        throw validation_error("factor_shape: f is not separable");
    long v = valuation(d, p);
    if (v > 20)
        throw unsupported_error("factor_shape: v_p(disc) exceeds the supported bound 20");
    if (prec >= 0 && prec < 2 * v + 1)
        throw precision_error("factor_shape: precision below 2 v_p(disc) + 1");
    if (p > Z(1L << 30))
        throw unsupported_error("factor_shape: prime too large");
    PrimeField k(p.get_si());
    std::vector<std::pair<int, int>> parts;
    detail::shape_rec(f, p, k, true, 0, parts);
    std::sort(parts.begin(), parts.end());
    FactorShape s;
    int total = 0;
    for (auto &[deg, e] : parts) {
        s.degrees.push_back(deg);
        s.ramification.push_back(e);
        total += deg;
    }
    if (total != f.deg())
        throw unsupported_error("factor_shape: degree bookkeeping failed");
    return s;
}

inline long default_precision(const PolyZ &f, const Z &p) { return 2 * valuation(discriminant(f), p) + 10; }

inline Z j2_local_order(const PolyZ &f, const Z &p) { return ipow(2, factor_shape(f, p).m()); }

inline Z jmod2j_local_order(const PolyZ &f, const Z &p, int n)
{
    int m = factor_shape(f, p).m();
    return ipow(2, p == 2 ? n + m : m);
}

inline Z local_unit_h1_order(const PolyZ &f, const Z &p)
{
    auto s = factor_shape(f, p);
    int n = (f.deg() - 1) / 2;
    if (p != 2)
        return ipow(2, 2 * s.m());
    if (!s.unramified())
        throw unsupported_error("local_unit_h1_order: ramified input at p = 2");
    return ipow(2, 2 * s.m() + 2 * n);
}

inline Z local_orbit_count(int m)
{
    require(m >= 0, "local_orbit_count: m must be non-negative");
    if (m == 0)
        return 1;
    return ipow(2, 2 * m - 1) + ipow(2, m - 1);
}

/* rho_v = #J(Q_v)/2J(Q_v) divided by #J[2](Q_v); place 0 stands for the real place */
struct LocalMass {
    Z place;
    int m = 0;
    Q rho;
};

inline LocalMass local_mass(const PolyZ &f, const Z &place)
{
    int n = (f.deg() - 1) / 2;
    LocalMass r;
    r.place = place;
    if (place == 0) {
        r.m = (sturm_real_root_count(f) - 1) / 2;
        /* J(R)/2J(R) has order 2^{m-n}, J[2](R) has order 2^m */
        r.rho = Q(1, ipow(2, n));
        r.rho.canonicalize();
        return r;
    }
    r.m = factor_shape(f, place).m();
    r.rho = Q(jmod2j_local_order(f, place, n), ipow(2, r.m));
    r.rho.canonicalize();
    return r;
}

/* infinity, 2 and the odd primes dividing the discriminant */
inline std::vector<LocalMass> local_mass_table(const PolyZ &f)
{
    std::vector<LocalMass> out;
    out.push_back(local_mass(f, 0));
    out.push_back(local_mass(f, 2));
    for (auto &q : prime_divisors(abs(discriminant(f))))
        if (q != 2)
            out.push_back(local_mass(f, q));
    return out;
}

} // namespace selorb

#endif
