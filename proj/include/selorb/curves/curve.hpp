#ifndef SELORB_CURVES_CURVE_HPP
#define SELORB_CURVES_CURVE_HPP

#include <numeric>
#include <utility>
#include <vector>

#include "../exact/parallel.hpp"
#include "../exact/resultant.hpp"

namespace selorb {

/* y^2 = x^{2n+1} + c_2 x^{2n-1} + ... + c_{2n+1}; c[k] holds c_{k+2}. */
struct HyperCurve {
    int n = 1;
    std::vector<Z> c;

    HyperCurve() = default;
    HyperCurve(int n_, std::vector<Z> c_) : n(n_), c(std::move(c_))
    {
        require(n >= 1, "genus must be positive");
        require(static_cast<int>(c.size()) == 2 * n, "curve needs exactly 2n coefficients");
    }

    PolyZ f() const { return curve_poly(c); }
    /* c_m for 2 <= m <= 2n+1 */
    const Z &coef(int m) const { return c[m - 2]; }

    friend bool operator==(const HyperCurve &a, const HyperCurve &b) { return a.n == b.n && a.c == b.c; }
    friend bool operator<(const HyperCurve &a, const HyperCurve &b)
    {
        if (a.n != b.n)
            return a.n < b.n;
        return a.c < b.c;
    }
};

inline std::pair<std::vector<Z>, Z> normalize_indivisible(const std::vector<Z> &c)
{
    Z g = 0;
    for (auto &v : c)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 0)
        throw validation_error("normalize_indivisible: all coefficients zero");
    Z u = 1;
    if (g > 1)
        for (auto &pe : factor(g)) {
            long e = VAL_INF;
            for (size_t k = 0; k < c.size(); ++k) {
                if (c[k] == 0)
                    continue;
                long m = static_cast<long>(k) + 2;
                e = std::min(e, valuation(c[k], pe.first) / (2 * m));
            }
            if (e > 0)
                u *= ipow(pe.first, e);
        }
    std::vector<Z> out = c;
    for (size_t k = 0; k < out.size(); ++k)
        out[k] /= ipow(u, 2 * (k + 2));
    return {out, u};
}

inline bool is_indivisible(const std::vector<Z> &c)
{
    Z g = 0;
    for (auto &v : c)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 0)
        return false;
    if (g == 1)
        return true;
    /* u^4 | c_2 etc. forces u^4 | g; cheap rejection when g is 4th-power free */
    return normalize_indivisible(c).second == 1;
}

/* H = base^{N/k} with N = 2n(2n+1); compared exactly via integer powers */
struct Height {
    int n = 1;
    Z base = 0;
    int k = 2;

    long N() const { return 2L * n * (2 * n + 1); }

    /* smallest e making every exponent N e / k integral */
    static long pow_needed(int n)
    {
        long N = 2L * n * (2 * n + 1), e = 1;
        for (long k = 2; k <= 2 * n + 1; ++k)
            e = std::lcm(e, k / std::gcd(k, N));
        return e;
    }
    /* H^{pow_needed(n)} as an exact integer */
    Z power_value() const { return ipow(base, N() * pow_needed(n) / k); }

    friend int compare(const Height &a, const Height &b)
    {
        /* a.base^{Na/ka} vs b.base^{Nb/kb}; raise both to ka*kb*... via common exponent */
        long ea = a.N() * b.k, eb = b.N() * a.k;
        long g = std::gcd(ea, eb);
        Z l = ipow(a.base, ea / g), r = ipow(b.base, eb / g);
        return l < r ? -1 : (l > r ? 1 : 0);
    }
};

inline Height curve_height(const HyperCurve &C)
{
    Height best{C.n, 0, 2};
    for (int m = 2; m <= 2 * C.n + 1; ++m) {
        Height h{C.n, abs(C.coef(m)), m};
        if (compare(h, best) > 0)
            best = h;
    }
    return best;
}

/* H(C) < X, i.e. |c_k|^{2n(2n+1)} < X^k for every k */
inline bool height_below(const HyperCurve &C, const Z &X)
{
    long N = 2L * C.n * (2 * C.n + 1);
    for (int m = 2; m <= 2 * C.n + 1; ++m)
        if (ipow(abs(C.coef(m)), N) >= ipow(X, m))
            return false;
    return true;
}

inline Z curve_discriminant(const HyperCurve &C)
{
    return ipow(Z(4), 2 * C.n) * discriminant(C.f());
}

/* largest b >= 0 with b^N < X^k */
inline Z coefficient_bound(int n, const Z &X, int k)
{
    if (X <= 0)
        return -1;
    long N = 2L * n * (2 * n + 1);
    return iroot(ipow(X, k) - 1, N);
}

namespace detail {

inline void enum_tail(int n, const std::vector<Z> &bounds, std::vector<Z> &cur, size_t pos,
                      std::vector<HyperCurve> &out)
{
    if (pos == cur.size()) {
        if (!is_indivisible(cur))
            return;
        if (discriminant(curve_poly(cur)) == 0)
            return;
        out.emplace_back(n, cur);
        return;
    }
    for (Z v = -bounds[pos]; v <= bounds[pos]; ++v) {
        cur[pos] = v;
        enum_tail(n, bounds, cur, pos + 1, out);
    }
}

} // namespace detail

/* All curves with indivisible coefficients, nonzero discriminant and H < X,
   lexicographic in (c_2, ..., c_{2n+1}). The c_2 range is split across workers. */
inline std::vector<HyperCurve> enumerate_curves(int n, const Z &X, unsigned workers = 1)
{
    require(n >= 1, "genus must be positive");
    require(X >= 1, "height bound must be >= 1");
    std::vector<Z> bounds;
    for (int m = 2; m <= 2 * n + 1; ++m)
        bounds.push_back(coefficient_bound(n, X, m));
    long b2 = bounds[0].get_si();
    size_t chunks = static_cast<size_t>(2 * b2 + 1);
    auto parts = run_chunks(chunks, workers, [&](size_t i) {
        std::vector<HyperCurve> out;
        std::vector<Z> cur(bounds.size());
        cur[0] = Z(static_cast<long>(i) - b2);
        detail::enum_tail(n, bounds, cur, 1, out);
        return out;
    });
    std::vector<HyperCurve> all;
    for (auto &p : parts)
        all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return all;
}

inline bool mod3_chabauty_filter(const HyperCurve &C)
{
    if (curve_discriminant(C) % 3 == 0)
        return false;
    PolyZ f = C.f();
    for (int x : {0, 1, -1})
        if (mod(f.eval(Z(x)), 3) != 2)
            return false;
    return true;
}

} // namespace selorb

#endif
