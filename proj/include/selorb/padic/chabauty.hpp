#ifndef SELORB_PADIC_CHABAUTY_HPP
#define SELORB_PADIC_CHABAUTY_HPP

#include <vector>

#include "../curves/curve.hpp"
#include "../exact/integer.hpp"
#include "../finite/fp_poly.hpp"
#include "../orbit/field.hpp"

namespace selorb {

/* truncated power series over Q, index = exponent */
using Series = std::vector<Q>;

namespace series {

inline Series mul(const Series &a, const Series &b, size_t len)
{
    Series r(len, Q(0));
    for (size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size() && i + j < len; ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

/* 1/a for a[0] != 0 */
inline Series inverse(const Series &a, size_t len)
{
    require(!a.empty() && a[0] != 0, "series inverse: constant term vanishes");
    Series r(len, Q(0));
    r[0] = 1 / a[0];
    for (size_t k = 1; k < len; ++k) {
        Q s = 0;
        for (size_t j = 1; j <= k && j < a.size(); ++j)
            s += a[j] * r[k - j];
        r[k] = -s / a[0];
    }
    return r;
}

inline Series power(const Series &a, long e, size_t len)
{
    Series base = e < 0 ? inverse(a, len) : a;
    base.resize(len, Q(0));
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Series r(len, Q(0));
    r[0] = 1;
    while (k) {
        if (k & 1)
            r = mul(r, base, len);
        base = mul(base, base, len);
        k >>= 1;
    }
    return r;
}

} // namespace series

struct StrassmannResult {
    int bound = 0;         /* zeros of F on p Z_p, counted with multiplicity */
    int refined = 0;       /* one residue level deeper */
    long min_valuation = 0;
};

/* Strassmann bound on p Z_p for F = sum a_i z^i (finite list). Coefficients beyond the list
   are assumed to be those of a formal integral of an integral series, so v(a_j) >= -v_p(j). */
inline StrassmannResult strassmann_zero_count(const Series &F, const Z &p)
{
    require(p >= 2 && is_prime(p), "strassmann: p must be prime");
    long minv = VAL_INF;
    int arg = -1;
    std::vector<long> vals(F.size(), VAL_INF);
    for (size_t i = 0; i < F.size(); ++i) {
        if (F[i] == 0)
            continue;
        vals[i] = valuation(F[i], p) + static_cast<long>(i);
        if (vals[i] <= minv) {
            minv = vals[i];
            arg = static_cast<int>(i);
        }
    }
    if (arg < 0)
        throw precision_error("strassmann: no nonzero coefficient within truncation");
    /* tail: j - floor(log_p j) is nondecreasing, so checking the first missing index suffices */
    long J = static_cast<long>(F.size());
    long lg = 0;
    for (Z t = p; t <= J; t *= p)
        ++lg;
    if (J - lg <= minv)
        throw precision_error("strassmann: truncation too short to certify the bound");
    StrassmannResult r;
    r.bound = arg;
    r.min_valuation = minv;
    if (p > Z(1L << 30))
        return r.refined = r.bound, r;
    PrimeField k(p.get_si());
    fpoly g(F.size(), 0);
    for (size_t i = 0; i < F.size(); ++i)
        if (vals[i] == minv)
            g[i] = k.from(F[i] * qpow(Q(p), static_cast<long>(i) - minv));
    fp::trim(g);
    int refined = 0;
    for (std::int64_t x = 0; x < k.p; ++x) {
        fpoly h = g;
        while (fp::deg(h) >= 1 && fp::eval(h, x, k) == 0) {
            ++refined;
            h = fp::divmod(h, fpoly{k.neg(x % k.p), 1}, k).first;
        }
    }
    r.refined = refined;
    return r;
}

struct OmegaExpansion {
    int n = 1, i = 0;
    Series x;     /* x = z^{-2} (x[0] + x[1] z + ...) */
    Series y;     /* y = z^{-(2n+1)} (y[0] + y[1] z + ...) */
    Series omega; /* -x^i dx / (2y) = (a_0 + a_1 z + ...) dz */
    Series integral; /* a_0 z + a_1 z^2 / 2 + ... */
};

/* expansion at the point at infinity in the parameter z = x^n / y */
inline OmegaExpansion omega_expansion(const HyperCurve &C, int i, int terms)
{
    int n = C.n;
    require(i >= 0 && i < n, "omega_expansion: need 0 <= i < n");
    require(terms >= 1, "omega_expansion: need a positive truncation");
    if (curve_discriminant(C) == 0)
        throw validation_error("omega_expansion: singular curve");
    size_t L = static_cast<size_t>(terms / 2 + 2); /* length in s = z^2 */
    /* u = 1 - sum_k c_k s^k u^{1-k} by fixed-point iteration */
    Series u(L, Q(0));
    u[0] = 1;
    for (size_t it = 0; it < L; ++it) {
        Series nu(L, Q(0));
        nu[0] = 1;
        for (int kk = 2; kk <= 2 * n + 1; ++kk) {
            Q c(C.coef(kk));
            if (c == 0 || static_cast<size_t>(kk) >= L)
                continue;
            Series pw = series::power(u, 1 - kk, L);
            for (size_t j = 0; j + kk < L; ++j)
                nu[j + kk] -= c * pw[j];
        }
        u = nu;
    }
    /* u - s du/ds, times u^{i-n}, shifted by s^{n-1-i} */
    Series d(L, Q(0));
    for (size_t j = 0; j < L; ++j)
        d[j] = u[j] * Q(1 - static_cast<long>(j));
    Series w = series::mul(series::power(u, i - n, L), d, L);
    Series un = series::power(u, n, L);

    OmegaExpansion out;
    out.n = n;
    out.i = i;
    size_t Z_len = static_cast<size_t>(terms);
    out.x.assign(Z_len, Q(0));
    out.y.assign(Z_len, Q(0));
    out.omega.assign(Z_len, Q(0));
    out.integral.assign(Z_len + 1, Q(0));
    for (size_t j = 0; j < L; ++j) {
        if (2 * j < Z_len) {
            out.x[2 * j] = u[j];
            out.y[2 * j] = un[j];
        }
        size_t e = 2 * (j + static_cast<size_t>(n - 1 - i));
        if (e < Z_len)
            out.omega[e] = w[j];
    }
    for (size_t j = 0; j < Z_len; ++j)
        out.integral[j + 1] = out.omega[j] / Q(static_cast<long>(j + 1));
    return out;
}

struct DifferentialBound {
    int i = 0;
    bool unit_condition = false; /* a_0 or a_2 is a 3-adic unit */
    StrassmannResult strassmann;
};

struct ChabautyReport {
    bool applicable = false;
    bool rank_assumption = true; /* the rank hypothesis is an input, never verified */
    int bound = -1;              /* worst Strassmann count over unit-condition differentials */
    int claimed_bound = 3;
    std::vector<DifferentialBound> differentials;
};

inline ChabautyReport chabauty_bound_at_3(const HyperCurve &C, int terms = -1)
{
    ChabautyReport rep;
    if (!mod3_chabauty_filter(C))
        return rep;
    rep.applicable = true;
    if (terms < 0)
        terms = 4 * C.n + 10;
    Z three = 3;
    for (int i = 0; i < C.n; ++i) {
        auto ex = omega_expansion(C, i, terms);
        DifferentialBound db;
        db.i = i;
        auto unit = [&](size_t j) { return j < ex.omega.size() && ex.omega[j] != 0 && valuation(ex.omega[j], three) == 0; };
        db.unit_condition = unit(0) || unit(2);
        db.strassmann = strassmann_zero_count(ex.integral, three);
        if (db.unit_condition)
            rep.bound = std::max(rep.bound, db.strassmann.bound);
        rep.differentials.push_back(db);
    }
    if (rep.bound < 0)
        throw precision_error("chabauty: no differential with a unit among a_0, a_2");
    return rep;
}

} // namespace selorb

#endif
