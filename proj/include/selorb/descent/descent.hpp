#ifndef SELORB_DESCENT_DESCENT_HPP
#define SELORB_DESCENT_DESCENT_HPP

#include <functional>
#include <utility>
#include <vector>

#include "../curves/curve.hpp"
#include "../exact/hnf.hpp"
#include "../exact/matrix.hpp"
#include "../exact/poly.hpp"
#include "../exact/resultant.hpp"
#include "../orbit/field.hpp"
#include "../orbit/rep.hpp"
#include "../padic/lattice.hpp"

namespace selorb {

/* D = sum (a_i, b_i) - m O, as (P, R) with R^2 = f mod P */
struct MumfordDivisor {
    PolyZ P{Z(1)};
    PolyQ R;
    int m = 0;
    std::vector<std::pair<Z, Z>> points;

    bool r_integral() const { return is_integral(R); }
};

inline MumfordDivisor mumford_from_points(const std::vector<std::pair<Z, Z>> &pts, const PolyZ &f)
{
    int n = (f.deg() - 1) / 2;
    require(f.is_monic() && f.deg() % 2 == 1, "mumford_from_points: f must be monic of odd degree");
    /* m <= n is the reduced case; up to 2n points still give deg P < deg f */
    if (static_cast<int>(pts.size()) > 2 * n)
        throw validation_error("mumford_from_points: more than 2n points");
    MumfordDivisor D;
    D.m = static_cast<int>(pts.size());
    D.points = pts;
    for (size_t i = 0; i < pts.size(); ++i) {
        auto &[a, b] = pts[i];
        if (b * b != f.eval(a))
            throw validation_error("mumford_from_points: point (" + str(a) + "," + str(b) + ") is not on the curve");
        if (b == 0)
            throw unsupported_error("mumford_from_points: Weierstrass points are not supported");
        for (size_t j = 0; j < i; ++j)
            if (pts[j].first == a)
                throw validation_error("mumford_from_points: repeated x-coordinate");
    }
    /* P = prod (x - a_i); R by Lagrange interpolation */
    PolyZ P(Z(1));
    for (auto &pt : pts)
        P = P * PolyZ(std::vector<Z>{-pt.first, Z(1)});
    PolyQ R;
    for (size_t i = 0; i < pts.size(); ++i) {
        PolyQ li(Q(1));
        Q den = 1;
        for (size_t j = 0; j < pts.size(); ++j)
            if (j != i) {
                li = li * PolyQ(std::vector<Q>{Q(-pts[j].first), Q(1)});
                den *= Q(pts[i].first - pts[j].first);
            }
        R = R + (Q(pts[i].second) / den) * li;
    }
    D.P = P;
    D.R = R;
    if (!((R * R - to_Q(f)) % to_Q(P)).is_zero())
        throw validation_error("mumford_from_points: R^2 - f is not divisible by P");
    return D;
}

/* element of L = Q[x]/(f), reduced */
struct AlphaClass {
    PolyQ alpha;
    Q norm;
};

inline PolyQ l_mul(const PolyQ &a, const PolyQ &b, const PolyQ &f) { return (a * b) % f; }

inline PolyQ l_inverse(const PolyQ &a, const PolyQ &f)
{
    auto [g, s, t] = xgcd(a % f, f);
    (void)t;
    if (g.deg() != 0)
        throw validation_error("element of L is not invertible");
    return s % f;
}

/* N_{L/Q}(a) = Res(f, a) for monic f */
inline Q l_norm(const PolyQ &a, const PolyQ &f) { return resultant(f, a); }

inline AlphaClass delta_class(const MumfordDivisor &D, const PolyZ &f)
{
    PolyQ fq = to_Q(f);
    PolyQ a = to_Q(D.P);
    if (D.m % 2)
        a = Q(-1) * a;
    AlphaClass r;
    r.alpha = a % fq;
    r.norm = l_norm(r.alpha, fq);
    Q expect = 1;
    for (auto &pt : D.points)
        expect *= Q(pt.second * pt.second);
    if (r.norm != expect)
        throw validation_error("delta_class: norm identity failed");
    return r;
}

/* Z-lattice in L given by HNF rows in the power basis 1, beta, ..., beta^{2n} */
struct IdealLattice {
    MatZ basis;
    Z index = 1; /* [Z[beta] : I], a positive integer */
};

inline std::vector<Z> coords(const PolyZ &a, int N)
{
    std::vector<Z> v(N, Z(0));
    for (int i = 0; i <= a.deg() && i < N; ++i)
        v[i] = a[i];
    return v;
}

inline PolyZ row_poly(const MatZ &H, int r)
{
    std::vector<Z> v(H.cols());
    for (int j = 0; j < H.cols(); ++j)
        v[j] = H(r, j);
    return PolyZ(std::move(v));
}

inline bool beta_stable(const MatZ &H, const PolyZ &f)
{
    for (int r = 0; r < H.rows(); ++r) {
        PolyZ b = (row_poly(H, r) * PolyZ::x()) % f;
        if (!hnf_coordinates(H, coords(b, H.cols())))
            return false;
    }
    return true;
}

inline IdealLattice ideal_from_divisor(const MumfordDivisor &D, const PolyZ &f)
{
    if (!D.r_integral())
        throw unsupported_error("ideal_from_divisor: non-integral Mumford R");
    int N = f.deg();
    PolyZ R = to_Z(D.R);
    MatZ gens(2 * N, N);
    PolyZ bp = PolyZ(Z(1));
    for (int j = 0; j < N; ++j) {
        auto a = coords((bp * D.P) % f, N);
        auto b = coords((bp * R) % f, N);
        for (int c = 0; c < N; ++c) {
            gens(2 * j, c) = a[c];
            gens(2 * j + 1, c) = b[c];
        }
        bp = bp * PolyZ::x();
    }
    IdealLattice I;
    I.basis = hnf_rows(gens);
    for (int i = 0; i < N; ++i)
        I.index *= I.basis(i, i);
    if (!beta_stable(I.basis, f))
        throw validation_error("ideal_from_divisor: lattice is not a Z[beta]-module");
    Z prod = 1;
    for (auto &pt : D.points)
        prod *= abs(pt.second);
    if (I.index != prod)
        throw validation_error("ideal_from_divisor: N(I_D) differs from |b_1...b_m|");
    return I;
}

struct GramPair {
    MatZ G;
    MatZ M;
    Z norm_ideal;
    Q norm_alpha;
    bool containment = false;
    bool norm_ok = false;
    bool symmetric = false;
    bool unimodular = false;
    bool charpoly_ok = false;
    bool certificate() const { return containment && norm_ok && symmetric && unimodular && charpoly_ok; }
};

/* all basis products alpha^{-1} l_i l_j lie in Z[beta] */
inline bool square_in_alpha_R(const MatZ &H, const PolyQ &alpha_inv, const PolyQ &fq)
{
    int N = H.rows();
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            PolyQ prod = l_mul(l_mul(to_Q(row_poly(H, i)), to_Q(row_poly(H, j)), fq), alpha_inv, fq);
            if (!is_integral(prod))
                return false;
        }
    return true;
}

inline GramPair gram_pair(const IdealLattice &I, const AlphaClass &a, const PolyZ &f)
{
    int N = f.deg();
    PolyQ fq = to_Q(f);
    PolyQ ainv = l_inverse(a.alpha, fq);
    GramPair g;
    g.norm_ideal = I.index;
    g.norm_alpha = a.norm;
    g.containment = square_in_alpha_R(I.basis, ainv, fq);
    g.norm_ok = Q(I.index * I.index) == a.norm;
    if (!g.containment)
        throw validation_error("gram_pair: I^2 is not contained in alpha R");
    if (!g.norm_ok)
        throw validation_error("gram_pair: N(I)^2 differs from N(alpha)");
    g.G = MatZ(N, N);
    g.M = MatZ(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            PolyQ prod = l_mul(l_mul(to_Q(row_poly(I.basis, i)), to_Q(row_poly(I.basis, j)), fq), ainv, fq);
            g.G(i, j) = to_Z(PolyQ(prod[N - 1]))[0];
        }
    for (int j = 0; j < N; ++j) {
        PolyZ b = (row_poly(I.basis, j) * PolyZ::x()) % f;
        auto x = hnf_coordinates(I.basis, coords(b, N));
        if (!x)
            throw validation_error("gram_pair: lattice is not beta-stable");
        for (int i = 0; i < N; ++i)
            g.M(i, j) = (*x)[i];
    }
    MatZ GM = g.G * g.M;
    g.symmetric = g.G.is_symmetric() && GM.is_symmetric() && g.M.trace() == 0;
    g.unimodular = abs(det_bareiss(g.G)) == 1;
    g.charpoly_ok = charpoly(to_Q(g.M)) == fq;
    return g;
}

struct ZpOrbit {
    Z p;
    unsigned k = 1;
    OperatorRep B; /* entries in [0, p^k) */
    GramPair pair;
    bool invariants_ok = false;
    bool symmetric = false;
};

/* B = U^T (G M) U mod p^k where U^T G U = A, so that A B = U^{-1} M U */
inline ZpOrbit integral_orbit_zp(const HyperCurve &C, const MumfordDivisor &D, const Z &p, unsigned k)
{
    if (p == 2)
        throw unsupported_error("integral_orbit_zp: p = 2 is not supported");
    PolyZ f = C.f();
    auto I = ideal_from_divisor(D, f);
    auto a = delta_class(D, f);
    ZpOrbit out;
    out.p = p;
    out.k = k;
    out.pair = gram_pair(I, a, f);
    MatZ U = lattice_normalize_odd_p(out.pair.G, p, k);
    Z Mk = ipow(p, k);
    MatZ B = U.transpose() * (out.pair.G * out.pair.M) * U;
    for (int i = 0; i < B.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j)
            B(i, j) = mod(B(i, j), Mk);
    out.B = OperatorRep(C.n, B);
    out.symmetric = B.is_symmetric() && mod(B.anti_trace(), Mk) == 0;
    auto inv = invariants(out.B);
    out.invariants_ok = true;
    for (int i = 0; i < 2 * C.n; ++i)
        if (mod(inv[i] - C.c[i], Mk) != 0)
            out.invariants_ok = false;
    return out;
}

struct IdealCensusEntry {
    MatZ J;        /* p^e I, an HNF sublattice of Z[beta] */
    int stabilizer = 1;
};

struct IdealCensus {
    Z p;
    int e = 0;
    long t = 0;
    std::uint64_t candidates = 0;
    std::vector<IdealCensusEntry> ideals;
    Q weight; /* sum of 1 / #stabilizer */
    std::size_t count() const { return ideals.size(); }
};

namespace detail {

/* Frobenius-fixed dimension of End(J)/p, i.e. the number of local factors */
inline int local_factor_count(const MatZ &J, const PolyZ &f, const Z &p)
{
    int N = f.deg();
    PolyQ fq = to_Q(f);
    MatQ Hinv = inverse(to_Q(J));
    /* rows of K: x -> coordinates of x * l_j in the J basis, over all j */
    std::vector<std::vector<Q>> krows;
    for (int j = 0; j < N; ++j) {
        PolyQ lj = to_Q(row_poly(J, j));
        MatQ mult(N, N); /* column c: coords of beta^c * l_j in power basis */
        PolyQ bc(Q(1));
        for (int c = 0; c < N; ++c) {
            PolyQ pr = l_mul(bc, lj, fq);
            for (int r = 0; r < N; ++r)
                mult(r, c) = pr[r];
            bc = l_mul(bc, PolyQ::x(), fq);
        }
        /* row vector coords = powercoords * Hinv, so coordinates matrix = Hinv^T * mult */
        MatQ K = Hinv.transpose() * mult;
        for (int r = 0; r < N; ++r) {
            std::vector<Q> row(N);
            for (int c = 0; c < N; ++c)
                row[c] = K(r, c);
            krows.push_back(row);
        }
    }
    Z den = 1;
    for (auto &r : krows)
        for (auto &q : r)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    MatZ KZ(static_cast<int>(krows.size()), N);
    for (size_t r = 0; r < krows.size(); ++r)
        for (int c = 0; c < N; ++c)
            KZ(static_cast<int>(r), c) = Z(krows[r][c] * Q(den));
    MatZ H = hnf_rows(KZ);
    /* End = {x : (H/den) x integral} = den * H^{-1} Z^N; basis in the columns */
    MatQ E = Q(den) * inverse(to_Q(H));
    MatQ Einv = inverse(E);
    std::vector<PolyQ> eb(N);
    for (int c = 0; c < N; ++c) {
        std::vector<Q> v(N);
        for (int r = 0; r < N; ++r)
            v[r] = E(r, c);
        eb[c] = PolyQ(v);
    }
    PrimeField k(p.get_si());
    auto to_coords = [&](const PolyQ &x) {
        std::vector<std::int64_t> out(N);
        for (int r = 0; r < N; ++r) {
            Q s = 0;
            for (int c = 0; c < N; ++c)
                s += Einv(r, c) * x[c];
            out[r] = k.from(s);
        }
        return out;
    };
    /* multiplication table of End/p */
    std::vector<std::vector<std::vector<std::int64_t>>> tab(N, std::vector<std::vector<std::int64_t>>(N));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            tab[a][b] = to_coords(l_mul(eb[a], eb[b], fq));
    auto mulv = [&](const std::vector<std::int64_t> &x, const std::vector<std::int64_t> &y) {
        std::vector<std::int64_t> r(N, 0);
        for (int a = 0; a < N; ++a) {
            if (!x[a])
                continue;
            for (int b = 0; b < N; ++b) {
                if (!y[b])
                    continue;
                std::int64_t s = k.mul(x[a], y[b]);
                for (int c = 0; c < N; ++c)
                    r[c] = k.add(r[c], k.mul(s, tab[a][b][c]));
            }
        }
        return r;
    };
    MatQ Phi(N, N);
    for (int a = 0; a < N; ++a) {
        std::vector<std::int64_t> x(N, 0), acc(N, 0);
        x[a] = 1;
        /* x^p by square and multiply */
        std::vector<std::int64_t> one = to_coords(PolyQ(Q(1)));
        acc = one;
        std::int64_t e = k.p;
        std::vector<std::int64_t> b = x;
        while (e) {
            if (e & 1)
                acc = mulv(acc, b);
            b = mulv(b, b);
            e >>= 1;
        }
        for (int r = 0; r < N; ++r)
            Phi(r, a) = Q(acc[r] - (r == a ? 1 : 0));
    }
    /* rank over F_p */
    int rank = 0;
    std::vector<std::vector<std::int64_t>> m(N, std::vector<std::int64_t>(N));
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c)
            m[r][c] = k.from(Phi(r, c));
    for (int c = 0; c < N && rank < N; ++c) {
        int piv = -1;
        for (int r = rank; r < N; ++r)
            if (m[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[piv], m[rank]);
        std::int64_t inv = k.inv(m[rank][c]);
        for (int r = 0; r < N; ++r)
            if (r != rank && m[r][c]) {
                std::int64_t u = k.mul(m[r][c], inv);
                for (int cc = 0; cc < N; ++cc)
                    m[r][cc] = k.sub(m[r][cc], k.mul(u, m[rank][cc]));
            }
        ++rank;
    }
    return N - rank;
}

inline void enumerate_hnf(int N, const Z &p, int T, std::vector<int> &d, int col,
                          const std::function<void(const std::vector<int> &)> &fn)
{
    if (col == N) {
        if (T == 0)
            fn(d);
        return;
    }
    for (int v = 0; v <= T; ++v) {
        d[col] = v;
        enumerate_hnf(N, p, T - v, d, col + 1, fn);
    }
}

} // namespace detail

/* m_p(alpha): ideals I of Z_p[beta] (up to nothing: actual lattices) with I^2 in alpha R
   and N(I)^2 = N(alpha) up to unit squares; e bounds the denominators of I */
inline IdealCensus local_ideal_census(const PolyZ &f, const AlphaClass &a0, const Z &p, int e = -1,
                                      std::uint64_t cap = 20000000)
{
    if (p == 2)
        throw unsupported_error("local_ideal_census: p = 2 is not supported");
    require(is_prime(p), "local_ideal_census: p must be prime");
    int N = f.deg();
    PolyQ fq = to_Q(f);
    Z d = discriminant(f);
    require(d != 0, "local_ideal_census: f must be separable");
    long vd = valuation(d, p);
    int c = static_cast<int>(vd / 2);
    if (e < 0)
        e = c;
    if (e < c)
        throw validation_error("local_ideal_census: index bound below floor(v_p(disc)/2)");
    require(a0.norm != 0, "local_ideal_census: alpha must be invertible");

    /* make alpha p-integral by an even power of p (I scales by the half power) */
    AlphaClass a = a0;
    long s = 0;
    for (int i = 0; i <= a.alpha.deg(); ++i)
        if (a.alpha[i] != 0)
            s = std::max(s, -valuation(a.alpha[i], p));
    s = (s + 1) / 2;
    a.alpha = qpow(Q(p), 2 * s) * a.alpha;
    a.norm = a.norm * qpow(Q(p), 2 * s * N);

    IdealCensus out;
    out.p = p;
    out.e = e;
    long vn = valuation(a.norm, p);
    if (vn % 2) {
        out.t = vn;
        return out; /* no ideal has the right norm */
    }
    out.t = vn / 2;
    Q unit = a.norm / qpow(Q(p), vn);
    if (legendre(mod_q(unit, p), p) != 1)
        return out; /* norm class is not a unit square */
    long T = static_cast<long>(e) * N + out.t;
    if (T < 0)
        return out;

    PolyQ ainv = l_inverse(a.alpha, fq);
    PolyQ scaled_inv = qpow(Q(p), -2 * e) * ainv; /* J^2 in p^{2e} alpha R */
    /* p-integrality of the products is what matters locally */
    auto p_integral = [&](const PolyQ &x) {
        for (int i = 0; i <= x.deg(); ++i)
            if (x[i] != 0 && valuation(x[i], p) < 0)
                return false;
        return true;
    };
    std::vector<int> dv(N, 0);
    std::vector<Z> pw(T + 1);
    for (long i = 0; i <= T; ++i)
        pw[i] = ipow(p, static_cast<unsigned long>(i));
    out.weight = 0;
    detail::enumerate_hnf(N, p, static_cast<int>(T), dv, 0, [&](const std::vector<int> &dd) {
        /* free entries: (i, j) with i < j, range p^{d_j} */
        std::vector<std::pair<int, int>> freec;
        Z combos = 1;
        for (int j = 0; j < N; ++j)
            for (int i = 0; i < j; ++i)
                if (dd[j] > 0) {
                    freec.push_back({i, j});
                    combos *= pw[dd[j]];
                }
        out.candidates += to_u64(combos);
        if (out.candidates > cap)
            throw infeasible_error("local_ideal_census: sublattice enumeration exceeds the cap");
        MatZ H(N, N);
        for (int i = 0; i < N; ++i)
            H(i, i) = pw[dd[i]];
        std::vector<Z> digit(freec.size(), Z(0));
        for (;;) {
            for (size_t t = 0; t < freec.size(); ++t)
                H(freec[t].first, freec[t].second) = digit[t];
            if (beta_stable(H, f)) {
                bool ok = true;
                for (int i = 0; i < N && ok; ++i)
                    for (int j = i; j < N && ok; ++j)
                        ok = p_integral(l_mul(l_mul(to_Q(row_poly(H, i)), to_Q(row_poly(H, j)), fq), scaled_inv, fq));
                if (ok) {
                    IdealCensusEntry en;
                    en.J = H;
                    int r = detail::local_factor_count(H, f, p);
                    en.stabilizer = 1 << (r - 1);
                    out.weight += Q(1, en.stabilizer);
                    out.ideals.push_back(en);
                }
            }
            size_t t = 0;
            for (; t < digit.size(); ++t) {
                digit[t] += 1;
                if (digit[t] < pw[dd[freec[t].second]])
                    break;
                digit[t] = 0;
            }
            if (t == digit.size())
                break;
        }
    });
    out.weight.canonicalize();
    return out;
}

} // namespace selorb

#endif
