#ifndef SELORB_PADIC_LATTICE_HPP
#define SELORB_PADIC_LATTICE_HPP

#include <vector>

#include "../exact/integer.hpp"
#include "../exact/matrix.hpp"

namespace selorb {

namespace detail {

using ZVec = std::vector<Z>;

struct ModForm {
    const MatZ &G;
    Z M;
    int N;
    Z bil(const ZVec &x, const ZVec &y) const
    {
        Z s = 0;
        for (int i = 0; i < N; ++i) {
            if (x[i] == 0)
                continue;
            Z t = 0;
            for (int j = 0; j < N; ++j)
                t += G(i, j) * y[j];
            s += x[i] * t;
        }
        return mod(s, M);
    }
    ZVec axpy(const ZVec &x, const Z &a, const ZVec &y) const
    {
        ZVec r(N);
        for (int i = 0; i < N; ++i)
            r[i] = mod(x[i] + a * y[i], M);
        return r;
    }
    ZVec scale(const ZVec &x, const Z &a) const
    {
        ZVec r(N);
        for (int i = 0; i < N; ++i)
            r[i] = mod(a * x[i], M);
        return r;
    }
};

/* pick a maximal subset of vecs independent mod p (greedy) */
inline std::vector<ZVec> independent_mod_p(const std::vector<ZVec> &vecs, const Z &p, size_t want)
{
    std::vector<ZVec> echelon, chosen;
    std::vector<int> piv;
    for (auto &v : vecs) {
        ZVec r(v.size());
        for (size_t i = 0; i < v.size(); ++i)
            r[i] = mod(v[i], p);
        for (size_t t = 0; t < echelon.size(); ++t) {
            Z c = r[piv[t]];
            if (c == 0)
                continue;
            for (size_t i = 0; i < r.size(); ++i)
                r[i] = mod(r[i] - c * echelon[t][i], p);
        }
        int pv = -1;
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i] != 0) {
                pv = static_cast<int>(i);
                break;
            }
        if (pv < 0)
            continue;
        Z inv = mod_div(1, r[pv], p);
        for (auto &x : r)
            x = mod(x * inv, p);
        echelon.push_back(r);
        piv.push_back(pv);
        chosen.push_back(v);
        if (chosen.size() == want)
            break;
    }
    return chosen;
}

/* orthogonal basis of span(S) with unit norms, S unimodular for the form */
inline std::vector<ZVec> diagonalize(const ModForm &F, std::vector<ZVec> S, const Z &p)
{
    std::vector<ZVec> out;
    while (!S.empty()) {
        int piv = -1;
        for (size_t i = 0; i < S.size(); ++i)
            if (mod(F.bil(S[i], S[i]), p) != 0) {
                piv = static_cast<int>(i);
                break;
            }
        if (piv < 0) {
            for (size_t i = 0; i < S.size() && piv < 0; ++i)
                for (size_t j = i + 1; j < S.size(); ++j)
                    if (mod(F.bil(S[i], S[j]), p) != 0) {
                        S[i] = F.axpy(S[i], 1, S[j]);
                        piv = static_cast<int>(i);
                        break;
                    }
            if (piv < 0)
                throw validation_error("lattice_normalize: form is not unimodular");
        }
        ZVec v = S[piv];
        Z q = F.bil(v, v);
        std::vector<ZVec> rest;
        for (size_t i = 0; i < S.size(); ++i)
            if (static_cast<int>(i) != piv)
                rest.push_back(F.axpy(S[i], mod(-mod_div(F.bil(S[i], v), q, F.M), F.M), v));
        out.push_back(v);
        S = std::move(rest);
    }
    return out;
}

} // namespace detail

/* U with U^T G U = A (mod p^k), for G symmetric unimodular over Z_p of odd rank
   whose determinant class matches that of A */
inline MatZ lattice_normalize_odd_p(const MatZ &G, const Z &p, unsigned k)
{
    using namespace detail;
    if (p == 2)
        throw unsupported_error("lattice_normalize_odd_p: p = 2 is not supported");
    require(is_prime(p), "lattice_normalize_odd_p: p must be prime");
    require(k >= 1, "lattice_normalize_odd_p: precision must be positive");
    require(G.rows() == G.cols() && G.is_symmetric(), "lattice_normalize_odd_p: G must be symmetric");
    int N = G.rows();
    require(N % 2 == 1, "lattice_normalize_odd_p: rank must be odd");
    int n = (N - 1) / 2;
    Z d = det_bareiss(G);
    if (mod(d, p) == 0)
        throw validation_error("lattice_normalize_odd_p: det G is not a p-adic unit");
    Z sgn = (n % 2) ? Z(-1) : Z(1);
    if (legendre(mod(sgn * d, p), p) != 1)
        throw validation_error("lattice_normalize_odd_p: determinant class differs from the split form");

    Z M = ipow(p, k);
    ModForm F{G, M, N};
    std::vector<ZVec> S;
    for (int i = 0; i < N; ++i) {
        ZVec e(N, 0);
        e[i] = 1;
        S.push_back(e);
    }
    std::vector<ZVec> vs, ws;
    while (S.size() >= 3) {
        auto D = diagonalize(F, S, p);
        /* isotropic a x^2 + b y^2 + c = 0 mod p in the first three vectors */
        Z a = F.bil(D[0], D[0]), b = F.bil(D[1], D[1]), c = F.bil(D[2], D[2]);
        ZVec v;
        for (Z x = 0; x < p && v.empty(); ++x) {
            Z r = mod(-mod_div(c + a * x * x, b, p), p);
            if (r != 0 && legendre(r, p) != 1)
                continue;
            Z y = r == 0 ? Z(0) : sqrt_mod_p(r, p);
            v = F.axpy(F.axpy(D[2], x, D[0]), y, D[1]);
        }
        if (v.empty())
            throw validation_error("lattice_normalize_odd_p: no isotropic vector");
        /* Newton lift of Q(v) = 0 along a coordinate with unit gradient */
        for (int it = 0; it < 2 * static_cast<int>(k) + 4 && F.bil(v, v) != 0; ++it) {
            int j = -1;
            for (int jj = 0; jj < 3; ++jj)
                if (mod(F.bil(v, D[jj]), p) != 0) {
                    j = jj;
                    break;
                }
            if (j < 0)
                throw validation_error("lattice_normalize_odd_p: singular isotropic vector");
            Z t = mod(-mod_div(F.bil(v, v), 2 * F.bil(v, D[j]), M), M);
            v = F.axpy(v, t, D[j]);
        }
        if (F.bil(v, v) != 0)
            throw precision_error("lattice_normalize_odd_p: Hensel lift failed");
        ZVec w0;
        for (auto &s : S)
            if (mod(F.bil(v, s), p) != 0) {
                w0 = F.scale(s, mod_div(1, F.bil(v, s), M));
                break;
            }
        ZVec w = F.axpy(w0, mod(-mod_div(F.bil(w0, w0), 2, M), M), v);
        vs.push_back(v);
        ws.push_back(w);
        std::vector<ZVec> proj;
        for (auto &s : S) {
            ZVec x = F.axpy(s, mod(-F.bil(s, w), M), v);
            x = F.axpy(x, mod(-F.bil(s, v), M), w);
            proj.push_back(x);
        }
        S = independent_mod_p(proj, p, S.size() - 2);
        if (S.size() != static_cast<size_t>(N) - 2 * vs.size())
            throw validation_error("lattice_normalize_odd_p: complement lost rank");
    }
    ZVec u = S[0];
    Z q = F.bil(u, u);
    if (legendre(mod(q, p), p) != 1)
        throw validation_error("lattice_normalize_odd_p: residual norm is not a square");
    Z r = sqrt_mod_pk(q, p, k);
    u = F.scale(u, mod_div(1, r, M));

    MatZ U(N, N);
    for (int i = 0; i < n; ++i)
        for (int row = 0; row < N; ++row) {
            U(row, i) = vs[i][row];
            U(row, N - 1 - i) = ws[i][row];
        }
    for (int row = 0; row < N; ++row)
        U(row, n) = u[row];
    return U;
}

/* U^T G U = A entrywise mod p^k */
inline bool is_normalized_mod(const MatZ &G, const MatZ &U, const Z &p, unsigned k)
{
    Z M = ipow(p, k);
    MatZ R = U.transpose() * G * U;
    int N = G.rows();
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (mod(R(i, j) - (i + j == N - 1 ? 1 : 0), M) != 0)
                return false;
    return true;
}

} // namespace selorb

#endif
