#ifndef SELORB_EXACT_HNF_HPP
#define SELORB_EXACT_HNF_HPP

#include <optional>
#include <vector>

#include "matrix.hpp"

namespace selorb {

/* Lattice (1/denominator) * rowspan(basis) inside Q^n. */
struct LatticeBasis {
    MatZ basis;
    Z denominator = 1;
};

/* Row-style HNF of a generating set of full column rank: upper triangular,
   positive diagonal, entries above a pivot reduced into [0, pivot). */
inline MatZ hnf_rows(MatZ m)
{
    int R = m.rows(), C = m.cols();
    int k = 0;
    for (int c = 0; c < C; ++c) {
        if (k >= R)
            throw validation_error("hermite_normal_form: singular basis");
        for (int i = k + 1; i < R; ++i) {
            if (m(i, c) == 0)
                continue;
            Z a = m(k, c), b = m(i, c), g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Z ag = a / g, bg = b / g;
            for (int j = c; j < C; ++j) {
                Z rk = m(k, j), ri = m(i, j);
                m(k, j) = s * rk + t * ri;
                m(i, j) = ag * ri - bg * rk;
            }
        }
        if (m(k, c) == 0) {
            /* column already empty below k: look for a pivot further down */
            throw validation_error("hermite_normal_form: singular basis");
        }
        if (m(k, c) < 0)
            for (int j = c; j < C; ++j)
                m(k, j) = -m(k, j);
        for (int i = 0; i < k; ++i) {
            Z q;
            mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(k, c).get_mpz_t());
            if (q != 0)
                for (int j = c; j < C; ++j)
                    m(i, j) -= q * m(k, j);
        }
        ++k;
    }
    for (int i = k; i < R; ++i)
        for (int j = 0; j < C; ++j)
            if (m(i, j) != 0)
                throw validation_error("hermite_normal_form: inconsistent reduction");
    MatZ h(C, C);
    for (int i = 0; i < C; ++i)
        for (int j = 0; j < C; ++j)
            h(i, j) = m(i, j);
    return h;
}

inline LatticeBasis hermite_normal_form(const LatticeBasis &L)
{
    require(L.denominator > 0, "lattice denominator must be positive");
    require(L.basis.rows() == L.basis.cols(), "lattice basis must be square");
    LatticeBasis out{hnf_rows(L.basis), L.denominator};
    /* strip common factors of basis and denominator */
    Z g = out.denominator;
    for (auto &v : out.basis.data())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1) {
        out.basis = out.basis.map([&](const Z &v) { return Z(v / g); });
        out.denominator /= g;
    }
    return out;
}

/* [Z^n : L] as a rational (may be < 1 for fractional lattices) */
inline Q lattice_index(const LatticeBasis &L)
{
    LatticeBasis h = hermite_normal_form(L);
    Z d = 1;
    for (int i = 0; i < h.basis.rows(); ++i)
        d *= h.basis(i, i);
    Q r(d, ipow(h.denominator, h.basis.rows()));
    r.canonicalize();
    return r;
}

/* integer coordinates of v in an upper-triangular HNF basis, if v is in the lattice */
inline std::optional<std::vector<Z>> hnf_coordinates(const MatZ &H, std::vector<Z> v)
{
    int n = H.rows();
    std::vector<Z> x(n);
    for (int i = 0; i < n; ++i) {
        if (!mpz_divisible_p(v[i].get_mpz_t(), H(i, i).get_mpz_t()))
            return std::nullopt;
        x[i] = v[i] / H(i, i);
        for (int j = i; j < n; ++j)
            v[j] -= x[i] * H(i, j);
    }
    return x;
}

} // namespace selorb

#endif
