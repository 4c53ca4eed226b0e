#ifndef SELORB_ORBIT_REAL_HPP
#define SELORB_ORBIT_REAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "../exact/sturm.hpp"
#include "rep.hpp"

namespace selorb {

inline int real_component(const PolyZ &f)
{
    if (discriminant(f) == 0)
        throw validation_error("real_component: f is not separable");
    return (sturm_real_root_count(f) - 1) / 2;
}

struct SignPattern {
    std::vector<int> signs;

    int m() const
    {
        int c = 0;
        for (int s : signs)
            c += s < 0;
        return c;
    }
    std::string str() const
    {
        std::string s;
        for (int v : signs)
            s += v > 0 ? '+' : '-';
        return s;
    }
    static SignPattern parse(const std::string &s)
    {
        SignPattern p;
        for (size_t i = 0; i < s.size(); ++i) {
            unsigned char ch = s[i];
            if (ch == '+')
                p.signs.push_back(1);
            else if (ch == '-')
                p.signs.push_back(-1);
            else if (ch == 0xE2 && i + 2 < s.size() && (unsigned char)s[i + 1] == 0x88 &&
                     (unsigned char)s[i + 2] == 0x92) { /* U+2212 */
                p.signs.push_back(-1);
                i += 2;
            } else if (ch == ',' || ch == ' ' || ch == '(' || ch == ')')
                continue;
            else
                throw validation_error("bad sign pattern '" + s + "'");
        }
        return p;
    }
    friend bool operator==(const SignPattern &a, const SignPattern &b) { return a.signs == b.signs; }
};

/* sign <w_i, w_i> of the eigenvectors of T = A B at the real eigenvalues in
   increasing order. Uses adj(xI - T) A = (-1)^n adj(xA - B): at a simple
   eigenvalue the k-th principal minor C_kk(lambda) of (lambda A - B) has the sign
   of (-1)^n f'(lambda) <w,w>, and sign f'(lambda_i) = (-1)^i. */
inline SignPattern sign_pattern(const OperatorRepQ &r)
{
    int n = r.n, N = r.dim();
    PolyQ f = charpoly_pencil(r.B, n);
    if (discriminant(f) == 0)
        throw validation_error("sign_pattern: invariants are not separable");
    Matrix<PolyQ> pencil(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            PolyQ e(-r.B(i, j));
            if (i + j == N - 1)
                e += PolyQ::x();
            pencil(i, j) = e;
        }
    std::vector<PolyQ> minors(N);
    std::vector<bool> have(N, false);
    auto roots = isolate_real_roots(f);
    SignPattern out;
    for (size_t i = 0; i < roots.size(); ++i) {
        int s = 0;
        for (int k = 0; k < N && s == 0; ++k) {
            if (!have[k]) {
                minors[k] = det_bareiss(pencil.minor_matrix(k, k));
                have[k] = true;
            }
            s = sign_at_root(minors[k], f, roots[i].first, roots[i].second);
        }
        if (s == 0)
            throw error(error_kind::infeasible, "sign_pattern: certification failed");
        if (i % 2)
            s = -s;
        if (n % 2)
            s = -s;
        out.signs.push_back(s);
    }
    return out;
}

inline SignPattern sign_pattern(const OperatorRep &r)
{
    return sign_pattern(OperatorRepQ(r.n, to_Q(r.B)));
}

inline long binomial(int a, int b)
{
    if (b < 0 || b > a)
        return 0;
    long r = 1;
    for (int i = 1; i <= b; ++i)
        r = r * (a - b + i) / i;
    return r;
}

/* all patterns of length 2m+1 with m minus signs, '+' ordered before '-' */
inline std::vector<SignPattern> all_patterns(int m)
{
    int L = 2 * m + 1;
    std::vector<SignPattern> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int pos, int minus_left) -> void {
        if (pos == L) {
            if (minus_left == 0)
                out.push_back(SignPattern{cur});
            return;
        }
        if (L - pos > minus_left) {
            cur.push_back(1);
            self(self, pos + 1, minus_left);
            cur.pop_back();
        }
        if (minus_left > 0) {
            cur.push_back(-1);
            self(self, pos + 1, minus_left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, m);
    return out;
}

/* index in 0..2^m-1 if soluble, -1 otherwise */
inline long soluble_index(const SignPattern &p)
{
    int L = static_cast<int>(p.signs.size());
    if (L % 2 == 0 || p.signs[0] != 1)
        return -1;
    long idx = 0;
    for (int b = 1; b < L; b += 2) {
        int x = p.signs[b], y = p.signs[b + 1];
        long bit;
        if (x == -1 && y == 1)
            bit = 0;
        else if (x == 1 && y == -1)
            bit = 1;
        else
            return -1;
        idx = 2 * idx + bit;
    }
    return idx;
}

struct Component {
    int m = 0;
    long tau = 1;
};

inline Component classify_component(const SignPattern &p)
{
    int L = static_cast<int>(p.signs.size());
    if (L % 2 == 0)
        throw validation_error("sign pattern must have odd length");
    for (int s : p.signs)
        require(s == 1 || s == -1, "sign pattern entries must be +1 or -1");
    int m = p.m();
    if (2 * m + 1 != L)
        throw validation_error("sign pattern must have exactly m minus signs for length 2m+1");
    long idx = soluble_index(p);
    if (idx >= 0)
        return {m, idx + 1};
    long tau = (1L << m);
    for (auto &q : all_patterns(m)) {
        if (soluble_index(q) >= 0)
            continue;
        ++tau;
        if (q == p)
            return {m, tau};
    }
    throw validation_error("sign pattern not found");
}

} // namespace selorb

#endif
