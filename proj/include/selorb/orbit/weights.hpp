#ifndef SELORB_ORBIT_WEIGHTS_HPP
#define SELORB_ORBIT_WEIGHTS_HPP

#include <cstdint>
#include <vector>

#include "../exact/errors.hpp"

namespace selorb {

/* lambda^{e_lambda} * prod_k s_k^{e_s[k]} */
struct WeightVector {
    int e_lambda = 0;
    std::vector<int> e_s;

    WeightVector &operator+=(const WeightVector &o)
    {
        e_lambda += o.e_lambda;
        if (e_s.size() < o.e_s.size())
            e_s.resize(o.e_s.size(), 0);
        for (size_t k = 0; k < o.e_s.size(); ++k)
            e_s[k] += o.e_s[k];
        return *this;
    }
    friend bool operator==(const WeightVector &a, const WeightVector &b)
    {
        return a.e_lambda == b.e_lambda && a.e_s == b.e_s;
    }
};

/* weight of the coordinate b_ij (1-indexed, i <= j); (w_1..w_2n) = (s_1..s_n, s_n..s_1) */
inline WeightVector weight(int n, int i, int j)
{
    require(n >= 1, "genus must be positive");
    require(1 <= i && i <= j && j <= 2 * n + 1, "weight: need 1 <= i <= j <= 2n+1");
    if (i == n + 1 && j == n + 1)
        throw validation_error("weight: b_{n+1,n+1} is not a coordinate of V");
    WeightVector w{1, std::vector<int>(n, -2)};
    auto idx = [n](int t) { return t <= n ? t - 1 : 2 * n - t; }; /* w_t = s_{idx+1} */
    for (int t = 1; t <= i - 1; ++t)
        ++w.e_s[idx(t)];
    for (int t = 1; t <= j - 1; ++t)
        ++w.e_s[idx(t)];
    return w;
}

struct Coordinate {
    int i, j;
};

/* U: all b_ij with i <= j except b_{n+1,n+1} */
inline std::vector<Coordinate> v_coordinates(int n)
{
    std::vector<Coordinate> u;
    for (int i = 1; i <= 2 * n + 1; ++i)
        for (int j = i; j <= 2 * n + 1; ++j)
            if (!(i == n + 1 && j == n + 1))
                u.push_back({i, j});
    return u;
}

/* U^-: i <= j, i + j < 2n+1 */
inline std::vector<Coordinate> lower_coordinates(int n)
{
    std::vector<Coordinate> u;
    for (int i = 1; i <= 2 * n + 1; ++i)
        for (int j = i; i + j < 2 * n + 1; ++j)
            u.push_back({i, j});
    return u;
}

struct WeightIdentityReport {
    int n = 0;
    bool anti_diagonal_is_lambda = true;
    bool next_diagonal_is_lambda_over_s = true;
    bool product_is_lambda_power = true;
    WeightVector product;
    bool ok() const { return anti_diagonal_is_lambda && next_diagonal_is_lambda_over_s && product_is_lambda_power; }
};

inline WeightIdentityReport weight_identities(int n)
{
    WeightIdentityReport r;
    r.n = n;
    r.product = WeightVector{0, std::vector<int>(n, 0)};
    WeightVector lam{1, std::vector<int>(n, 0)};
    for (auto c : v_coordinates(n)) {
        WeightVector w = weight(n, c.i, c.j);
        r.product += w;
        if (c.i + c.j == 2 * n + 2 && !(w == lam))
            r.anti_diagonal_is_lambda = false;
        if (c.i + c.j == 2 * n + 1 && c.i <= n) {
            WeightVector expect = lam;
            expect.e_s[c.i - 1] = -1;
            if (!(w == expect))
                r.next_diagonal_is_lambda_over_s = false;
        }
    }
    r.product_is_lambda_power = r.product == WeightVector{n * (2 * n + 3), std::vector<int>(n, 0)};
    return r;
}

struct LemmaReport {
    int n = 0;
    int lower_size = 0;
    std::uint64_t subsets = 0;
    std::uint64_t violations = 0;
    std::uint64_t equalities = 0;
    bool equality_only_at_extremes = true;
    bool ok() const { return violations == 0 && equality_only_at_extremes && equalities == 2; }
};

/* exhaustive check over all subsets of U^- of
   sum_k max{0, e_k(U0) + k^2 - 2kn} <= |U0|, equality only at the extremes */
inline LemmaReport combinatorial_lemma_check(int n)
{
    require(n >= 1 && n <= 4, "combinatorial_lemma_check: n must be in 1..4");
    auto U = lower_coordinates(n);
    std::vector<std::vector<int>> e; /* e_k contribution = minus the s_k exponent */
    for (auto c : U) {
        WeightVector w = weight(n, c.i, c.j);
        std::vector<int> v(n);
        for (int k = 0; k < n; ++k)
            v[k] = -w.e_s[k];
        e.push_back(v);
    }
    LemmaReport r;
    r.n = n;
    r.lower_size = static_cast<int>(U.size());
    std::uint64_t full = (std::uint64_t(1) << U.size()) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        std::vector<int> ek(n, 0);
        int size = 0;
        for (size_t t = 0; t < U.size(); ++t)
            if (mask >> t & 1) {
                ++size;
                for (int k = 0; k < n; ++k)
                    ek[k] += e[t][k];
            }
        int lhs = 0;
        for (int k = 1; k <= n; ++k) {
            int v = ek[k - 1] + k * k - 2 * k * n;
            if (v > 0)
                lhs += v;
        }
        ++r.subsets;
        if (lhs > size)
            ++r.violations;
        if (lhs == size) {
            ++r.equalities;
            if (mask != 0 && mask != full)
                r.equality_only_at_extremes = false;
        }
    }
    return r;
}

} // namespace selorb

#endif
