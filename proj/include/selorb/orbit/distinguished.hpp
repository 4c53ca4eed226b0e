#ifndef SELORB_ORBIT_DISTINGUISHED_HPP
#define SELORB_ORBIT_DISTINGUISHED_HPP

#include <vector>

#include "field.hpp"
#include "rep.hpp"

namespace selorb {

/* Arithmetic in L = k[x]/(f), f monic of degree N, elements as length-N vectors. */
template <class K> class EtaleAlgebra {
  public:
    using elem = typename K::elem;
    using vec = std::vector<elem>;

    EtaleAlgebra(const K &k, std::vector<elem> f) : k_(k), f_(std::move(f))
    {
        require(!f_.empty() && f_.back() == k_.one(), "etale algebra needs a monic modulus");
        N_ = static_cast<int>(f_.size()) - 1;
    }
    int degree() const { return N_; }
    const K &field() const { return k_; }

    vec zero() const { return vec(N_, k_.zero()); }
    vec power(int j) const
    {
        vec r = zero();
        r[0] = k_.one();
        for (int i = 0; i < j; ++i)
            r = times_beta(r);
        return r;
    }
    vec times_beta(const vec &a) const
    {
        vec r = zero();
        elem top = a[N_ - 1];
        for (int i = N_ - 1; i > 0; --i)
            r[i] = a[i - 1];
        r[0] = k_.zero();
        for (int i = 0; i < N_; ++i)
            r[i] = k_.sub(r[i], k_.mul(top, f_[i]));
        return r;
    }
    vec mul(const vec &a, const vec &b) const
    {
        std::vector<elem> full(2 * N_ - 1, k_.zero());
        for (int i = 0; i < N_; ++i) {
            if (k_.is_zero(a[i]))
                continue;
            for (int j = 0; j < N_; ++j)
                full[i + j] = k_.add(full[i + j], k_.mul(a[i], b[j]));
        }
        for (int i = 2 * N_ - 2; i >= N_; --i) {
            elem t = full[i];
            if (k_.is_zero(t))
                continue;
            for (int j = 0; j <= N_; ++j)
                full[i - N_ + j] = k_.sub(full[i - N_ + j], k_.mul(t, f_[j]));
        }
        full.resize(N_);
        return full;
    }
    vec add(vec a, const vec &b) const
    {
        for (int i = 0; i < N_; ++i)
            a[i] = k_.add(a[i], b[i]);
        return a;
    }
    vec axpy(vec a, const elem &s, const vec &b) const
    {
        for (int i = 0; i < N_; ++i)
            a[i] = k_.add(a[i], k_.mul(s, b[i]));
        return a;
    }
    /* the top coefficient of lambda*nu */
    elem pair(const vec &a, const vec &b) const { return mul(a, b)[N_ - 1]; }

  private:
    K k_;
    std::vector<elem> f_;
    int N_;
};

/* Basis p_0..p_{2n} of L, p_i monic of degree i, whose Gram matrix under the
   top-coefficient pairing is the anti-identity. */
template <class K>
std::vector<typename EtaleAlgebra<K>::vec> distinguished_basis(const EtaleAlgebra<K> &L)
{
    const K &k = L.field();
    int N = L.degree(), top = N - 1; /* top = 2n */
    std::vector<typename EtaleAlgebra<K>::vec> p(N);
    auto half = k.inv(k.from(Z(2)));
    for (int j = 0; j < N; ++j) {
        auto q = L.power(j);
        if (2 * j > top) {
            auto bj = q;
            for (int i = top - j + 1; i < j; ++i)
                q = L.axpy(q, k.neg(L.pair(bj, p[i])), p[top - i]);
            auto a = k.mul(L.pair(q, q), half);
            q = L.axpy(q, k.neg(a), p[top - j]);
        }
        p[j] = q;
    }
    return p;
}

/* B_{ij} = (p_i, beta p_j) for the basis above; f given as c_2..c_{2n+1} in k */
template <class K>
Matrix<typename K::elem> distinguished_matrix(const K &k, const std::vector<typename K::elem> &fcoef)
{
    if (k.characteristic() == 2)
        throw unsupported_error("distinguished_rep: characteristic 2");
    int N = static_cast<int>(fcoef.size()) - 1;
    require(N >= 3 && N % 2 == 1 && fcoef.back() == k.one() && k.is_zero(fcoef[N - 1]),
            "distinguished_rep: f must be monic, trace-zero, odd degree");
    if (kpoly_gcd_degree(fcoef, kpoly_derivative(fcoef, k), k) > 0)
        throw validation_error("distinguished_rep: f is not separable");
    EtaleAlgebra<K> L(k, fcoef);
    auto p = distinguished_basis(L);
    Matrix<typename K::elem> B(N, N);
    for (int j = 0; j < N; ++j) {
        auto bp = L.times_beta(p[j]);
        for (int i = 0; i < N; ++i)
            B(i, j) = L.pair(p[i], bp);
    }
    return B;
}

inline OperatorRepQ distinguished_rep(const PolyQ &f)
{
    RationalField k;
    int N = f.deg();
    std::vector<Q> c(N + 1);
    for (int i = 0; i <= N; ++i)
        c[i] = f[i];
    return OperatorRepQ((N - 1) / 2, distinguished_matrix(k, c));
}

inline OperatorRepQ distinguished_rep(const PolyZ &f) { return distinguished_rep(to_Q(f)); }

/* over F_p; entries in [0, p) */
inline Matrix<std::int64_t> distinguished_rep_mod_p(const PolyZ &f, std::int64_t p)
{
    PrimeField k(p);
    std::vector<std::int64_t> c;
    for (int i = 0; i <= f.deg(); ++i)
        c.push_back(k.from(f[i]));
    return distinguished_matrix(k, c);
}

} // namespace selorb

#endif
