#ifndef SELORB_EXACT_POLY_HPP
#define SELORB_EXACT_POLY_HPP

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace selorb {

/* Dense univariate polynomial, coefficients lowest degree first.
   T is Z or Q; the zero polynomial has no coefficients. */
template <class T> class Poly {
  public:
    Poly() = default;
    Poly(const T &c) : c_{c} { trim(); }
    Poly(int c) : c_{T(c)} { trim(); }
    explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }

    static Poly monomial(const T &a, int k)
    {
        std::vector<T> v(k + 1, T(0));
        v[k] = a;
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(T(1), 1); }

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const T &lead() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    T operator[](int i) const { return (i >= 0 && i <= deg()) ? c_[i] : T(0); }
    const std::vector<T> &coeffs() const { return c_; }

    void set(int i, const T &v)
    {
        if (i > deg())
            c_.resize(i + 1, T(0));
        c_[i] = v;
        trim();
    }

    Poly &operator+=(const Poly &o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly &operator-=(const Poly &o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator-(Poly a)
    {
        for (auto &v : a.c_)
            v = -v;
        return a;
    }
    friend Poly operator*(const Poly &a, const Poly &b)
    {
        if (a.is_zero() || b.is_zero())
            return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly &operator*=(const Poly &o) { return *this = *this * o; }
    friend Poly operator*(const T &s, Poly a)
    {
        for (auto &v : a.c_)
            v *= s;
        a.trim();
        return a;
    }
    friend bool operator==(const Poly &a, const Poly &b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

    template <class U> U eval(const U &t) const
    {
        U r(0);
        for (int i = deg(); i >= 0; --i)
            r = r * t + U(c_[i]);
        return r;
    }

    /* composition this(g) */
    Poly compose(const Poly &g) const
    {
        Poly r;
        for (int i = deg(); i >= 0; --i)
            r = r * g + Poly(c_[i]);
        return r;
    }

    Poly derivative() const
    {
        if (deg() < 1)
            return Poly();
        std::vector<T> r(deg());
        for (int i = 1; i <= deg(); ++i)
            r[i - 1] = c_[i] * i;
        return Poly(std::move(r));
    }

    std::vector<std::string> to_strings() const
    {
        std::vector<std::string> s;
        for (auto &v : c_)
            s.push_back(v.get_str());
        return s;
    }

  private:
    std::vector<T> c_;
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }
};

using PolyZ = Poly<Z>;
using PolyQ = Poly<Q>;

inline PolyQ to_Q(const PolyZ &f)
{
    std::vector<Q> v;
    for (auto &c : f.coeffs())
        v.emplace_back(c);
    return PolyQ(std::move(v));
}

/* denominators cleared check; throws if a coefficient is not integral */
inline PolyZ to_Z(const PolyQ &f)
{
    std::vector<Z> v;
    for (auto &c : f.coeffs()) {
        if (c.get_den() != 1)
            throw validation_error("polynomial has non-integral coefficients");
        v.push_back(c.get_num());
    }
    return PolyZ(std::move(v));
}

inline bool is_integral(const PolyQ &f)
{
    for (auto &c : f.coeffs())
        if (c.get_den() != 1)
            return false;
    return true;
}

/* division with remainder over Q */
inline std::pair<PolyQ, PolyQ> divmod(const PolyQ &a, const PolyQ &b)
{
    if (b.is_zero())
        throw validation_error("polynomial division by zero");
    std::vector<Q> r = a.coeffs();
    int db = b.deg();
    if (a.deg() < db)
        return {PolyQ(), a};
    std::vector<Q> q(a.deg() - db + 1, Q(0));
    Q inv = 1 / b.lead();
    for (int i = a.deg(); i >= db; --i) {
        if (r[i] == 0)
            continue;
        Q t = r[i] * inv;
        q[i - db] = t;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= t * b[j];
    }
    return {PolyQ(std::move(q)), PolyQ(std::move(r))};
}

/* division by a monic polynomial over Z stays in Z */
inline std::pair<PolyZ, PolyZ> divmod_monic(const PolyZ &a, const PolyZ &b)
{
    if (!b.is_monic())
        throw validation_error("divmod_monic: divisor not monic");
    std::vector<Z> r = a.coeffs();
    int db = b.deg();
    if (a.deg() < db)
        return {PolyZ(), a};
    std::vector<Z> q(a.deg() - db + 1, Z(0));
    for (int i = a.deg(); i >= db; --i) {
        if (r[i] == 0)
            continue;
        Z t = r[i];
        q[i - db] = t;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= t * b[j];
    }
    return {PolyZ(std::move(q)), PolyZ(std::move(r))};
}

inline PolyQ operator%(const PolyQ &a, const PolyQ &b) { return divmod(a, b).second; }
inline PolyZ operator%(const PolyZ &a, const PolyZ &b) { return divmod_monic(a, b).second; }

/* exact quotient in Z[x]; throws if b does not divide a */
inline PolyZ exact_div(const PolyZ &a, const PolyZ &b)
{
    if (b.is_zero())
        throw validation_error("exact_div by zero polynomial");
    if (a.is_zero())
        return PolyZ();
    std::vector<Z> r = a.coeffs();
    int db = b.deg();
    if (a.deg() < db)
        throw validation_error("exact_div: not divisible");
    std::vector<Z> q(a.deg() - db + 1, Z(0));
    for (int i = a.deg(); i >= db; --i) {
        if (r[i] == 0)
            continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), b.lead().get_mpz_t()))
            throw validation_error("exact_div: not divisible");
        Z t = r[i] / b.lead();
        q[i - db] = t;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= t * b[j];
    }
    for (auto &v : r)
        if (v != 0)
            throw validation_error("exact_div: nonzero remainder");
    return PolyZ(std::move(q));
}

inline PolyQ exact_div(const PolyQ &a, const PolyQ &b)
{
    auto qr = divmod(a, b);
    if (!qr.second.is_zero())
        throw validation_error("exact_div: nonzero remainder");
    return qr.first;
}

inline Z exact_div(const Z &a, const Z &b)
{
    Z q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline Q exact_div(const Q &a, const Q &b) { return a / b; }

inline PolyQ make_monic(const PolyQ &a)
{
    if (a.is_zero())
        return a;
    return (1 / a.lead()) * a;
}

/* monic gcd over Q */
inline PolyQ gcd(PolyQ a, PolyQ b)
{
    while (!b.is_zero()) {
        PolyQ r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/* (g, s, t) with s a + t b = g monic gcd */
inline std::tuple<PolyQ, PolyQ, PolyQ> xgcd(PolyQ a, PolyQ b)
{
    PolyQ s0(Q(1)), s1, t0, t1(Q(1));
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        PolyQ s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.is_zero())
        return {a, s0, t0};
    Q inv = 1 / a.lead();
    return {inv * a, inv * s0, inv * t0};
}

inline Z content(const PolyZ &f)
{
    Z g = 0;
    for (auto &c : f.coeffs())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

/* f(x + a) */
template <class T> Poly<T> shift(const Poly<T> &f, const T &a)
{
    return f.compose(Poly<T>(std::vector<T>{a, T(1)}));
}

/* f(s x) */
template <class T> Poly<T> scale_var(const Poly<T> &f, const T &s)
{
    std::vector<T> v = f.coeffs();
    T m(1);
    for (auto &c : v) {
        c *= m;
        m *= s;
    }
    return Poly<T>(std::move(v));
}

/* the curve polynomial x^{2n+1} + c2 x^{2n-1} + ... + c_{2n+1} */
inline PolyZ curve_poly(const std::vector<Z> &c)
{
    int d = static_cast<int>(c.size()) + 1;
    std::vector<Z> v(d + 1, Z(0));
    v[d] = 1;
    for (size_t k = 0; k < c.size(); ++k)
        v[d - 2 - k] = c[k];
    return PolyZ(std::move(v));
}

/* inverse of curve_poly; requires monic with zero x^{d-1} coefficient */
inline std::vector<Z> curve_coeffs(const PolyZ &f)
{
    int d = f.deg();
    if (!f.is_monic() || d < 3 || d % 2 == 0 || f[d - 1] != 0)
        throw validation_error("expected monic trace-zero polynomial of odd degree >= 3");
    std::vector<Z> c;
    for (int k = 2; k <= d; ++k)
        c.push_back(f[d - k]);
    return c;
}

} // namespace selorb

#endif
