#ifndef SELORB_ORBIT_FIELD_HPP
#define SELORB_ORBIT_FIELD_HPP

#include <cstdint>
#include <vector>

#include "../exact/integer.hpp"

namespace selorb {

/* Field descriptors: the element type plus arithmetic, so algorithms can be
   written once for Q and for F_p with a runtime modulus. */
struct RationalField {
    using elem = Q;
    int characteristic() const { return 0; }
    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem from(const Z &a) const { return Q(a); }
    elem from(const Q &a) const { return a; }
    elem add(const elem &a, const elem &b) const { return a + b; }
    elem sub(const elem &a, const elem &b) const { return a - b; }
    elem mul(const elem &a, const elem &b) const { return a * b; }
    elem neg(const elem &a) const { return -a; }
    elem inv(const elem &a) const
    {
        if (a == 0)
            throw validation_error("division by zero");
        return 1 / a;
    }
    bool is_zero(const elem &a) const { return a == 0; }
};

struct PrimeField {
    using elem = std::int64_t;
    std::int64_t p;

    explicit PrimeField(std::int64_t p_) : p(p_)
    {
        require(p >= 2 && p < (std::int64_t(1) << 31) && is_prime(Z(static_cast<long>(p))),
                "modulus must be a prime below 2^31");
    }
    int characteristic() const { return static_cast<int>(p); }
    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem from(const Z &a) const { return mod(a, Z(static_cast<long>(p))).get_si(); }
    elem from(const Q &a) const { return mod_q(a, Z(static_cast<long>(p))).get_si(); }
    elem add(elem a, elem b) const { return (a + b) % p; }
    elem sub(elem a, elem b) const { return (a - b + p) % p; }
    elem mul(elem a, elem b) const { return static_cast<elem>((static_cast<__int128>(a) * b) % p); }
    elem neg(elem a) const { return a ? p - a : 0; }
    elem inv(elem a) const
    {
        if (a == 0)
            throw validation_error("division by zero");
        elem r = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1)
                r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    bool is_zero(elem a) const { return a == 0; }
};

/* Dense polynomial helpers over a field descriptor; vectors lowest degree first. */
template <class K> void kpoly_trim(std::vector<typename K::elem> &a, const K &k)
{
    while (!a.empty() && k.is_zero(a.back()))
        a.pop_back();
}

template <class K>
std::vector<typename K::elem> kpoly_mod(std::vector<typename K::elem> a, const std::vector<typename K::elem> &b,
                                        const K &k)
{
    kpoly_trim(a, k);
    int db = static_cast<int>(b.size()) - 1;
    auto inv = k.inv(b.back());
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        if (k.is_zero(a[i]))
            continue;
        auto t = k.mul(a[i], inv);
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = k.sub(a[i - db + j], k.mul(t, b[j]));
    }
    if (static_cast<int>(a.size()) > db)
        a.resize(db > 0 ? db : 0);
    kpoly_trim(a, k);
    return a;
}

/* degree of gcd(a, b); -1 if both are zero */
template <class K>
int kpoly_gcd_degree(std::vector<typename K::elem> a, std::vector<typename K::elem> b, const K &k)
{
    kpoly_trim(a, k);
    kpoly_trim(b, k);
    while (!b.empty()) {
        auto r = kpoly_mod(a, b, k);
        a = std::move(b);
        b = std::move(r);
    }
    return static_cast<int>(a.size()) - 1;
}

template <class K> std::vector<typename K::elem> kpoly_derivative(const std::vector<typename K::elem> &a, const K &k)
{
    std::vector<typename K::elem> d;
    for (size_t i = 1; i < a.size(); ++i)
        d.push_back(k.mul(k.from(Z(static_cast<long>(i))), a[i]));
    kpoly_trim(d, k);
    return d;
}

} // namespace selorb

#endif
