#ifndef SELORB_EXACT_RESULTANT_HPP
#define SELORB_EXACT_RESULTANT_HPP

#include "poly.hpp"

namespace selorb {

/* Res(a, b) by the Euclidean remainder sequence over Q */
inline Q resultant(PolyQ a, PolyQ b)
{
    if (a.is_zero() || b.is_zero())
        return 0;
    Q acc = 1;
    for (;;) {
        int m = a.deg(), n = b.deg();
        if (n == 0)
            return acc * qpow(b.lead(), m);
        if (m == 0)
            return acc * qpow(a.lead(), n);
        PolyQ r = a % b;
        if (r.is_zero())
            return 0;
        if ((static_cast<long>(m) * n) % 2)
            acc = -acc;
        acc *= qpow(b.lead(), m - r.deg());
        a = std::move(b);
        b = std::move(r);
    }
}

inline Z resultant(const PolyZ &a, const PolyZ &b)
{
    Q r = resultant(to_Q(a), to_Q(b));
    return r.get_num();
}

/* disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f) */
inline Z discriminant(const PolyZ &f)
{
    require(f.deg() >= 2, "discriminant needs degree >= 2");
    int d = f.deg();
    Q r = resultant(to_Q(f), to_Q(f.derivative())) / Q(f.lead());
    if ((static_cast<long>(d) * (d - 1) / 2) % 2)
        r = -r;
    return r.get_num();
}

inline Q discriminant(const PolyQ &f)
{
    require(f.deg() >= 2, "discriminant needs degree >= 2");
    int d = f.deg();
    Q r = resultant(f, f.derivative()) / f.lead();
    return ((static_cast<long>(d) * (d - 1) / 2) % 2) ? Q(-r) : r;
}

} // namespace selorb

#endif
