#ifndef SELORB_EXACT_STURM_HPP
#define SELORB_EXACT_STURM_HPP

#include <utility>
#include <vector>

#include "poly.hpp"

namespace selorb {

inline int sgn(const Q &a) { return sgn(a.get_num()); }
inline int sgn(const Z &a) { return mpz_sgn(a.get_mpz_t()); }

class sturm_chain {
  public:
    explicit sturm_chain(const PolyQ &f)
    {
        require(!f.is_zero(), "Sturm chain of zero polynomial");
        s_.push_back(f);
        if (f.deg() == 0)
            return;
        s_.push_back(f.derivative());
        while (s_.back().deg() > 0) {
            PolyQ r = s_[s_.size() - 2] % s_.back();
            if (r.is_zero())
                break;
            /* positive rescaling keeps signs and tames growth */
            Q l = r.lead();
            if (l < 0)
                l = -l;
            s_.push_back((-1 / l) * r);
        }
    }

    /* sign changes at a finite point */
    int variations(const Q &x) const
    {
        int v = 0, last = 0;
        for (auto &p : s_) {
            int s = sgn(p.eval(x));
            if (s == 0)
                continue;
            if (last && s != last)
                ++v;
            last = s;
        }
        return v;
    }

    /* sign changes at +inf (dir = 1) or -inf (dir = -1) */
    int variations_inf(int dir) const
    {
        int v = 0, last = 0;
        for (auto &p : s_) {
            int s = sgn(p.lead());
            if (dir < 0 && p.deg() % 2)
                s = -s;
            if (last && s != last)
                ++v;
            last = s;
        }
        return v;
    }

    int count_all() const { return variations_inf(-1) - variations_inf(1); }
    /* distinct roots in (a, b] */
    int count(const Q &a, const Q &b) const { return variations(a) - variations(b); }

  private:
    std::vector<PolyQ> s_;
};

inline bool is_squarefree(const PolyQ &f) { return gcd(f, f.derivative()).deg() == 0; }

inline int sturm_real_root_count(const PolyQ &f)
{
    if (!is_squarefree(f))
        throw validation_error("Sturm count requires a squarefree polynomial");
    return sturm_chain(f).count_all();
}

inline int sturm_real_root_count(const PolyZ &f) { return sturm_real_root_count(to_Q(f)); }

/* every real root lies in (-B, B) */
inline Q cauchy_bound(const PolyQ &f)
{
    Q m = 0;
    for (int i = 0; i < f.deg(); ++i) {
        Q t = abs(f[i] / f.lead());
        if (t > m)
            m = t;
    }
    return m + 1;
}

/* Disjoint half-open intervals (a, b], one per distinct real root, increasing. */
inline std::vector<std::pair<Q, Q>> isolate_real_roots(const PolyQ &f)
{
    sturm_chain sc(f);
    Q B = cauchy_bound(f);
    std::vector<std::pair<Q, Q>> out;
    std::vector<std::pair<Q, Q>> stack{{-B, B}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        int c = sc.count(a, b);
        if (c == 0)
            continue;
        if (c == 1) {
            out.emplace_back(a, b);
            continue;
        }
        Q mid = (a + b) / 2;
        stack.emplace_back(a, mid);
        stack.emplace_back(mid, b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/* Exact sign of g at the unique root of squarefree f in (a, b]. */
inline int sign_at_root(const PolyQ &g, const PolyQ &f, Q a, Q b)
{
    if (g.is_zero())
        return 0;
    PolyQ h = gcd(f, g);
    if (h.deg() > 0 && sturm_chain(h).count(a, b) == 1)
        return 0;
    if (g.deg() == 0)
        return sgn(g.lead());
    sturm_chain sf(f), sg(gcd(g, g.derivative()).deg() > 0 ? exact_div(g, gcd(g, g.derivative())) : g);
    while (sg.count(a, b) > 0) {
        Q mid = (a + b) / 2;
        if (sf.count(a, mid) == 1)
            b = mid;
        else
            a = mid;
    }
    return sgn(g.eval(b));
}

} // namespace selorb

#endif
