#ifndef SELORB_FINITE_CENSUS_HPP
#define SELORB_FINITE_CENSUS_HPP

#include <cstdint>
#include <vector>

#include "../exact/parallel.hpp"
#include "../orbit/rep.hpp"
#include "fp_poly.hpp"
#include "group.hpp"

namespace selorb {

/* Coordinates of V(F_p): b_ij with i <= j, except the centre entry b_{n+1,n+1},
   which is fixed by the anti-trace condition. Codes are base-p digit strings. */
class VBox {
  public:
    VBox(int n, std::int64_t p) : n_(n), N_(2 * n + 1), k_(p)
    {
        for (int i = 0; i < N_; ++i)
            for (int j = i; j < N_; ++j)
                if (!(i == n && j == n))
                    coords_.push_back({i, j});
        size_ = 1;
        for (size_t t = 0; t < coords_.size(); ++t) {
            if (size_ > (std::uint64_t(1) << 40) / static_cast<std::uint64_t>(p))
                throw infeasible_error("V(F_p) box too large to enumerate");
            size_ *= static_cast<std::uint64_t>(p);
        }
    }
    int n() const { return n_; }
    int N() const { return N_; }
    std::int64_t p() const { return k_.p; }
    const PrimeField &field() const { return k_; }
    std::uint64_t size() const { return size_; }
    int dim() const { return static_cast<int>(coords_.size()); }

    void decode(std::uint64_t code, std::int64_t *B) const
    {
        std::int64_t p = k_.p;
        for (auto [i, j] : coords_) {
            std::int64_t v = static_cast<std::int64_t>(code % p);
            code /= p;
            B[i * N_ + j] = v;
            B[j * N_ + i] = v;
        }
        std::int64_t s = 0;
        for (int i = 0; i < n_; ++i)
            s += B[i * N_ + (N_ - 1 - i)];
        B[n_ * N_ + n_] = ((-2 * s) % p + p) % p;
    }
    std::uint64_t encode(const std::int64_t *B) const
    {
        std::uint64_t code = 0;
        for (size_t t = coords_.size(); t-- > 0;)
            code = code * static_cast<std::uint64_t>(k_.p) + static_cast<std::uint64_t>(B[coords_[t].first * N_ + coords_[t].second]);
        return code;
    }

  private:
    int n_, N_;
    PrimeField k_;
    std::vector<std::pair<int, int>> coords_;
    std::uint64_t size_;
};

/* det(xI - T) mod p for T = A B, via Hessenberg reduction; out[i] = coeff of x^i */
inline void charpoly_mod_p(const std::int64_t *B, int N, const PrimeField &k, std::int64_t *out)
{
    std::int64_t p = k.p;
    std::int64_t H[81];
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            H[i * N + j] = B[(N - 1 - i) * N + j];
    for (int m = 0; m + 2 < N; ++m) {
        int piv = -1;
        for (int i = m + 1; i < N; ++i)
            if (H[i * N + m]) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != m + 1) {
            for (int j = 0; j < N; ++j)
                std::swap(H[piv * N + j], H[(m + 1) * N + j]);
            for (int i = 0; i < N; ++i)
                std::swap(H[i * N + piv], H[i * N + m + 1]);
        }
        std::int64_t inv = k.inv(H[(m + 1) * N + m]);
        for (int i = m + 2; i < N; ++i) {
            std::int64_t u = H[i * N + m] * inv % p;
            if (!u)
                continue;
            for (int j = 0; j < N; ++j)
                H[i * N + j] = (H[i * N + j] - u * H[(m + 1) * N + j] % p + p) % p;
            for (int j = 0; j < N; ++j)
                H[j * N + m + 1] = (H[j * N + m + 1] + u * H[j * N + i]) % p;
        }
    }
    /* P[k] = charpoly of the leading k x k block; stored with stride N+1 */
    std::int64_t P[10 * 10] = {0};
    P[0] = 1;
    for (int kk = 1; kk <= N; ++kk) {
        std::int64_t *cur = P + kk * (N + 1);
        const std::int64_t *prev = P + (kk - 1) * (N + 1);
        std::int64_t h = H[(kk - 1) * N + (kk - 1)];
        for (int d = 0; d <= kk; ++d) {
            std::int64_t v = (d ? prev[d - 1] : 0) - h * (d < kk ? prev[d] : 0) % p;
            cur[d] = (v % p + p) % p;
        }
        std::int64_t prod = 1;
        for (int mm = 1; mm < kk; ++mm) {
            prod = prod * H[(kk - mm) * N + (kk - mm - 1)] % p;
            std::int64_t coef = H[(kk - mm - 1) * N + (kk - 1)] * prod % p;
            if (!coef)
                continue;
            const std::int64_t *q = P + (kk - mm - 1) * (N + 1);
            for (int d = 0; d <= kk - mm - 1; ++d)
                cur[d] = (cur[d] - coef * q[d] % p + p) % p;
        }
    }
    for (int d = 0; d <= N; ++d)
        out[d] = P[N * (N + 1) + d];
}

/* minimal polynomial of T (= A B) equals its characteristic polynomial;
   Krylov sequences of the standard basis vectors, lcm of the local minimal polynomials */
inline bool is_regular_mod_p(const std::int64_t *B, int N, const PrimeField &k)
{
    std::int64_t p = k.p;
    std::int64_t T[81];
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            T[i * N + j] = B[(N - 1 - i) * N + j];
    fpoly acc{1};
    for (int s = 0; s < N; ++s) {
        std::int64_t red[10][9], comb[10][10];
        int pivot[10];
        std::int64_t v[9], nv[9];
        for (int i = 0; i < N; ++i)
            v[i] = (i == s);
        int d = 0;
        fpoly local;
        for (;;) {
            std::int64_t r[9], c[10] = {0};
            for (int i = 0; i < N; ++i)
                r[i] = v[i];
            c[d] = 1;
            for (int t = 0; t < d; ++t) {
                std::int64_t x = r[pivot[t]];
                if (!x)
                    continue;
                for (int i = 0; i < N; ++i)
                    r[i] = (r[i] - x * red[t][i] % p + p) % p;
                for (int i = 0; i <= t; ++i)
                    c[i] = (c[i] - x * comb[t][i] % p + p) % p;
            }
            int pv = -1;
            for (int i = 0; i < N; ++i)
                if (r[i]) {
                    pv = i;
                    break;
                }
            if (pv < 0) {
                local.assign(c, c + d + 1);
                break;
            }
            std::int64_t inv = k.inv(r[pv]);
            for (int i = 0; i < N; ++i)
                red[d][i] = r[i] * inv % p;
            for (int i = 0; i <= d; ++i)
                comb[d][i] = c[i] * inv % p;
            pivot[d] = pv;
            ++d;
            if (d == N)
                return true;
            for (int i = 0; i < N; ++i) {
                std::int64_t t = 0;
                for (int j = 0; j < N; ++j)
                    t += T[i * N + j] * v[j];
                nv[i] = t % p;
            }
            for (int i = 0; i < N; ++i)
                v[i] = nv[i];
        }
        fp::trim(local);
        fpoly g = fp::gcd(acc, local, k);
        acc = fp::divmod(fp::mul(acc, local, k), g, k).first;
        if (fp::deg(acc) == N)
            return true;
    }
    return false;
}

/* g^T B g for B, g given as dense N x N arrays */
inline void conjugate_mod_p(const std::int64_t *B, const FpMat &g, std::int64_t *out, std::int64_t p)
{
    int N = g.N;
    std::int64_t C[81];
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            std::int64_t t = 0;
            for (int l = 0; l < N; ++l)
                if (g(l, j))
                    t += B[i * N + l] * g(l, j);
            C[i * N + j] = t % p;
        }
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            std::int64_t t = 0;
            for (int l = 0; l < N; ++l)
                if (g(l, i))
                    t += g(l, i) * C[l * N + j];
            out[i * N + j] = t % p;
        }
}

inline bool distinguished_shape_mod_p(const std::int64_t *B, int N)
{
    for (int i = 0; i < N; ++i)
        for (int j = 0; i + j < N - 2; ++j)
            if (B[i * N + j])
                return false;
    return true;
}

struct OrbitCensus {
    std::vector<std::int64_t> f;  /* c_2..c_{2n+1} mod p */
    bool separable = false;
    int m = -1;                   /* (number of irreducible factors) - 1 */
    std::uint64_t fiber_size = 0;
    std::uint64_t num_orbits = 0;
    std::vector<std::uint64_t> orbit_sizes;
    std::vector<std::uint64_t> stabilizer_orders; /* brute force, per orbit */
    std::vector<std::uint64_t> representatives;   /* box codes */
    std::uint64_t distinguished_orbits = 0;
    std::uint64_t distinguished_size = 0;
    std::uint64_t orbit_size() const { return orbit_sizes.empty() ? 0 : orbit_sizes[0]; }
    std::uint64_t stabilizer_order() const { return stabilizer_orders.empty() ? 0 : stabilizer_orders[0]; }
};

struct SpaceCensus {
    int n = 1;
    std::int64_t p = 3;
    std::uint64_t total = 0;
    std::uint64_t regular = 0;
    std::uint64_t separable_polys = 0;
    std::uint64_t separable_fiber_total = 0;
    std::uint64_t group_order = 0; /* size of the generated group, if computed */
    std::vector<OrbitCensus> fibers; /* indexed by polynomial code */
};

inline std::vector<std::int64_t> decode_poly(std::uint64_t fc, int n, std::int64_t p)
{
    std::vector<std::int64_t> c(2 * n);
    for (auto &v : c) {
        v = static_cast<std::int64_t>(fc % p);
        fc /= p;
    }
    return c;
}

inline std::uint64_t encode_poly(const std::vector<std::int64_t> &c, std::int64_t p)
{
    std::uint64_t fc = 0;
    for (size_t t = c.size(); t-- > 0;)
        fc = fc * p + static_cast<std::uint64_t>(((c[t] % p) + p) % p);
    return fc;
}

inline fpoly poly_from_coeffs(const std::vector<std::int64_t> &c, const PrimeField &k)
{
    int N = static_cast<int>(c.size()) + 1;
    fpoly f(N + 1, 0);
    f[N] = 1;
    for (size_t t = 0; t < c.size(); ++t)
        f[N - 2 - t] = ((c[t] % k.p) + k.p) % k.p;
    fp::trim(f);
    return f;
}

struct CensusOptions {
    unsigned workers = 1;
    bool orbits = true;
    bool stabilizers = true;
    long only_poly = -1; /* restrict orbit work to one polynomial code */
    std::uint64_t max_box = 50000000;
};

/* Exhaustive census of V(F_p): fibres of the invariant map, regular vectors,
   and (optionally) SO(W)(F_p)-orbits inside every separable fibre. */
inline SpaceCensus space_census(int n, std::int64_t p, const CensusOptions &opt = {})
{
    require(n >= 1, "genus must be positive");
    if (p == 2)
        throw unsupported_error("census over F_2 is not supported");
    VBox box(n, p);
    if (box.size() > opt.max_box)
        throw infeasible_error("census box p^{n(2n+3)} exceeds the enumeration cap");
    const PrimeField &k = box.field();
    int N = box.N();
    std::uint64_t npoly = 1;
    for (int i = 0; i < 2 * n; ++i)
        npoly *= static_cast<std::uint64_t>(p);

    SpaceCensus out;
    out.n = n;
    out.p = p;
    out.total = box.size();
    out.fibers.resize(npoly);
    for (std::uint64_t fc = 0; fc < npoly; ++fc) {
        auto &F = out.fibers[fc];
        F.f = decode_poly(fc, n, p);
        fpoly f = poly_from_coeffs(F.f, k);
        F.separable = fp::is_squarefree(f, k);
        if (F.separable) {
            F.m = static_cast<int>(fp::factor_degrees_squarefree(f, k).size()) - 1;
            ++out.separable_polys;
        }
    }

    /* pass 1: invariants and regularity of every vector, chunked */
    std::vector<std::uint32_t> fcode(box.size());
    const std::uint64_t chunk = 1 << 16;
    size_t nchunks = static_cast<size_t>((box.size() + chunk - 1) / chunk);
    struct Partial {
        std::uint64_t regular = 0;
        std::vector<std::uint64_t> counts;
    };
    auto parts = run_chunks(nchunks, opt.workers, [&](size_t ci) {
        Partial r;
        r.counts.assign(npoly, 0);
        std::int64_t B[81], cp[10];
        std::uint64_t lo = ci * chunk, hi = std::min<std::uint64_t>(box.size(), lo + chunk);
        for (std::uint64_t code = lo; code < hi; ++code) {
            box.decode(code, B);
            charpoly_mod_p(B, N, k, cp);
            std::uint64_t fc = 0;
            for (int mm = N; mm >= 2; --mm)
                fc = fc * p + static_cast<std::uint64_t>(cp[N - mm]);
            fcode[code] = static_cast<std::uint32_t>(fc);
            ++r.counts[fc];
            if (is_regular_mod_p(B, N, k))
                ++r.regular;
        }
        return r;
    });
    for (auto &pt : parts) {
        out.regular += pt.regular;
        for (std::uint64_t fc = 0; fc < npoly; ++fc)
            out.fibers[fc].fiber_size += pt.counts[fc];
    }
    for (auto &F : out.fibers)
        if (F.separable)
            out.separable_fiber_total += F.fiber_size;
    if (!opt.orbits)
        return out;

    /* pass 2: orbit partition of the separable fibres by BFS over generators */
    auto gens = so_generators(n, p);
    std::vector<std::int32_t> orbit(box.size(), -1);
    std::vector<std::uint64_t> queue;
    std::int64_t B[81], C[81];
    std::int32_t next_id = 0;
    for (std::uint64_t code = 0; code < box.size(); ++code) {
        if (orbit[code] >= 0)
            continue;
        std::uint32_t fc = fcode[code];
        auto &F = out.fibers[fc];
        if (!F.separable || (opt.only_poly >= 0 && fc != static_cast<std::uint64_t>(opt.only_poly)))
            continue;
        std::int32_t id = next_id++;
        orbit[code] = id;
        queue.assign(1, code);
        bool dist = false;
        for (size_t at = 0; at < queue.size(); ++at) {
            box.decode(queue[at], B);
            if (!dist && distinguished_shape_mod_p(B, N))
                dist = true;
            for (auto &g : gens) {
                conjugate_mod_p(B, g, C, p);
                std::uint64_t c2 = box.encode(C);
                if (orbit[c2] < 0) {
                    orbit[c2] = id;
                    queue.push_back(c2);
                }
            }
        }
        F.orbit_sizes.push_back(queue.size());
        F.representatives.push_back(code);
        ++F.num_orbits;
        if (dist) {
            ++F.distinguished_orbits;
            F.distinguished_size = queue.size();
        }
    }
    if (!opt.stabilizers)
        return out;

    auto group = group_closure(gens, k);
    out.group_order = group.size();
    for (auto &F : out.fibers)
        for (auto rep : F.representatives) {
            box.decode(rep, B);
            std::uint64_t stab = 0;
            for (auto &g : group) {
                conjugate_mod_p(B, g, C, p);
                bool same = true;
                for (int i = 0; i < N * N && same; ++i)
                    same = C[i] == B[i];
                stab += same;
            }
            F.stabilizer_orders.push_back(stab);
        }
    return out;
}

/* census of the single fibre above f (c_2..c_{2n+1}) */
inline OrbitCensus census_fixed_poly(int n, std::int64_t p, const std::vector<Z> &c, unsigned workers = 1)
{
    PrimeField k(p);
    require(static_cast<int>(c.size()) == 2 * n, "census_fixed_poly: need 2n coefficients");
    std::vector<std::int64_t> cc;
    for (auto &v : c)
        cc.push_back(k.from(v));
    if (!fp::is_squarefree(poly_from_coeffs(cc, k), k))
        throw validation_error("census_fixed_poly: f is not separable mod p");
    CensusOptions opt;
    opt.workers = workers;
    opt.only_poly = static_cast<long>(encode_poly(cc, p));
    auto sc = space_census(n, p, opt);
    return sc.fibers[opt.only_poly];
}

/* (reducible separable count, separable count) over trace-zero monic f mod p */
inline std::pair<std::uint64_t, std::uint64_t> reducible_poly_density(int n, std::int64_t p)
{
    PrimeField k(p);
    std::uint64_t npoly = 1;
    for (int i = 0; i < 2 * n; ++i) {
        npoly *= static_cast<std::uint64_t>(p);
        if (npoly > 100000000ULL)
            throw infeasible_error("reducible_poly_density: p^{2n} too large");
    }
    std::uint64_t red = 0, sep = 0;
    for (std::uint64_t fc = 0; fc < npoly; ++fc) {
        fpoly f = poly_from_coeffs(decode_poly(fc, n, p), k);
        if (!fp::is_squarefree(f, k))
            continue;
        ++sep;
        if (fp::factor_degrees_squarefree(f, k).size() >= 2)
            ++red;
    }
    return {red, sep};
}

} // namespace selorb

#endif
