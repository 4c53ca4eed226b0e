// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "selorb/harness/experiments.hpp"
#include "selorb/orbit/distinguished.hpp"

using namespace selorb;

namespace {

int failures = 0;

void report(const std::string &name, const std::function<std::string(bool &)> &body)
{
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
        detail = body(ok);
    } catch (const std::exception &e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %s  (%s; %.1fs)\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
    failures += !ok;
}

std::uint64_t ipow64(std::uint64_t b, int e)
{
    std::uint64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

} // namespace

int main()
{
    report("n1_fiber_counts", [](bool &ok) {
        std::string d;
        for (long p : {3, 5, 7, 11, 13}) {
            CensusOptions opt;
            opt.orbits = false;
            auto sc = space_census(1, p, opt);
            std::uint64_t want = p * (p * p - 1), bad = 0, sep = 0;
            for (auto &F : sc.fibers)
                if (F.separable) {
                    ++sep;
                    bad += F.fiber_size != want;
                }
            ok = ok && bad == 0 && sep > 0;
            d += "p=" + std::to_string(p) + ":" + std::to_string(sep) + " fibres ";
        }
        return d + "each of size p(p^2-1)";
    });

    report("regular_vector_totals", [](bool &ok) {
        std::string d;
        struct Case {
            int n;
            long p;
            std::uint64_t regular, total;
        };
        /* n=2, p=3: 3^4 * #SO_5(F_3) = 81 * 51840 out of 3^14 */
        for (Case c : {Case{1, 3, 216, 243}, Case{1, 5, 3000, 3125}, Case{1, 7, 16464, 16807},
                       Case{2, 3, 81ULL * 51840, ipow64(3, 14)}}) {
            CensusOptions opt;
            opt.orbits = false;
            auto sc = space_census(c.n, c.p, opt);
            ok = ok && sc.regular == c.regular && sc.total == c.total;
            d += std::to_string(sc.regular) + "/" + std::to_string(sc.total) + " ";
        }
        return d;
    });

    report("orbit_stabilizer_structure", [](bool &ok) {
        long fibres = 0;
        for (long p : {3, 5, 7, 11, 13}) {
            auto sc = space_census(1, p);
            std::uint64_t so = to_u64(so_order(1, Z(p)));
            ok = ok && sc.group_order == so;
            for (auto &F : sc.fibers)
                if (F.separable) {
                    ++fibres;
                    ok = ok && fiber_structure_ok(F, so);
                }
        }
        return std::to_string(fibres) + " fibres with 2^m orbits, stabilisers 2^m, one distinguished orbit";
    });

    report("distinguished_round_trip_500", [](bool &ok) {
        std::mt19937_64 rng(500);
        std::uniform_int_distribution<int> d(-10, 10);
        int done = 0, per_n[4] = {0, 0, 0, 0};
        while (done < 500) {
            int n = 1 + done % 3;
            std::vector<Z> c(2 * n);
            for (auto &v : c)
                v = d(rng);
            HyperCurve C(n, c);
            if (curve_discriminant(C) == 0)
                continue;
            auto r = distinguished_rep(C.f());
            auto inv = invariants(r);
            bool good = r.well_formed() && reducibility_block_tests(r).distinguished_shape;
            for (int m = 0; m < 2 * n; ++m)
                good = good && inv[m] == Q(c[m]);
            ok = ok && good;
            ++done;
            ++per_n[n];
        }
        return "500 random f, n=1:" + std::to_string(per_n[1]) + " n=2:" + std::to_string(per_n[2]) +
               " n=3:" + std::to_string(per_n[3]);
    });

    report("descent_certificates", [](bool &ok) {
        long good = 0, failed = 0, skipped = 0, per_n[3] = {0, 0, 0};
        for (int n : {1, 2}) {
            auto curves = enumerate_curves(n, Z(n == 1 ? 3000 : 100));
            for (auto &C : curves) {
                if (per_n[n] >= 40)
                    break;
                auto pts = small_point_scan(C, 30);
                std::vector<std::vector<std::pair<Z, Z>>> divisors;
                for (auto &pt : pts)
                    divisors.push_back({pt});
                if (n == 2 && pts.size() >= 2)
                    divisors.push_back({pts[0], pts[1]});
                for (auto &D : divisors) {
                    try {
                        auto row = descent_certificate(DescentItem{C, D}, {5, 7}, 6, false);
                        (row["status"] == "ok" ? good : failed) += 1;
                        ++per_n[n];
                    } catch (const unsupported_error &) {
                        ++skipped; /* non-integral R */
                    }
                }
            }
        }
        ok = good >= 50 && failed == 0;
        return "n=1:" + std::to_string(per_n[1]) + " n=2:" + std::to_string(per_n[2]) + "; " + std::to_string(good) + " certified, " + std::to_string(failed) + " failed, " +
               std::to_string(skipped) + " out of scope";
    });

    report("local_mass_product_one", [](bool &ok) {
        long sup = 0, uns = 0;
        for (auto &C : enumerate_curves(1, Z(100))) {
            auto j = local_mass_json(C);
            if (j["status"] != "ok") {
                ++uns;
                continue;
            }
            ++sup;
            ok = ok && j["product_is_one"].get<bool>();
        }
        ok = ok && sup > 0;
        return std::to_string(sup) + " curves with product 1, " + std::to_string(uns) + " unsupported";
    });

    report("chabauty_bound_at_most_3", [](bool &ok) {
        long passing = 0;
        int worst = -1;
        for (auto [n, X] : {std::pair<int, long>{1, 20000}, {2, 200}}) {
            for (auto &C : enumerate_curves(n, Z(X))) {
                if (!mod3_chabauty_filter(C))
                    continue;
                auto rep = chabauty_bound_at_3(C);
                ++passing;
                worst = std::max(worst, rep.bound);
                ok = ok && rep.applicable && rep.bound >= 0 && rep.bound <= 3;
            }
        }
        ok = ok && passing > 0;
        return std::to_string(passing) + " filter-passing curves, max bound " + std::to_string(worst);
    });

    report("weights_and_lemma_n_le_4", [](bool &ok) {
        std::string d;
        for (int n = 1; n <= 4; ++n) {
            auto w = weight_identities(n);
            auto l = combinatorial_lemma_check(n);
            ok = ok && w.ok() && l.ok() && l.subsets == (std::uint64_t(1) << l.lower_size);
            d += std::to_string(l.subsets) + " ";
        }
        return "subsets checked: " + d;
    });

    report("reducible_density", [](bool &ok) {
        std::string d;
        for (long p : {3, 5, 7, 11, 13}) {
            auto [red, sep] = reducible_poly_density(1, p);
            Q dens{Z(red), Z(sep)};
            dens.canonicalize();
            ok = ok && abs(dens - Q(2, 3)) <= Q(10, p);
            d += std::to_string(red) + "/" + std::to_string(sep) + " ";
        }
        return d;
    });

    report("curve_count_scaling", [](bool &ok) {
        std::string d;
        double target = std::pow(4.0, 5.0 / 6.0);
        for (long X : {10000L, 40000L}) {
            double a = static_cast<double>(enumerate_curves(1, Z(X)).size());
            double b = static_cast<double>(enumerate_curves(1, Z(4 * X)).size());
            double ratio = b / a;
            ok = ok && std::abs(ratio / target - 1) <= 0.15;
            char buf[64];
            std::snprintf(buf, sizeof buf, "X=%ld ratio %.4f ", X, ratio);
            d += buf;
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "target %.4f", target);
        return d + buf;
    });

    std::printf("%d failure(s)\n", failures);
    return failures == 0 ? 0 : 1;
}
