#ifndef SELORB_HARNESS_EXPERIMENTS_HPP
#define SELORB_HARNESS_EXPERIMENTS_HPP

#include <chrono>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "../curves/curve.hpp"
#include "../descent/descent.hpp"
#include "../finite/census.hpp"
#include "../orbit/real.hpp"
#include "../orbit/weights.hpp"
#include "../padic/chabauty.hpp"
#include "../padic/local.hpp"
#include "cache.hpp"
#include "config.hpp"
#include "report.hpp"

namespace selorb {

/* "2,2" or "(2,3)" style lists of integers */
inline std::vector<Z> parse_int_list(const std::string &s)
{
    std::vector<Z> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == '(' || ch == ')' || ch == '[' || ch == ']' || ch == ' ')
            continue;
        if (ch == ',') {
            if (cur.empty())
                throw validation_error("cannot parse integer list '" + s + "'");
            out.push_back(parse_Z(cur));
            cur.clear();
        } else
            cur += ch;
    }
    return out;
}

inline HyperCurve curve_from_list(const std::vector<Z> &c)
{
    if (c.empty() || c.size() % 2)
        throw validation_error("a curve needs 2n coefficients c_2..c_{2n+1}");
    return HyperCurve{static_cast<int>(c.size() / 2), c};
}

/* "(2,3),(0,1)" -> points */
inline std::vector<std::pair<Z, Z>> parse_points(const std::string &s)
{
    auto v = parse_int_list(s);
    if (v.size() % 2)
        throw validation_error("points need an even number of coordinates");
    std::vector<std::pair<Z, Z>> out;
    for (size_t i = 0; i < v.size(); i += 2)
        out.push_back({v[i], v[i + 1]});
    return out;
}

namespace detail {

/* H(C) < X / den, exactly */
inline bool height_below_frac(const HyperCurve &C, const Z &X, const Z &den)
{
    long N = 2L * C.n * (2 * C.n + 1);
    for (int k = 2; k <= 2 * C.n + 1; ++k)
        if (ipow(abs(C.coef(k)), N) * ipow(den, k) >= ipow(X, k))
            return false;
    return true;
}

inline std::vector<HyperCurve> capped(std::vector<HyperCurve> v, std::uint64_t cap)
{
    if (cap && v.size() > cap)
        v.resize(cap);
    return v;
}

} // namespace detail

inline StatReport run_enumerate(const ExperimentConfig &cfg)
{
    StatReport r;
    r.id = "enumerate";
    auto curves = detail::capped(cached_curves(cfg.n, cfg.X, cfg.cache_dir, cfg.workers), cfg.sample_cap);
    r.data["config"] = cfg.to_json();
    Z total = curves.size();
    r.data["total"] = total.get_str();
    json buckets = json::array();
    for (int j = 0; j <= 4; ++j) {
        Z den = ipow(2, j), cnt = 0;
        for (auto &C : curves)
            if (detail::height_below_frac(C, cfg.X, den))
                ++cnt;
        buckets.push_back(json{{"height_below", frac(Q(cfg.X, den))}, {"count", cnt.get_str()}});
    }
    r.data["buckets"] = buckets;
    std::map<int, Z> hist;
    Z pass3 = 0, good7 = 0;
    for (auto &C : curves) {
        hist[real_component(C.f())] += 1;
        if (mod3_chabauty_filter(C))
            ++pass3;
        if (curve_discriminant(C) % 7 != 0)
            ++good7;
    }
    json h = json::array();
    Z hsum = 0;
    for (auto &[m, c] : hist) {
        h.push_back(json{{"m", m}, {"count", c.get_str()}});
        hsum += c;
    }
    r.data["component_histogram"] = h;
    r.data["histogram_sums_to_total"] = hsum == total;
    if (total > 0) {
        r.data["mod3_filter_rate"] = frac(pass3, total);
        Q rate(good7, total);
        rate.canonicalize();
        r.data["good_reduction_at_7_rate"] = frac(good7, total);
        r.data["good_reduction_at_7_expected"] = frac(Q(6, 7));
        r.data["good_reduction_at_7_within_0.02"] = abs(rate - Q(6, 7)) <= Q(1, 50);
    }
    return r;
}

inline json fiber_json(const OrbitCensus &F, std::int64_t p)
{
    json j;
    json f = json::array();
    for (auto v : F.f)
        f.push_back(std::to_string(v));
    j["f"] = f;
    j["p"] = p;
    j["m"] = F.m;
    j["fiber_size"] = F.fiber_size;
    j["num_orbits"] = F.num_orbits;
    j["orbit_size"] = F.orbit_size();
    j["stabilizer_order"] = F.stabilizer_order();
    j["orbit_sizes"] = F.orbit_sizes;
    j["stabilizer_orders"] = F.stabilizer_orders;
    j["distinguished_orbits"] = F.distinguished_orbits;
    j["distinguished_size"] = F.distinguished_size;
    return j;
}

/* structural checks on one separable fibre */
inline bool fiber_structure_ok(const OrbitCensus &F, std::uint64_t so)
{
    std::uint64_t two_m = std::uint64_t(1) << F.m;
    if (F.fiber_size != so || F.num_orbits != two_m || F.distinguished_orbits != 1)
        return false;
    if (F.distinguished_size * two_m != so)
        return false;
    for (size_t i = 0; i < F.orbit_sizes.size(); ++i) {
        if (F.stabilizer_orders.size() > i && F.orbit_sizes[i] * F.stabilizer_orders[i] != so)
            return false;
        if (F.stabilizer_orders.size() > i && F.stabilizer_orders[i] != two_m)
            return false;
    }
    return true;
}

inline StatReport run_ffcensus(const ExperimentConfig &cfg)
{
    StatReport r;
    r.id = "ffcensus";
    r.data["config"] = cfg.to_json();
    std::vector<long> primes = cfg.primes.empty() ? std::vector<long>{3} : cfg.primes;
    json rows = json::array();
    json fibers = json::array();
    bool all_ok = true;
    for (long p : primes) {
        if (p == 2)
            throw unsupported_error("ffcensus: characteristic 2 is not supported");
        VBox box(cfg.n, p);
        CensusOptions opt;
        opt.workers = cfg.workers;
        opt.orbits = cfg.orbits && box.size() <= 2000000;
        opt.stabilizers = opt.orbits;
        auto sc = space_census(cfg.n, p, opt);
        std::uint64_t so = to_u64(so_order(cfg.n, Z(p)));
        std::uint64_t p2n = 1;
        for (int i = 0; i < 2 * cfg.n; ++i)
            p2n *= static_cast<std::uint64_t>(p);
        bool fibers_ok = true, structure_ok = true;
        for (auto &F : sc.fibers) {
            if (!F.separable)
                continue;
            fibers_ok = fibers_ok && F.fiber_size == so;
            if (opt.orbits) {
                structure_ok = structure_ok && fiber_structure_ok(F, so);
                fibers.push_back(fiber_json(F, p));
            }
        }
        json row;
        row["p"] = p;
        row["total"] = sc.total;
        row["regular"] = sc.regular;
        row["regular_expected"] = Z(Z(static_cast<unsigned long>(p2n)) * Z(static_cast<unsigned long>(so))).get_str();
        row["regular_ok"] = sc.regular == p2n * so;
        row["so_order"] = so;
        row["separable_polys"] = sc.separable_polys;
        row["separable_fiber_total"] = sc.separable_fiber_total;
        row["fiber_identity_ok"] = sc.separable_fiber_total == sc.separable_polys * so && fibers_ok;
        row["orbits_computed"] = opt.orbits;
        if (opt.orbits) {
            row["group_closure"] = sc.group_order;
            row["orbit_structure_ok"] = structure_ok && sc.group_order == so;
        }
        all_ok = all_ok && row["regular_ok"].get<bool>() && row["fiber_identity_ok"].get<bool>() &&
                 (!opt.orbits || row["orbit_structure_ok"].get<bool>());
        rows.push_back(row);
    }
    r.data["all_ok"] = all_ok;
    r.data["rows"] = rows;
    if (!fibers.empty())
        r.data["fibers"] = fibers;
    return r;
}

/* single fibre, or every separable fibre when no polynomial is given */
inline StatReport run_ffcount(int n, long p, const std::vector<Z> &poly, unsigned workers)
{
    StatReport r;
    r.id = "ffcount";
    if (p == 2)
        throw unsupported_error("ffcount: characteristic 2 is not supported");
    std::uint64_t so = to_u64(so_order(n, Z(p)));
    r.data["n"] = n;
    r.data["p"] = p;
    r.data["so_order"] = so;
    if (!poly.empty()) {
        auto F = census_fixed_poly(n, p, poly, workers);
        json j = fiber_json(F, p);
        for (auto it = j.begin(); it != j.end(); ++it)
            r.data[it.key()] = it.value();
        r.data["structure_ok"] = fiber_structure_ok(F, so);
        return r;
    }
    CensusOptions opt;
    opt.workers = workers;
    auto sc = space_census(n, p, opt);
    json rows = json::array();
    bool ok = true;
    for (auto &F : sc.fibers)
        if (F.separable) {
            json j = fiber_json(F, p);
            j["structure_ok"] = fiber_structure_ok(F, so);
            ok = ok && j["structure_ok"].get<bool>();
            rows.push_back(j);
        }
    r.data["structure_ok"] = ok;
    r.data["rows"] = rows;
    return r;
}

struct DescentItem {
    HyperCurve C;
    std::vector<std::pair<Z, Z>> points;
};

/* integral points with |x| <= bound and y > 0, never claimed complete */
inline std::vector<std::pair<Z, Z>> small_point_scan(const HyperCurve &C, long bound)
{
    std::vector<std::pair<Z, Z>> out;
    PolyZ f = C.f();
    for (long x = -bound; x <= bound; ++x) {
        Z v = f.eval(Z(x));
        if (v <= 0)
            continue;
        Z s = sqrt(v);
        if (s * s == v)
            out.push_back({Z(x), s});
    }
    return out;
}

inline std::vector<DescentItem> read_descent_items(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw validation_error("descent: cannot open point file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception &e) {
        throw validation_error(std::string("descent: malformed point file: ") + e.what());
    }
    if (j.is_object() && j.contains("items"))
        j = j["items"];
    if (!j.is_array())
        throw validation_error("descent: point file must hold an array of items");
    std::vector<DescentItem> items;
    try {
        for (auto &it : j) {
            std::vector<Z> c;
            for (auto &v : it.at("curve"))
                c.push_back(v.is_string() ? parse_Z(v.get<std::string>()) : Z(v.get<long>()));
            HyperCurve C = curve_from_list(c);
            if (it.contains("search")) {
                for (auto &pt : small_point_scan(C, std::min<long>(1000, it["search"].get<long>())))
                    items.push_back({C, {pt}});
                continue;
            }
            DescentItem d{C, {}};
            for (auto &pt : it.at("points")) {
                auto get = [](const json &v) { return v.is_string() ? parse_Z(v.get<std::string>()) : Z(v.get<long>()); };
                d.points.push_back({get(pt.at(0)), get(pt.at(1))});
            }
            items.push_back(d);
        }
    } catch (const json::exception &e) {
        throw validation_error(std::string("descent: malformed item: ") + e.what());
    }
    return items;
}

inline json descent_certificate(const DescentItem &item, const std::vector<long> &primes, unsigned k, bool with_matrices)
{
    json row;
    row["curve"] = coeffs_json(item.C.c);
    json pts = json::array();
    for (auto &[a, b] : item.points)
        pts.push_back(json::array({a.get_str(), b.get_str()}));
    row["points"] = pts;
    PolyZ f = item.C.f();
    auto D = mumford_from_points(item.points, f);
    auto I = ideal_from_divisor(D, f);
    auto a = delta_class(D, f);
    auto g = gram_pair(I, a, f);
    Z prodb = 1;
    for (auto &pt : item.points)
        prodb *= abs(pt.second);
    if (with_matrices) {
        row["gram"] = matrix_json(g.G);
        row["mult"] = matrix_json(g.M);
    }
    row["norm_ideal"] = g.norm_ideal.get_str();
    row["norm_alpha"] = g.norm_alpha.get_str();
    row["norm_matches_points"] = g.norm_ideal == prodb;
    row["unimodular"] = g.unimodular;
    row["symmetric"] = g.symmetric;
    row["charpoly_ok"] = g.charpoly_ok;
    json local = json::array();
    bool ok = g.certificate() && g.norm_ideal == prodb;
    for (long p : primes) {
        auto o = integral_orbit_zp(item.C, D, Z(p), k);
        json lj;
        lj["p"] = p;
        lj["prec"] = k;
        lj["invariants_ok"] = o.invariants_ok;
        lj["symmetric"] = o.symmetric;
        if (with_matrices)
            lj["B"] = matrix_json(o.B.B);
        ok = ok && o.invariants_ok && o.symmetric;
        local.push_back(lj);
    }
    row["local"] = local;
    row["status"] = ok ? "ok" : "failed";
    return row;
}

inline StatReport run_descent(const ExperimentConfig &cfg)
{
    StatReport r;
    r.id = "descent";
    r.data["config"] = cfg.to_json();
    if (cfg.input.empty())
        throw validation_error("descent: a point file is required");
    auto items = read_descent_items(cfg.input);
    std::vector<long> primes = cfg.primes.empty() ? std::vector<long>{5, 7} : cfg.primes;
    unsigned k = cfg.prec > 0 ? static_cast<unsigned>(cfg.prec) : 6;
    json rows = json::array();
    std::map<std::string, long> taxonomy{{"ok", 0}, {"non_integral_R", 0}, {"weierstrass_point", 0},
                                         {"p_equals_2", 0}, {"invalid_input", 0}, {"failed", 0}};
    for (auto &item : items) {
        json row;
        try {
            for (long p : primes)
                if (p == 2)
                    throw unsupported_error("p = 2");
            row = descent_certificate(item, primes, k, false);
            taxonomy[row["status"].get<std::string>()] += 1;
        } catch (const unsupported_error &e) {
            std::string w = e.what();
            std::string kind = w.find("Weierstrass") != std::string::npos ? "weierstrass_point"
                               : w.find("non-integral") != std::string::npos ? "non_integral_R"
                               : "p_equals_2";
            row = json{{"curve", coeffs_json(item.C.c)}, {"status", kind}, {"reason", w}};
            taxonomy[kind] += 1;
        } catch (const validation_error &e) {
            row = json{{"curve", coeffs_json(item.C.c)}, {"status", "invalid_input"}, {"reason", e.what()}};
            taxonomy["invalid_input"] += 1;
        }
        rows.push_back(row);
    }
    json tj;
    for (auto &[kname, v] : taxonomy)
        tj[kname] = v;
    r.data["items"] = items.size();
    r.data["taxonomy"] = tj;
    long supported = taxonomy["ok"] + taxonomy["failed"];
    if (supported > 0)
        r.data["success_rate"] = frac(Z(taxonomy["ok"]), Z(supported));
    r.data["rows"] = rows;
    return r;
}

inline json chabauty_json(const HyperCurve &C, const ChabautyReport &rep)
{
    json j;
    j["curve"] = coeffs_json(C.c);
    j["applicable"] = rep.applicable;
    if (!rep.applicable)
        return j;
    j["bound"] = rep.bound;
    j["rank_assumption"] = rep.rank_assumption;
    json ds = json::array();
    for (auto &d : rep.differentials)
        ds.push_back(json{{"i", d.i},
                          {"unit_condition", d.unit_condition},
                          {"strassmann", d.strassmann.bound},
                          {"refined", d.strassmann.refined}});
    j["differentials"] = ds;
    return j;
}

inline StatReport run_chabauty(const ExperimentConfig &cfg)
{
    StatReport r;
    r.id = "chabauty";
    r.data["config"] = cfg.to_json();
    auto curves = detail::capped(cached_curves(cfg.n, cfg.X, cfg.cache_dir, cfg.workers), cfg.sample_cap);
    struct Part {
        long passing = 0, le3 = 0;
        int maxb = -1;
        json rows = json::array();
    };
    size_t chunk = 256, nch = (curves.size() + chunk - 1) / chunk;
    auto parts = run_chunks(nch, cfg.workers, [&](size_t ci) {
        Part pt;
        for (size_t i = ci * chunk; i < std::min(curves.size(), (ci + 1) * chunk); ++i) {
            if (!mod3_chabauty_filter(curves[i]))
                continue;
            auto rep = chabauty_bound_at_3(curves[i], cfg.prec > 0 ? static_cast<int>(cfg.prec) : -1);
            ++pt.passing;
            pt.le3 += rep.bound <= 3;
            pt.maxb = std::max(pt.maxb, rep.bound);
            pt.rows.push_back(chabauty_json(curves[i], rep));
        }
        return pt;
    });
    long passing = 0, le3 = 0;
    int maxb = -1;
    json rows = json::array();
    for (auto &pt : parts) {
        passing += pt.passing;
        le3 += pt.le3;
        maxb = std::max(maxb, pt.maxb);
        for (auto &row : pt.rows)
            rows.push_back(row);
    }
    r.data["curves"] = curves.size();
    r.data["passing_filter"] = passing;
    r.data["max_bound"] = maxb;
    r.data["all_at_most_3"] = le3 == passing;
    r.data["rank_assumption"] = "rank of J(Q) at most 1 is assumed, not verified";
    /* constants that depend on that assumption */
    Q two_n = Q(ipow(2, cfg.n));
    Q delta = 1 - Q(2) / (two_n - 1);
    r.data["density_lower_bound"] = frac(delta);
    /* delta*1 + (1-delta)*2^n <= 3 rearranges to delta >= 1 - 2/(2^n - 1) */
    Q rearranged = (two_n - 3) / (two_n - 1);
    r.data["density_rearrangement_ok"] = rearranged == delta && delta + (1 - delta) * two_n == 3;
    r.data["points_bound_with_two_rank_one"] = 15 + 2 * 2;
    r.data["rows"] = rows;
    return r;
}

inline json local_mass_json(const HyperCurve &C)
{
    json j;
    j["curve"] = coeffs_json(C.c);
    try {
        auto table = local_mass_table(C.f());
        Q prod = 1;
        json places = json::array();
        for (auto &lm : table) {
            places.push_back(json{{"place", lm.place == 0 ? std::string("inf") : lm.place.get_str()},
                                  {"m", lm.m},
                                  {"rho", frac(lm.rho)}});
            prod *= lm.rho;
        }
        j["places"] = places;
        j["product"] = frac(prod);
        j["product_is_one"] = prod == 1;
        j["status"] = "ok";
    } catch (const unsupported_error &e) {
        j["status"] = "unsupported";
        j["reason"] = e.what();
    }
    return j;
}

inline StatReport run_local_mass(const ExperimentConfig &cfg)
{
    StatReport r;
    r.id = "localmass";
    r.data["config"] = cfg.to_json();
    auto curves = detail::capped(cached_curves(cfg.n, cfg.X, cfg.cache_dir, cfg.workers), cfg.sample_cap);
    size_t chunk = 64, nch = (curves.size() + chunk - 1) / chunk;
    auto parts = run_chunks(nch, cfg.workers, [&](size_t ci) {
        json rows = json::array();
        for (size_t i = ci * chunk; i < std::min(curves.size(), (ci + 1) * chunk); ++i)
            rows.push_back(local_mass_json(curves[i]));
        return rows;
    });
    long ok = 0, unsupported = 0, one = 0;
    json rows = json::array();
    for (auto &pt : parts)
        for (auto &row : pt) {
            if (row["status"] == "ok") {
                ++ok;
                one += row["product_is_one"].get<bool>();
            } else
                ++unsupported;
            rows.push_back(row);
        }
    r.data["curves"] = curves.size();
    r.data["supported"] = ok;
    r.data["unsupported"] = unsupported;
    r.data["product_one_everywhere"] = one == ok;
    r.data["rows"] = rows;
    return r;
}

inline StatReport run_lemmacheck(const ExperimentConfig &cfg)
{
    StatReport r;
    r.id = "lemmacheck";
    json rows = json::array();
    bool ok = true;
    for (int n = 1; n <= std::min(cfg.n, 4); ++n) {
        auto w = weight_identities(n);
        auto l = combinatorial_lemma_check(n);
        rows.push_back(json{{"n", n},
                            {"weights_ok", w.ok()},
                            {"lower_size", l.lower_size},
                            {"subsets", l.subsets},
                            {"violations", l.violations},
                            {"equalities", l.equalities},
                            {"lemma_ok", l.ok()}});
        ok = ok && w.ok() && l.ok();
    }
    r.data["max_n"] = std::min(cfg.n, 4);
    r.data["all_ok"] = ok;
    r.data["rows"] = rows;
    return r;
}

} // namespace selorb

#endif
