// selorb: command-line workbench over the selorb headers.
#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "selorb/curves/curve.hpp"
#include "selorb/descent/descent.hpp"
#include "selorb/harness/experiments.hpp"
#include "selorb/orbit/distinguished.hpp"
#include "selorb/orbit/real.hpp"
#include "selorb/orbit/rep.hpp"
#include "selorb/padic/chabauty.hpp"
#include "selorb/padic/local.hpp"

using namespace selorb;

namespace {

struct Globals {
    int n = 1;
    std::string X = "100";
    std::vector<long> p;
    long prec = -1;
    unsigned workers = 1;
    std::string out, cache_dir, format = "json", config;
    bool timing = false;
};

const auto started = std::chrono::steady_clock::now();

/* wall time goes to stderr so reports stay byte-identical */
void emit(const StatReport &r, const Globals &g)
{
    std::string text = render(r, g.format);
    if (g.timing)
        std::cerr << r.id << ": "
                  << std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count() << " s\n";
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f)
        throw validation_error("cannot write " + g.out);
    f << text;
}

ExperimentConfig make_config(Globals &g, const std::string &sub)
{
    ExperimentConfig c;
    if (!g.config.empty())
        c = ExperimentConfig::from_file(g.config);
    c.subcommand = sub;
    c.n = g.n;
    c.X = parse_Z(g.X);
    if (!g.p.empty())
        c.primes = g.p;
    if (g.prec != -1)
        c.prec = g.prec;
    c.workers = g.workers;
    c.cache_dir = g.cache_dir.empty() ? c.cache_dir : g.cache_dir;
    c.format = g.format;
    c.timing = c.timing || g.timing;
    g.timing = c.timing;
    c.validate();
    return c;
}

json rep_json(const OperatorRepQ &r)
{
    json j;
    j["n"] = r.n;
    j["B"] = matrix_json(r.B);
    json inv = json::array();
    for (auto &c : invariants(r))
        inv.push_back(c.get_str());
    j["invariants"] = inv;
    auto t = reducibility_block_tests(r);
    j["disc_zero_block"] = t.disc_zero_block;
    j["distinguished_shape"] = t.distinguished_shape;
    return j;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"selorb: orbits, descent and local data for odd hyperelliptic curves"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--n", g.n, "genus");
    app.add_option("--X", g.X, "height bound");
    app.add_option("--p", g.p, "prime(s)")->delimiter(',');
    app.add_option("--prec", g.prec, "p-adic precision / series truncation");
    app.add_option("--workers", g.workers, "worker threads");
    app.add_option("--out", g.out, "output file (default stdout)");
    app.add_option("--cache-dir", g.cache_dir, "curve cache directory");
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--config", g.config, "JSON experiment config (strict)");
    app.add_flag("--timing", g.timing, "report wall time on stderr");

    auto *enumerate = app.add_subcommand("enumerate", "curve counts by height");
    std::uint64_t cap = 0;
    enumerate->add_option("--cap", cap, "only the first N curves");

    auto *ffcensus = app.add_subcommand("ffcensus", "exhaustive census of V(F_p)");
    bool no_orbits = false;
    ffcensus->add_flag("--no-orbits", no_orbits, "skip the orbit partition");

    auto *ffcount = app.add_subcommand("ffcount", "orbit census of one fibre (or all fibres)");
    std::string ffpoly;
    ffcount->add_option("--poly", ffpoly, "c2,...,c_{2n+1} mod p");

    auto *descent = app.add_subcommand("descent", "divisor to orbit pipeline");
    std::string dcurve, dpoints, dinput;
    descent->add_option("mode", dinput, "'orbit' for a single divisor, or a point file path");
    descent->add_option("--curve", dcurve, "c2,...,c_{2n+1}");
    descent->add_option("--points", dpoints, "(a1,b1),(a2,b2),...");
    descent->add_option("--input", dinput, "JSON point file");

    auto *chab = app.add_subcommand("chabauty", "3-adic Chabauty bounds");
    std::string ccurve;
    chab->add_option("--curve", ccurve, "single curve c2,...");

    auto *mass = app.add_subcommand("localmass", "local mass ratios rho_v");
    std::string mcurve;
    mass->add_option("--curve", mcurve, "single curve c2,...");

    app.add_subcommand("lemmacheck", "weight identities and the combinatorial lemma");

    auto *orbit = app.add_subcommand("orbit", "distinguished or nilpotent representatives");
    std::string opoly, nil;
    std::string od = "1";
    orbit->add_option("--poly", opoly, "c2,...,c_{2n+1} (distinguished orbit)");
    orbit->add_option("--nilpotent", nil, "regular or subregular")->check(CLI::IsMember({"regular", "subregular"}));
    orbit->add_option("--d", od, "parameter of the subregular representative");

    auto *padic = app.add_subcommand("padic", "factor shapes and Strassmann bounds");
    std::string pmode, ppoly, pcurve;
    padic->add_option("mode", pmode, "shape or chabauty")->required()->check(CLI::IsMember({"shape", "chabauty"}));
    padic->add_option("--poly", ppoly, "c2,...,c_{2n+1}");
    padic->add_option("--curve", pcurve, "c2,...,c_{2n+1}");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) {
            auto c = make_config(g, "enumerate");
            if (cap)
                c.sample_cap = cap;
            emit(run_enumerate(c), g);
        } else if (ffcensus->parsed()) {
            auto c = make_config(g, "ffcensus");
            c.orbits = !no_orbits && c.orbits;
            emit(run_ffcensus(c), g);
        } else if (ffcount->parsed()) {
            if (g.p.size() != 1)
                throw validation_error("ffcount: give exactly one --p");
            std::vector<Z> poly;
            if (!ffpoly.empty()) {
                poly = parse_int_list(ffpoly);
                if (static_cast<int>(poly.size()) != 2 * g.n)
                    throw validation_error("ffcount: --poly needs 2n coefficients");
            }
            emit(run_ffcount(g.n, g.p[0], poly, g.workers), g);
        } else if (descent->parsed()) {
            if (dinput == "orbit" || !dcurve.empty()) {
                if (dcurve.empty())
                    throw validation_error("descent orbit: --curve is required");
                DescentItem item{curve_from_list(parse_int_list(dcurve)), dpoints.empty() ? std::vector<std::pair<Z, Z>>{} : parse_points(dpoints)};
                std::vector<long> primes = g.p.empty() ? std::vector<long>{5} : g.p;
                for (long p : primes)
                    if (p == 2)
                        throw unsupported_error("descent: p = 2 is not supported");
                StatReport r;
                r.id = "descent-orbit";
                json row = descent_certificate(item, primes, g.prec > 0 ? static_cast<unsigned>(g.prec) : 6, true);
                for (auto it = row.begin(); it != row.end(); ++it)
                    r.data[it.key()] = it.value();
                emit(r, g);
            } else {
                auto c = make_config(g, "descent");
                if (!dinput.empty())
                    c.input = dinput;
                emit(run_descent(c), g);
            }
        } else if (chab->parsed()) {
            if (!ccurve.empty()) {
                HyperCurve C = curve_from_list(parse_int_list(ccurve));
                StatReport r;
                r.id = "chabauty-curve";
                json j = chabauty_json(C, chabauty_bound_at_3(C, g.prec > 0 ? static_cast<int>(g.prec) : -1));
                for (auto it = j.begin(); it != j.end(); ++it)
                    r.data[it.key()] = it.value();
                emit(r, g);
            } else
                emit(run_chabauty(make_config(g, "chabauty")), g);
        } else if (mass->parsed()) {
            if (!mcurve.empty()) {
                StatReport r;
                r.id = "localmass-curve";
                json j = local_mass_json(curve_from_list(parse_int_list(mcurve)));
                for (auto it = j.begin(); it != j.end(); ++it)
                    r.data[it.key()] = it.value();
                emit(r, g);
            } else
                emit(run_local_mass(make_config(g, "localmass")), g);
        } else if (app.got_subcommand("lemmacheck")) {
            auto c = make_config(g, "lemmacheck");
            emit(run_lemmacheck(c), g);
        } else if (orbit->parsed()) {
            StatReport r;
            r.id = "orbit";
            if (!opoly.empty()) {
                auto c = parse_int_list(opoly);
                if (c.size() % 2)
                    throw validation_error("orbit: --poly needs 2n coefficients");
                PolyZ f = curve_poly(c);
                auto rep = distinguished_rep(f);
                r.data["kind"] = "distinguished";
                r.data["f"] = poly_json(f);
                json j = rep_json(rep);
                for (auto it = j.begin(); it != j.end(); ++it)
                    r.data[it.key()] = it.value();
                auto pat = sign_pattern(rep);
                r.data["sign_pattern"] = pat.str();
                auto comp = classify_component(pat);
                r.data["component"] = json{{"m", comp.m}, {"tau", comp.tau}};
            } else if (!nil.empty()) {
                OperatorRep rep = nil == "regular" ? nilpotent_regular(g.n) : nilpotent_subregular(g.n, parse_Z(od));
                OperatorRepQ q(rep.n, to_Q(rep.B));
                r.data["kind"] = nil + " nilpotent";
                json j = rep_json(q);
                for (auto it = j.begin(); it != j.end(); ++it)
                    r.data[it.key()] = it.value();
                r.data["minpoly_degree"] = minpoly_degree(to_Q(operator_matrix(rep)));
            } else
                throw validation_error("orbit: give --poly or --nilpotent");
            emit(r, g);
        } else if (padic->parsed()) {
            StatReport r;
            if (pmode == "shape") {
                if (g.p.size() != 1)
                    throw validation_error("padic shape: give exactly one --p");
                std::string src = ppoly.empty() ? pcurve : ppoly;
                if (src.empty())
                    throw validation_error("padic shape: --poly is required");
                PolyZ f = curve_poly(parse_int_list(src));
                Z p(g.p[0]);
                long prec = g.prec > 0 ? g.prec : default_precision(f, p);
                auto s = factor_shape(f, p, prec);
                r.id = "padic-shape";
                r.data["p"] = g.p[0];
                r.data["prec"] = prec;
                r.data["degrees"] = s.degrees;
                r.data["ramification"] = s.ramification;
                r.data["m"] = s.m();
                int n = (f.deg() - 1) / 2;
                r.data["j2"] = ipow(2, s.m()).get_str();
                r.data["jmod2j"] = ipow(2, p == 2 ? n + s.m() : s.m()).get_str();
            } else {
                std::string src = pcurve.empty() ? ppoly : pcurve;
                if (src.empty())
                    throw validation_error("padic chabauty: --curve is required");
                HyperCurve C = curve_from_list(parse_int_list(src));
                r.id = "padic-chabauty";
                json j = chabauty_json(C, chabauty_bound_at_3(C, g.prec > 0 ? static_cast<int>(g.prec) : -1));
                for (auto it = j.begin(); it != j.end(); ++it)
                    r.data[it.key()] = it.value();
            }
            emit(r, g);
        }
    } catch (const selorb::error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
