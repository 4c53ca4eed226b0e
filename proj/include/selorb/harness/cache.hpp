#ifndef SELORB_HARNESS_CACHE_HPP
#define SELORB_HARNESS_CACHE_HPP

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "../curves/curve.hpp"
#include "report.hpp"

namespace selorb {

inline json curve_record(const HyperCurve &C)
{
    json j;
    j["n"] = C.n;
    j["c"] = coeffs_json(C.c);
    j["height_num"] = curve_height(C).power_value().get_str();
    j["height_pow"] = Height::pow_needed(C.n);
    j["disc"] = curve_discriminant(C).get_str();
    return j;
}

/* parse one cache line; the stored discriminant must match a fresh computation */
inline HyperCurve curve_from_record(const json &j)
{
    HyperCurve C;
    try {
        C.n = j.at("n").get<int>();
        for (auto &s : j.at("c"))
            C.c.push_back(parse_Z(s.get<std::string>()));
        if (static_cast<int>(C.c.size()) != 2 * C.n)
            throw validation_error("cache: coefficient count does not match n");
        Z disc = parse_Z(j.at("disc").get<std::string>());
        if (disc != curve_discriminant(C))
            throw validation_error("cache: stored discriminant does not match; file is corrupt");
        if (j.contains("height_num") && parse_Z(j["height_num"].get<std::string>()) != curve_height(C).power_value())
            throw validation_error("cache: stored height does not match; file is corrupt");
    } catch (const json::exception &e) {
        throw validation_error(std::string("cache: malformed record: ") + e.what());
    }
    return C;
}

inline std::string cache_path(const std::string &dir, int n, const Z &X)
{
    return (std::filesystem::path(dir) / ("curves_n" + std::to_string(n) + "_X" + X.get_str() + ".jsonl")).string();
}

inline void write_curve_cache(const std::string &path, const std::vector<HyperCurve> &curves)
{
    std::filesystem::path p(path);
    if (p.has_parent_path())
        std::filesystem::create_directories(p.parent_path());
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            throw validation_error("cache: cannot write " + tmp);
        for (auto &C : curves)
            out << curve_record(C).dump() << "\n";
    }
    std::filesystem::rename(tmp, path);
}

inline std::vector<HyperCurve> read_curve_cache(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw validation_error("cache: cannot open " + path);
    std::vector<HyperCurve> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception &) {
            throw validation_error("cache: line " + std::to_string(lineno) + " is not JSON");
        }
        out.push_back(curve_from_record(j));
    }
    return out;
}

/* enumerate through the cache directory when one is given */
inline std::vector<HyperCurve> cached_curves(int n, const Z &X, const std::string &dir, unsigned workers)
{
    if (dir.empty())
        return enumerate_curves(n, X, workers);
    std::string path = cache_path(dir, n, X);
    if (std::filesystem::exists(path))
        return read_curve_cache(path);
    auto curves = enumerate_curves(n, X, workers);
    write_curve_cache(path, curves);
    return curves;
}

} // namespace selorb

#endif
