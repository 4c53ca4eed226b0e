#ifndef SELORB_HARNESS_CONFIG_HPP
#define SELORB_HARNESS_CONFIG_HPP

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "report.hpp"

namespace selorb {

struct ExperimentConfig {
    std::string subcommand;
    int n = 1;
    Z X = 100;
    std::vector<long> primes;
    long prec = -1; /* -1: module default */
    std::uint64_t sample_cap = 0; /* 0: no cap */
    std::string out;
    std::string cache_dir;
    std::string format = "json";
    std::string input; /* point file for descent */
    unsigned workers = 1;
    bool orbits = true;
    bool timing = false;

    void validate() const
    {
        if (n < 1)
            throw validation_error("config: n must be positive");
        if (X < 1)
            throw validation_error("config: X must be positive");
        for (long p : primes)
            if (p < 2 || !is_prime(Z(p)))
                throw validation_error("config: " + std::to_string(p) + " is not prime");
        if (prec == 0 || prec < -1)
            throw validation_error("config: precision must be positive");
        if (workers < 1)
            throw validation_error("config: workers must be positive");
        if (format != "json" && format != "csv")
            throw validation_error("config: format must be json or csv");
    }

    /* strict: unknown keys and wrong types are errors */
    static ExperimentConfig from_json(const json &j)
    {
        static const std::set<std::string> known = {"subcommand", "n", "X", "primes", "prec", "sample_cap", "out",
                                                    "cache_dir", "format", "input", "workers", "orbits", "timing"};
        if (!j.is_object())
            throw validation_error("config: expected a JSON object");
        for (auto it = j.begin(); it != j.end(); ++it)
            if (!known.count(it.key()))
                throw validation_error("config: unknown field '" + it.key() + "'");
        ExperimentConfig c;
        try {
            if (j.contains("subcommand"))
                c.subcommand = j["subcommand"].get<std::string>();
            if (j.contains("n"))
                c.n = j["n"].get<int>();
            if (j.contains("X"))
                c.X = j["X"].is_string() ? parse_Z(j["X"].get<std::string>()) : Z(j["X"].get<long>());
            if (j.contains("primes"))
                c.primes = j["primes"].get<std::vector<long>>();
            if (j.contains("prec"))
                c.prec = j["prec"].get<long>();
            if (j.contains("sample_cap"))
                c.sample_cap = j["sample_cap"].get<std::uint64_t>();
            if (j.contains("out"))
                c.out = j["out"].get<std::string>();
            if (j.contains("cache_dir"))
                c.cache_dir = j["cache_dir"].get<std::string>();
            if (j.contains("format"))
                c.format = j["format"].get<std::string>();
            if (j.contains("input"))
                c.input = j["input"].get<std::string>();
            if (j.contains("workers"))
                c.workers = j["workers"].get<unsigned>();
            if (j.contains("orbits"))
                c.orbits = j["orbits"].get<bool>();
            if (j.contains("timing"))
                c.timing = j["timing"].get<bool>();
        } catch (const json::exception &e) {
            throw validation_error(std::string("config: ") + e.what());
        }
        c.validate();
        return c;
    }

    static ExperimentConfig from_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw validation_error("config: cannot open " + path);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception &e) {
            throw validation_error(std::string("config: ") + e.what());
        }
        return from_json(j);
    }

    json to_json() const
    {
        json j;
        j["subcommand"] = subcommand;
        j["n"] = n;
        j["X"] = X.get_str();
        j["primes"] = primes;
        j["prec"] = prec;
        j["sample_cap"] = sample_cap;
        j["format"] = format;
        return j;
    }
};

} // namespace selorb

#endif
