#ifndef SELORB_HARNESS_REPORT_HPP
#define SELORB_HARNESS_REPORT_HPP

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../exact/integer.hpp"
#include "../exact/matrix.hpp"
#include "../exact/poly.hpp"

namespace selorb {

using json = nlohmann::ordered_json;

/* exact numerator/denominator plus a decimal rendering */
inline std::string decimal(const Q &q, int digits = 6)
{
    Q a = abs(q);
    Z scale = ipow(10, digits);
    Z r = (a.get_num() * scale * 2 + a.get_den()) / (a.get_den() * 2);
    std::string s = r.get_str();
    if (static_cast<int>(s.size()) <= digits)
        s = std::string(digits + 1 - s.size(), '0') + s;
    s.insert(s.size() - digits, ".");
    return (q < 0 && r != 0 ? "-" : "") + s;
}

inline json frac(const Q &q)
{
    Q c = q;
    c.canonicalize();
    return json{{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}, {"decimal", decimal(c)}};
}

inline json frac(const Z &num, const Z &den)
{
    require(den != 0, "ratio with zero denominator");
    Q q(num, den);
    q.canonicalize();
    json j = frac(q);
    j["num"] = num.get_str();
    j["den"] = den.get_str();
    return j;
}

inline json poly_json(const PolyZ &f)
{
    json a = json::array();
    for (auto &c : f.coeffs())
        a.push_back(c.get_str());
    return a;
}

template <class T> json matrix_json(const Matrix<T> &m)
{
    json a = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            a.push_back(str(m(i, j)));
    return a;
}

inline json coeffs_json(const std::vector<Z> &c)
{
    json a = json::array();
    for (auto &v : c)
        a.push_back(v.get_str());
    return a;
}

struct StatReport {
    std::string id;
    json data = json::object();

    json to_json() const
    {
        json j;
        j["experiment"] = id;
        for (auto it = data.begin(); it != data.end(); ++it)
            j[it.key()] = it.value();
        return j;
    }
};

namespace detail {

inline std::string csv_cell(const json &v)
{
    std::string s;
    if (v.is_string())
        s = v.get<std::string>();
    else if (v.is_object() && v.contains("num") && v.contains("den"))
        s = v["num"].get<std::string>() + "/" + v["den"].get<std::string>();
    else
        s = v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char c : s)
            q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    return s;
}

} // namespace detail

/* scalars as key,value lines; a "rows" array of objects as a table after a blank line */
inline std::string to_csv(const StatReport &r)
{
    std::ostringstream os;
    json j = r.to_json();
    os << "key,value\n";
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "rows")
            os << it.key() << "," << detail::csv_cell(it.value()) << "\n";
    if (j.contains("rows") && j["rows"].is_array() && !j["rows"].empty() && j["rows"][0].is_object()) {
        os << "\n";
        std::vector<std::string> cols;
        for (auto it = j["rows"][0].begin(); it != j["rows"][0].end(); ++it)
            cols.push_back(it.key());
        for (size_t i = 0; i < cols.size(); ++i)
            os << (i ? "," : "") << cols[i];
        os << "\n";
        for (auto &row : j["rows"]) {
            for (size_t i = 0; i < cols.size(); ++i)
                os << (i ? "," : "") << (row.contains(cols[i]) ? detail::csv_cell(row[cols[i]]) : "");
            os << "\n";
        }
    }
    return os.str();
}

inline std::string render(const StatReport &r, const std::string &format)
{
    if (format == "csv")
        return to_csv(r);
    return r.to_json().dump(2) + "\n";
}

} // namespace selorb

#endif
