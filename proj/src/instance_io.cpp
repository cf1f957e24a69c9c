#include "mpkc/instance_io.hpp"

#include <fstream>

#include <json.hpp>

#include "mpkc/errors.hpp"

namespace mpkc {

namespace {

using nlohmann::json;

Rational entry_to_rational(const json& e) {
    if (e.is_number_integer()) {
        long long v = e.get<long long>();
        if (v < 0) throw InputError("negative revenue entry");
        return Rational(v);
    }
    if (e.is_string()) {
        Rational r = Rational::parse(e.get<std::string>());
        if (r.is_negative()) throw InputError("negative revenue entry");
        return r;
    }
    throw InputError("revenue entry must be an integer or a \"p/q\" string");
}

json rational_to_entry(const Rational& r) {
    std::string s = r.str();
    if (s.find('/') == std::string::npos) {
        // integers serialize bare when they fit a JSON number
        try {
            std::size_t pos = 0;
            long long v = std::stoll(s, &pos);
            if (pos == s.size()) return json(v);
        } catch (...) {
        }
    }
    return json(s);
}

json parse_stream(std::istream& in, const char* what) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
    return doc;
}

} // namespace

RevenueFile read_revenue(std::istream& in) {
    json doc = parse_stream(in, "revenue file");
    if (!doc.is_object() || !doc.contains("k") || !doc.contains("rev"))
        throw ParseError("revenue file must contain `k` and `rev`");
    if (!doc["k"].is_number_integer()) throw ParseError("`k` must be an integer");
    int k = doc["k"].get<int>();
    if (k < 1) throw ParseError("`k` must be positive");
    if (!doc["rev"].is_array()) throw ParseError("`rev` must be an array of rows");
    std::vector<std::vector<Rational>> rows;
    rows.reserve(doc["rev"].size());
    for (const auto& row : doc["rev"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != k)
            throw ParseError("each `rev` row must have exactly k entries");
        std::vector<Rational> r;
        r.reserve(row.size());
        for (const auto& e : row) r.push_back(entry_to_rational(e));
        rows.push_back(std::move(r));
    }
    return {k, Revenue::from_rows(std::move(rows), k)};
}

RevenueFile read_revenue_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open revenue file: " + path);
    return read_revenue(in);
}

void write_revenue(std::ostream& out, const Revenue& revenue) {
    json rows = json::array();
    for (int v = 0; v < revenue.n(); ++v) {
        json row = json::array();
        for (int c = 1; c <= revenue.k(); ++c) row.push_back(rational_to_entry(revenue.at(v, c)));
        rows.push_back(std::move(row));
    }
    json doc{{"k", revenue.k()}, {"rev", std::move(rows)}};
    out << doc.dump(2) << "\n";
}

void write_revenue_file(const std::string& path, const Revenue& revenue) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open file for writing: " + path);
    write_revenue(out, revenue);
}

Solution read_solution(std::istream& in) {
    json doc = parse_stream(in, "solution file");
    if (!doc.is_object() || !doc.contains("value") || !doc.contains("colored"))
        throw ParseError("solution file must contain `value` and `colored`");
    Solution sol;
    if (doc["value"].is_string())
        sol.value = Rational::parse(doc["value"].get<std::string>());
    else if (doc["value"].is_number_integer())
        sol.value = Rational(doc["value"].get<long long>());
    else
        throw ParseError("`value` must be a rational string");
    if (!doc["colored"].is_array()) throw ParseError("`colored` must be an array");
    for (const auto& e : doc["colored"]) {
        if (!e.is_object() || !e.contains("vertex") || !e.contains("color"))
            throw ParseError("each colored entry needs `vertex` and `color`");
        int v = e["vertex"].get<int>();
        int c = e["color"].get<int>();
        if (v < 1) throw ParseError("vertices are 1-indexed");
        sol.colored.emplace_back(v - 1, c);
    }
    std::sort(sol.colored.begin(), sol.colored.end());
    return sol;
}

Solution read_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open solution file: " + path);
    return read_solution(in);
}

void write_solution(std::ostream& out, const Solution& sol) {
    json colored = json::array();
    for (const auto& [v, c] : sol.colored)
        colored.push_back(json{{"vertex", v + 1}, {"color", c}});
    json doc{{"value", sol.value.str()}, {"colored", std::move(colored)}};
    out << doc.dump(2) << "\n";
}

void write_solution_file(const std::string& path, const Solution& sol) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open file for writing: " + path);
    write_solution(out, sol);
}

} // namespace mpkc
