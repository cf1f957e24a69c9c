#ifndef MPKC_INSTANCE_IO_HPP
#define MPKC_INSTANCE_IO_HPP

#include <iosfwd>
#include <string>

#include "mpkc/instance.hpp"

namespace mpkc {

// Revenue file: a JSON document { "k": <int>, "rev": [ [entry, ...], ... ] }
// with one row per vertex and k entries per row; each entry is a bare
// nonnegative integer or a "p/q" rational string.
struct RevenueFile {
    int k = 0;
    Revenue revenue;
};
RevenueFile read_revenue(std::istream& in);
RevenueFile read_revenue_file(const std::string& path);
void write_revenue(std::ostream& out, const Revenue& revenue);
void write_revenue_file(const std::string& path, const Revenue& revenue);

// Solution file: { "value": "<rational>", "colored": [{"vertex": v, "color": c}, ...] }
// with 1-indexed vertices.
Solution read_solution(std::istream& in);
Solution read_solution_file(const std::string& path);
void write_solution(std::ostream& out, const Solution& sol);
void write_solution_file(const std::string& path, const Solution& sol);

} // namespace mpkc

#endif
