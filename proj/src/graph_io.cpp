#include "mpkc/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "mpkc/errors.hpp"

namespace mpkc {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ParseError("graph parse error at line " + std::to_string(line_no) + ": " + what);
}

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

} // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0, edges_seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue; // blank line
        if (kind == "c") continue;
        if (kind == "p") {
            if (have_header) fail(line_no, "second header");
            std::string a, b, extra;
            if (!(ls >> a >> b)) fail(line_no, "expected `p <n> <m>`");
            if (ls >> extra) fail(line_no, "trailing tokens after header");
            if (!parse_int(a, n) || !parse_int(b, m) || n < 0 || m < 0)
                fail(line_no, "bad header counts");
            g = Graph(static_cast<int>(n));
            have_header = true;
        } else if (kind == "e") {
            if (!have_header) fail(line_no, "edge before header");
            std::string a, b, extra;
            if (!(ls >> a >> b)) fail(line_no, "expected `e <u> <v>`");
            if (ls >> extra) fail(line_no, "trailing tokens after edge");
            long long u, v;
            if (!parse_int(a, u) || !parse_int(b, v)) fail(line_no, "bad edge endpoints");
            if (u < 1 || u > n || v < 1 || v > n) fail(line_no, "endpoint out of range");
            if (u == v) fail(line_no, "self-loop");
            if (!g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1)))
                fail(line_no, "duplicate edge");
            ++edges_seen;
        } else {
            fail(line_no, "unknown line type `" + kind + "`");
        }
    }
    if (!have_header) throw ParseError("graph parse error: missing `p <n> <m>` header");
    if (edges_seen != m)
        throw ParseError("graph parse error: header promised " + std::to_string(m) +
                         " edges, found " + std::to_string(edges_seen));
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p " << g.n() << " " << g.m() << "\n";
    for (int u = 0; u < g.n(); ++u) {
        g.row(u).for_each([&](int v) {
            if (v > u) out << "e " << u + 1 << " " << v + 1 << "\n";
        });
    }
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open file for writing: " + path);
    write_graph(out, g);
}

} // namespace mpkc
