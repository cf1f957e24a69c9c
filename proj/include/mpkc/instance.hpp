#ifndef MPKC_INSTANCE_HPP
#define MPKC_INSTANCE_HPP

#include <memory>
#include <utility>
#include <vector>

#include "mpkc/graph.hpp"
#include "mpkc/rational.hpp"

namespace mpkc {

// Nonnegative rational revenue table rev[v][i] for v in [0,n), i in [1,k].
// Rows are shared copy-on-write: forbidding a color copies one row, so the
// thousands of near-identical instances created while branching stay cheap.
class Revenue {
public:
    Revenue() = default;
    Revenue(int n, int k); // all zero
    static Revenue uniform(int n, int k, const Rational& value);
    static Revenue from_rows(std::vector<std::vector<Rational>> rows, int k);

    int n() const { return n_; }
    int k() const { return k_; }

    const Rational& at(int v, int color) const;
    void set(int v, int color, Rational value); // copies the touched row

    Revenue forbidden(int v, int color) const;

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<std::shared_ptr<const std::vector<Rational>>> rows_;
    friend class RevenuePatch;
};

// Batch of forbiddings producing one new table; untouched rows stay shared
// with the base.
class RevenuePatch {
public:
    explicit RevenuePatch(const Revenue& base);
    void zero(int v, int color);
    void keep_only(int v, int color); // zero every other color of v
    Revenue take();

private:
    std::vector<Rational>& editable_row(int v);
    Revenue work_;
    std::vector<char> owned_;
};

struct Instance {
    std::shared_ptr<const Graph> graph;
    int k = 0;
    Revenue revenue;

    int n() const { return graph ? graph->n() : 0; }
    const Graph& g() const { return *graph; }
};

Instance make_instance(Graph g, int k, Revenue revenue);
Instance make_instance(std::shared_ptr<const Graph> g, int k, Revenue revenue);

// A colored vertex set: entries (vertex, color) sorted by vertex, color in
// [1,k], with the exact total revenue.
struct Solution {
    std::vector<std::pair<int, int>> colored;
    Rational value;
};

// Internal constructor: drops zero-revenue assignments, then checks that the
// coloring is proper; an improper coloring here is a solver bug.
Solution normalized_solution(const Instance& inst, std::vector<std::pair<int, int>> colored);

// External validation: improper colorings and zero-revenue assignments raise
// ValidationError naming the offending vertex. Returns the exact value.
Rational solution_value(const Instance& inst, const Solution& sol);

Instance forbid_color(const Instance& inst, int v, int color);

struct SubInstance {
    Instance instance;
    std::vector<int> to_parent; // sub vertex -> parent vertex, ascending
};
SubInstance subinstance(const Instance& inst, const VertexSet& s);

// One piece of a combined solution; a null map means identity.
struct MappedSolution {
    const Solution* solution;
    const std::vector<int>* to_parent;
};

// Union of colorings over pairwise disjoint vertex images. Overlaps and
// improper results raise InternalError: they signal a branching bug and are
// never silently accepted.
Solution merge_solutions(const Instance& parent, const std::vector<MappedSolution>& parts);

// 0/1 instance encoding a list-coloring problem: rev(v,c)=1 iff c is on v's list.
// Lists are given as bitmasks over colors (bit i-1 = color i), so k <= 31.
Instance from_list_coloring(const Graph& g, const std::vector<std::uint32_t>& lists, int k);

} // namespace mpkc

#endif
