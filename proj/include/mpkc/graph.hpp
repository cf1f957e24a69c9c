#ifndef MPKC_GRAPH_HPP
#define MPKC_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mpkc/vertex_set.hpp"

namespace mpkc {

// Simple undirected graph over dense vertex ids 0..n-1, one adjacency bitset
// row per vertex. Built once via add_edge, then treated as immutable.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    long long m() const { return m_; }

    // Returns false if the edge was already present. Self-loops are rejected.
    bool add_edge(int u, int v);

    bool adjacent(int u, int v) const { return rows_[check(u)].test(check(v)); }
    const VertexSet& row(int v) const { return rows_[check(v)]; }
    int degree(int v) const { return rows_[check(v)].count(); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph star(int leaves); // center is vertex 0
    static Graph edgeless(int n) { return Graph(n); }

private:
    int check(int v) const {
        if (v < 0 || v >= n_) throw InputError("vertex out of range");
        return v;
    }
    int n_ = 0;
    long long m_ = 0;
    std::vector<VertexSet> rows_;
};

VertexSet neighbors(const Graph& g, int v);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& xs); // N[X]
VertexSet open_neighborhood(const Graph& g, const VertexSet& xs);   // N(X) = N[X] \ X

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent; // new id -> old id, ascending
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Components as vertex sets, each sorted internally, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
// Components of g restricted to the vertex set "within", in parent numbering.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g);

// Both require X and Y disjoint; vacuously true when either is empty.
bool is_complete_between(const Graph& g, const VertexSet& x, const VertexSet& y);
bool is_anticomplete_between(const Graph& g, const VertexSet& x, const VertexSet& y);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_complete_graph(const Graph& g);

// Exact maximum clique size via branch and bound with a greedy coloring bound.
int clique_number(const Graph& g);
// Lexicographically least clique of exactly the given size, if one exists.
std::optional<std::vector<int>> find_clique(const Graph& g, int size);

} // namespace mpkc

#endif
