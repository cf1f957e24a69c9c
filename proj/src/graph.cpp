#include "mpkc/graph.hpp"

#include <algorithm>

namespace mpkc {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
    rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

bool Graph::add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw InputError("self-loop");
    if (rows_[u].test(v)) return false;
    rows_[u].set(v);
    rows_[v].set(u);
    ++m_;
    return true;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph Graph::star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

VertexSet neighbors(const Graph& g, int v) { return g.row(v); }

VertexSet closed_neighborhood(const Graph& g, const VertexSet& xs) {
    VertexSet out = xs;
    xs.for_each([&](int v) { out |= g.row(v); });
    return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& xs) {
    return closed_neighborhood(g, xs).minus(xs);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n()) throw InputError("vertex set of a different graph");
    std::vector<int> order = s.to_vector();
    Graph sub(static_cast<int>(order.size()));
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (g.adjacent(order[i], order[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    return {std::move(sub), std::move(order)};
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
    std::vector<VertexSet> out;
    VertexSet seen(g.n());
    within.for_each([&](int start) {
        if (seen.test(start)) return;
        VertexSet comp(g.n());
        std::vector<int> stack{start};
        seen.set(start);
        comp.set(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            (g.row(v) & within).for_each([&](int u) {
                if (!seen.test(u)) {
                    seen.set(u);
                    comp.set(u);
                    stack.push_back(u);
                }
            });
        }
        out.push_back(std::move(comp));
    });
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return components_within(g, VertexSet::full(g.n()));
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    return connected_components(g).size() == 1;
}

bool is_complete_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (x.intersects(y)) throw InputError("is_complete_between: sets overlap");
    bool ok = true;
    x.for_each([&](int v) {
        if (!y.is_subset_of(g.row(v))) ok = false;
    });
    return ok;
}

bool is_anticomplete_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (x.intersects(y)) throw InputError("is_anticomplete_between: sets overlap");
    bool ok = true;
    x.for_each([&](int v) {
        if (g.row(v).intersects(y)) ok = false;
    });
    return ok;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int v) {
        if (g.row(v).intersects(s)) ok = false;
    });
    return ok;
}

bool is_complete_graph(const Graph& g) {
    return g.m() == static_cast<long long>(g.n()) * (g.n() - 1) / 2;
}

namespace {

// Greedy coloring of the candidate set; the number of classes bounds the
// largest clique inside it.
int coloring_bound(const Graph& g, const VertexSet& cand) {
    std::vector<VertexSet> classes;
    cand.for_each([&](int v) {
        for (auto& cls : classes) {
            if (!g.row(v).intersects(cls)) {
                cls.set(v);
                return;
            }
        }
        VertexSet cls(g.n());
        cls.set(v);
        classes.push_back(std::move(cls));
    });
    return static_cast<int>(classes.size());
}

void clique_expand(const Graph& g, VertexSet cand, int size, int& best) {
    if (size > best) best = size;
    if (cand.empty()) return;
    if (size + coloring_bound(g, cand) <= best) return;
    // iterate candidates ascending; restrict later candidates to larger ids
    std::vector<int> verts = cand.to_vector();
    for (std::size_t idx = 0; idx < verts.size(); ++idx) {
        int v = verts[idx];
        if (size + static_cast<int>(verts.size() - idx) <= best) return;
        VertexSet next = cand & g.row(v);
        for (std::size_t j = 0; j <= idx; ++j) next.reset(verts[j]);
        clique_expand(g, std::move(next), size + 1, best);
    }
}

bool clique_search(const Graph& g, const VertexSet& cand, std::vector<int>& acc, int want) {
    if (static_cast<int>(acc.size()) == want) return true;
    if (cand.count() < want - static_cast<int>(acc.size())) return false;
    bool found = false;
    cand.for_each([&](int v) {
        if (found) return;
        VertexSet next = cand & g.row(v);
        // only try extensions above v to keep the output lexicographically least
        for (int u = 0; u <= v; ++u)
            if (next.test(u)) next.reset(u);
        acc.push_back(v);
        if (clique_search(g, next, acc, want))
            found = true;
        else
            acc.pop_back();
    });
    return found;
}

} // namespace

int clique_number(const Graph& g) {
    if (g.n() == 0) throw InputError("clique_number of the empty graph");
    int best = 0;
    clique_expand(g, VertexSet::full(g.n()), 0, best);
    return best;
}

std::optional<std::vector<int>> find_clique(const Graph& g, int size) {
    if (size <= 0) return std::vector<int>{};
    if (size > g.n()) return std::nullopt;
    std::vector<int> acc;
    if (clique_search(g, VertexSet::full(g.n()), acc, size)) return acc;
    return std::nullopt;
}

} // namespace mpkc
