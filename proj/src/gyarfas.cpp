#include "mpkc/gyarfas.hpp"

#include <algorithm>

#include "mpkc/errors.hpp"

namespace mpkc {

namespace {

VertexSet path_set(const Graph& g, const InducedPath& p) {
    VertexSet s(g.n());
    for (int v : p) s.set(v);
    return s;
}

// The unique component of G - N[P] with more than n/2 vertices, if any.
// Two such components cannot coexist.
VertexSet oversized_component(const Graph& g, const InducedPath& p) {
    VertexSet outside = closed_neighborhood(g, path_set(g, p)).complement();
    for (const VertexSet& comp : components_within(g, outside))
        if (2 * comp.count() > g.n()) return comp;
    return VertexSet(g.n());
}

} // namespace

bool is_induced_path(const Graph& g, const InducedPath& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= g.n()) return false;
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] == p[j]) return false;
            bool want = (j == i + 1);
            if (g.adjacent(p[i], p[j]) != want) return false;
        }
    }
    return true;
}

bool halving_bound_holds(const Graph& g, const InducedPath& p) {
    VertexSet outside = closed_neighborhood(g, path_set(g, p)).complement();
    for (const VertexSet& comp : components_within(g, outside))
        if (2 * comp.count() > g.n()) return false;
    return true;
}

InducedPath gyarfas_path(const Graph& g, int start) {
    if (start < 0 || start >= g.n()) throw InputError("start vertex out of range");
    if (!is_connected(g)) throw InputError("gyarfas_path needs a connected graph");

    InducedPath path{start};
    VertexSet big = oversized_component(g, path);
    // Candidate pool for the next endpoint: at the first step the endpoint's
    // whole neighborhood, afterwards the previous oversized component. Each
    // step picks the smallest candidate adjacent to the current endpoint that
    // still sees the oversized component; one always exists, and the tracked
    // component strictly shrinks, so this stops after at most n steps.
    VertexSet pool = g.row(start);
    while (big.any()) {
        int tail = path.back();
        int chosen = -1;
        (pool & g.row(tail)).for_each([&](int w) {
            if (chosen == -1 && g.row(w).intersects(big)) chosen = w;
        });
        if (chosen == -1)
            throw InternalError("gyarfas_path: no extension candidate; construction invariant broken");
        path.push_back(chosen);
        pool = big;
        big = oversized_component(g, path);
        if (big.any() && !big.is_subset_of(pool))
            throw InternalError("gyarfas_path: oversized component failed to shrink");
    }
    if (!is_induced_path(g, path)) throw InternalError("gyarfas_path produced a non-induced path");
    return path;
}

InducedPath extend_maximal(const Graph& g, InducedPath p) {
    if (!is_induced_path(g, p)) throw InputError("extend_maximal needs an induced path");
    if (p.empty()) return p;
    VertexSet on_path = path_set(g, p);
    bool grew = true;
    while (grew) {
        grew = false;
        // tail end first, then the head; smallest qualifying vertex each time
        for (bool at_tail : {true, false}) {
            int end = at_tail ? p.back() : p.front();
            int chosen = -1;
            g.row(end).for_each([&](int w) {
                if (chosen != -1 || on_path.test(w)) return;
                VertexSet hits = g.row(w) & on_path;
                if (hits.count() == 1 && hits.test(end)) chosen = w;
            });
            if (chosen != -1) {
                if (at_tail)
                    p.push_back(chosen);
                else
                    p.insert(p.begin(), chosen);
                on_path.set(chosen);
                grew = true;
                break;
            }
        }
    }
    return p;
}

} // namespace mpkc
