#include "mpkc/decompose.hpp"

#include <algorithm>

#include "mpkc/errors.hpp"

namespace mpkc {

namespace {

VertexSet to_set(const Graph& g, const std::vector<int>& vs) {
    VertexSet s(g.n());
    for (int v : vs) s.set(v);
    return s;
}

} // namespace

Spine close_to_cycle(const Graph& g, const InducedPath& p) {
    if (static_cast<int>(p.size()) < 7)
        throw InputError("close_to_cycle needs a path of at least 7 vertices");
    if (!is_induced_path(g, p)) throw InputError("close_to_cycle needs an induced path");
    VertexSet on_path = to_set(g, p);
    int closer = -1;
    for (int v = 0; v < g.n() && closer == -1; ++v) {
        if (on_path.test(v)) continue;
        VertexSet hits = g.row(v) & on_path;
        if (hits.count() == 2 && hits.test(p.front()) && hits.test(p.back())) closer = v;
    }
    if (closer == -1) return {SpineKind::Path, p};
    std::vector<int> cycle = p;
    cycle.push_back(closer);
    return {SpineKind::Cycle, std::move(cycle)};
}

NQClassification classify_nq(const Graph& g, const Spine& q) {
    const int r = q.order();
    if (q.kind == SpineKind::Path && r < 7)
        throw InputError("classify_nq needs a path spine of order >= 7");
    if (q.kind == SpineKind::Cycle && r < 8)
        throw InputError("classify_nq needs a cycle spine of order >= 8");

    VertexSet on_spine = to_set(g, q.vertices);
    // position of each spine vertex, 1-based
    std::vector<int> pos(static_cast<std::size_t>(g.n()), 0);
    for (int i = 0; i < r; ++i) pos[static_cast<std::size_t>(q.vertices[static_cast<std::size_t>(i)])] = i + 1;
    auto wrap = [&](int i) { return (i - 1 + r) % r + 1; }; // 1-based mod r

    NQClassification out;
    for (int w = 0; w < g.n(); ++w) {
        if (on_spine.test(w)) continue;
        VertexSet hits = g.row(w) & on_spine;
        int deg = hits.count();
        if (deg == 0) continue;

        if (deg == r) {
            out.entries[w] = {NQClass::Universal, 0};
            continue;
        }

        std::vector<int> at;
        hits.for_each([&](int v) { at.push_back(pos[static_cast<std::size_t>(v)]); });
        std::sort(at.begin(), at.end());

        if (q.kind == SpineKind::Path) {
            if ((deg == 1 && at[0] == 2) || (deg == 2 && at[0] == 1 && at[1] == 2)) {
                out.entries[w] = {NQClass::EndFirst, 0};
                continue;
            }
            if ((deg == 1 && at[0] == r - 1) || (deg == 2 && at[0] == r - 1 && at[1] == r)) {
                out.entries[w] = {NQClass::EndLast, 0};
                continue;
            }
            if (deg == 2 && at[1] == at[0] + 2) {
                out.entries[w] = {NQClass::Wide, at[0] + 1};
                continue;
            }
            if (deg == 3 && at[1] == at[0] + 1 && at[2] == at[0] + 2) {
                out.entries[w] = {NQClass::Mid, at[0] + 1};
                continue;
            }
        } else {
            // signatures {i-1, i+1} and {i-1, i, i+1} computed modulo r
            bool matched = false;
            for (int i = 1; i <= r && !matched; ++i) {
                int lo = wrap(i - 1), hi = wrap(i + 1);
                if (deg == 2 && hits.test(q.vertices[static_cast<std::size_t>(lo - 1)]) &&
                    hits.test(q.vertices[static_cast<std::size_t>(hi - 1)])) {
                    out.entries[w] = {NQClass::Wide, i};
                    matched = true;
                } else if (deg == 3 && hits.test(q.vertices[static_cast<std::size_t>(lo - 1)]) &&
                           hits.test(q.vertices[static_cast<std::size_t>(i - 1)]) &&
                           hits.test(q.vertices[static_cast<std::size_t>(hi - 1)])) {
                    out.entries[w] = {NQClass::Mid, i};
                    matched = true;
                }
            }
            if (matched) continue;
        }
        throw ClassViolationError(
            "vertex " + std::to_string(w + 1) +
                " has a spine neighborhood outside every class; the graph is not (bull,E)-free",
            {w});
    }
    return out;
}

VertexSet FatDecomposition::fat_union() const {
    VertexSet u = parts.empty() ? VertexSet() : VertexSet(parts.front().universe());
    for (const auto& part : parts) u |= part;
    return u;
}

FatDecomposition build_decomposition(const Graph& g, const InducedPath& p) {
    Spine q = close_to_cycle(g, p);
    NQClassification cls = classify_nq(g, q);

    const int r = q.order();
    FatDecomposition dec;
    dec.kind = q.kind;
    dec.parts.assign(static_cast<std::size_t>(r), VertexSet(g.n()));
    dec.separator = VertexSet(g.n());
    for (int i = 0; i < r; ++i)
        dec.parts[static_cast<std::size_t>(i)].set(q.vertices[static_cast<std::size_t>(i)]);

    for (const auto& [w, entry] : cls.entries) {
        switch (entry.cls) {
            case NQClass::EndFirst: dec.parts.front().set(w); break;
            case NQClass::EndLast: dec.parts.back().set(w); break;
            case NQClass::Wide:
            case NQClass::Mid: dec.parts[static_cast<std::size_t>(entry.index - 1)].set(w); break;
            case NQClass::Universal: dec.separator.set(w); break;
        }
    }
    dec.remainder = dec.fat_union().complement().minus(dec.separator);
    dec.spine = std::move(q);

    std::vector<Violation> violations = validate_decomposition(g, dec);
    if (!violations.empty())
        throw ClassViolationError("decomposition claim `" + violations.front().rule +
                                      "` failed; the graph is not (bull,E)-free",
                                  violations.front().witness);
    return dec;
}

std::vector<Violation> validate_decomposition(const Graph& g, const FatDecomposition& dec) {
    std::vector<Violation> out;
    const int r = dec.order();

    if (dec.kind == SpineKind::Path && r < 7) out.push_back({"fat path must have order at least 7", {}});
    if (dec.kind == SpineKind::Cycle && r < 8) out.push_back({"fat cycle must have order at least 8", {}});
    if (r == 0) return out;

    for (int i = 0; i < r; ++i)
        if (dec.parts[static_cast<std::size_t>(i)].empty())
            out.push_back({"parts must be non-empty", {i}});

    // partition check; counting doubles as an overlap check
    VertexSet fat = dec.fat_union();
    VertexSet all = fat | dec.separator | dec.remainder;
    int total = 0;
    for (const auto& part : dec.parts) total += part.count();
    total += dec.separator.count() + dec.remainder.count();
    if (!(all == VertexSet::full(g.n())) || total != g.n()) {
        out.push_back({"parts, separator and remainder must partition the vertex set", {}});
        return out; // the remaining checks assume disjoint sets
    }

    // fat adjacency: consecutive parts complete, all other pairs anticomplete
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            bool consecutive = (j == i + 1) ||
                               (dec.kind == SpineKind::Cycle && i == 0 && j == r - 1);
            const VertexSet& a = dec.parts[static_cast<std::size_t>(i)];
            const VertexSet& b = dec.parts[static_cast<std::size_t>(j)];
            if (consecutive && !is_complete_between(g, a, b))
                out.push_back({"consecutive parts must be complete to each other", {i, j}});
            if (!consecutive && !is_anticomplete_between(g, a, b))
                out.push_back({"non-consecutive parts must be anticomplete", {i, j}});
        }
    }

    if (!is_complete_between(g, dec.separator, fat))
        out.push_back({"separator must be complete to the fat structure", {}});
    if (!is_anticomplete_between(g, fat, dec.remainder))
        out.push_back({"no edges may run between the fat structure and the remainder", {}});

    // every remainder component sits inside one component of G - N[Q]
    VertexSet outside_q = closed_neighborhood(g, to_set(g, dec.spine.vertices)).complement();
    std::vector<VertexSet> q_comps = components_within(g, outside_q);
    for (const VertexSet& comp : components_within(g, dec.remainder)) {
        bool contained = false;
        for (const VertexSet& qc : q_comps)
            if (comp.is_subset_of(qc)) contained = true;
        if (!contained)
            out.push_back({"remainder component not contained in one component of G - N[Q]",
                           {comp.first()}});
    }
    return out;
}

std::vector<std::pair<VertexSet, int>> chair_component_dominators(const Graph& g,
                                                                  const FatDecomposition& dec) {
    std::vector<std::pair<VertexSet, int>> out;
    for (const VertexSet& comp : components_within(g, dec.remainder)) {
        int found = -1;
        dec.separator.for_each([&](int d) {
            if (found == -1 && comp.is_subset_of(g.row(d))) found = d;
        });
        if (found == -1)
            throw ClassViolationError(
                "a remainder component is complete to no separator vertex; "
                "the graph is not (bull,chair)-free",
                comp.to_vector());
        out.emplace_back(comp, found);
    }
    return out;
}

std::vector<std::pair<VertexSet, int>> path_neighborhood_dominators(const Graph& g,
                                                                    const InducedPath& p) {
    if (static_cast<int>(p.size()) < 3)
        throw InputError("path_neighborhood_dominators needs a path of at least 3 vertices");
    VertexSet on_path = to_set(g, p);
    VertexSet closed = closed_neighborhood(g, on_path);
    VertexSet fringe = closed.minus(on_path); // N(P)
    std::vector<std::pair<VertexSet, int>> out;
    for (const VertexSet& comp : components_within(g, closed.complement())) {
        int found = -1;
        fringe.for_each([&](int w) {
            if (found == -1 && comp.is_subset_of(g.row(w))) found = w;
        });
        if (found == -1)
            throw ClassViolationError(
                "a component of G - N[P] is complete to no neighbor of P; "
                "the graph is not (bull,chair)-free",
                comp.to_vector());
        out.emplace_back(comp, found);
    }
    return out;
}

} // namespace mpkc
