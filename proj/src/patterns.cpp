#include "mpkc/patterns.hpp"

namespace mpkc {

namespace {

Pattern make_bull() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(3, 0);
    g.add_edge(4, 1);
    return {PatternKind::Bull, "bull", std::move(g)};
}

Pattern make_chair() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    return {PatternKind::Chair, "chair", std::move(g)};
}

Pattern make_e() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(2, 5);
    return {PatternKind::E, "E", std::move(g)};
}

bool extend(const Graph& host, const Graph& pat, std::vector<int>& image, VertexSet& used) {
    int t = static_cast<int>(image.size());
    if (t == pat.n()) return true;
    for (int cand = 0; cand < host.n(); ++cand) {
        if (used.test(cand)) continue;
        if (host.degree(cand) < pat.degree(t)) continue;
        bool ok = true;
        for (int s = 0; s < t && ok; ++s)
            if (pat.adjacent(s, t) != host.adjacent(image[s], cand)) ok = false;
        if (!ok) continue;
        image.push_back(cand);
        used.set(cand);
        if (extend(host, pat, image, used)) return true;
        image.pop_back();
        used.reset(cand);
    }
    return false;
}

} // namespace

const Pattern& pattern(PatternKind kind) {
    static const Pattern bull = make_bull();
    static const Pattern chair = make_chair();
    static const Pattern e = make_e();
    switch (kind) {
        case PatternKind::Bull: return bull;
        case PatternKind::Chair: return chair;
        default: return e;
    }
}

bool embedding_valid(const Graph& host, const Pattern& p, const Embedding& e) {
    const Graph& pat = p.graph;
    if (static_cast<int>(e.size()) != pat.n()) return false;
    for (int i = 0; i < pat.n(); ++i) {
        if (e[i] < 0 || e[i] >= host.n()) return false;
        for (int j = i + 1; j < pat.n(); ++j) {
            if (e[i] == e[j]) return false;
            if (pat.adjacent(i, j) != host.adjacent(e[i], e[j])) return false;
        }
    }
    return true;
}

std::optional<Embedding> find_induced(const Graph& host, const Pattern& p) {
    if (host.n() < p.graph.n()) return std::nullopt;
    Embedding image;
    image.reserve(static_cast<std::size_t>(p.graph.n()));
    VertexSet used(host.n());
    if (extend(host, p.graph, image, used)) return image;
    return std::nullopt;
}

ClassMembership class_membership(const Graph& g) {
    ClassMembership m;
    m.bull_witness = find_induced(g, pattern(PatternKind::Bull));
    m.chair_witness = find_induced(g, pattern(PatternKind::Chair));
    m.e_witness = find_induced(g, pattern(PatternKind::E));
    m.bull_free = !m.bull_witness.has_value();
    m.chair_free = !m.chair_witness.has_value();
    m.e_free = !m.e_witness.has_value();
    return m;
}

} // namespace mpkc
