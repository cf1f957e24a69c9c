#include "mpkc/gen.hpp"

#include <algorithm>

#include "mpkc/errors.hpp"

namespace mpkc {

std::uint64_t Rng::next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw InputError("rng bound must be positive");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = next();
    } while (r >= limit);
    return r % bound;
}

int Rng::range(int lo, int hi) {
    if (lo > hi) throw InputError("empty rng range");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter) {
    Rng mix(base ^ (counter * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    return mix.next();
}

bool passes_filter(const ClassMembership& m, ClassFilter filter) {
    switch (filter) {
        case ClassFilter::None: return true;
        case ClassFilter::Chair: return m.bull_free && m.chair_free;
        case ClassFilter::E: return m.bull_free && m.e_free;
    }
    return true;
}

namespace {

Graph gnp(int n, double p, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) g.add_edge(u, v);
    return g;
}

Graph named_graph(const GenSpec& spec) {
    if (spec.named == "bull") return pattern(PatternKind::Bull).graph;
    if (spec.named == "chair") return pattern(PatternKind::Chair).graph;
    if (spec.named == "e") return pattern(PatternKind::E).graph;
    if (spec.named == "path") return Graph::path(spec.n);
    if (spec.named == "cycle") return Graph::cycle(spec.n);
    if (spec.named == "complete") return Graph::complete(spec.n);
    if (spec.named == "star") return Graph::star(spec.n);
    throw InputError("unknown named graph: " + spec.named);
}

Graph co_bipartite(int n, double p, Rng& rng) {
    Graph g(n);
    int a = n / 2;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool same_side = (u < a) == (v < a);
            if (same_side || !rng.chance(p)) g.add_edge(u, v);
        }
    return g;
}

// The witness of the first violated pattern, per the filter's precedence.
std::vector<int> violating_witness(const ClassMembership& m, ClassFilter filter) {
    if (!m.bull_free) return *m.bull_witness;
    if (filter == ClassFilter::Chair && !m.chair_free) return *m.chair_witness;
    if (filter == ClassFilter::E && !m.e_free) return *m.e_witness;
    throw InternalError("no violated pattern to repair");
}

Graph delete_vertex(const Graph& g, int victim) {
    VertexSet keep = VertexSet::full(g.n());
    keep.reset(victim);
    return induced_subgraph(g, keep).graph;
}

// One draw from the requested family, before any class filtering.
Graph raw_sample(const GenSpec& spec, Rng& rng);

Graph filtered_sample(const GenSpec& spec, Rng& rng) {
    Graph last(0);
    for (int attempt = 0; attempt < std::max(1, spec.reject_budget); ++attempt) {
        last = raw_sample(spec, rng);
        if (passes_filter(class_membership(last), spec.filter)) return last;
    }
    // repair fallback: delete one witness vertex at a time until certified
    while (true) {
        ClassMembership m = class_membership(last);
        if (passes_filter(m, spec.filter)) return last;
        std::vector<int> witness = violating_witness(m, spec.filter);
        last = delete_vertex(last, *std::min_element(witness.begin(), witness.end()));
    }
}

// Connected graph built around a long fat spine: parts of size one or two,
// optionally a separator clique complete to every part, and small remainder
// components hanging off the separator. Construction follows the fat-path
// discipline, so most samples certify as (bull,E)-free; callers re-check.
Graph decorated_spine(int target_n, Rng& rng) {
    const bool cycle = rng.chance(0.4);
    const int r = rng.range(8, std::max(9, std::min(24, target_n)));
    std::vector<int> sizes(static_cast<std::size_t>(r), 1);
    int budget = std::max(0, target_n - r);
    int doubles = std::min(budget, rng.range(0, std::max(1, r / 4)));
    for (int i = 0; i < doubles; ++i) sizes[static_cast<std::size_t>(rng.range(0, r - 1))] = 2;
    budget -= doubles;

    int d_count = std::min(budget, rng.range(0, 2));
    budget -= d_count;
    int t_count = d_count > 0 ? std::min(budget, rng.range(0, 3)) : 0;

    int n = 0;
    for (int s : sizes) n += s;
    const int d_base = n;
    n += d_count;
    const int t_base = n;
    n += t_count;

    Graph g(n);
    std::vector<VertexSet> parts;
    int base = 0;
    for (int s : sizes) {
        VertexSet part(n);
        for (int v = base; v < base + s; ++v) part.set(v);
        // spine vertex first in the part; a size-2 part may carry an inner edge,
        // making the extra vertex a triple-neighbor rather than a two-hop one
        if (s == 2 && rng.chance(0.5)) g.add_edge(base, base + 1);
        parts.push_back(std::move(part));
        base += s;
    }
    for (int i = 0; i < r; ++i) {
        int j = i + 1 == r ? (cycle ? 0 : -1) : i + 1;
        if (j < 0) continue;
        parts[static_cast<std::size_t>(i)].for_each([&](int u) {
            parts[static_cast<std::size_t>(j)].for_each([&](int v) { g.add_edge(u, v); });
        });
    }
    // separator vertices: complete to every part and to each other
    for (int d = d_base; d < d_base + d_count; ++d) {
        for (int v = 0; v < d_base; ++v) g.add_edge(d, v);
        for (int d2 = d_base; d2 < d; ++d2)
            if (rng.chance(0.7)) g.add_edge(d, d2);
    }
    // remainder vertices: each adjacent to a nonempty subset of the separator,
    // occasionally chained to the previous remainder vertex
    for (int t = t_base; t < t_base + t_count; ++t) {
        int d = d_base + rng.range(0, d_count - 1);
        g.add_edge(t, d);
        for (int d2 = d_base; d2 < d_base + d_count; ++d2)
            if (d2 != d && rng.chance(0.5)) g.add_edge(t, d2);
        if (t > t_base && rng.chance(0.4)) g.add_edge(t, t - 1);
    }
    return g;
}

} // namespace

FatSample gen_fat_sample(int parts, int max_part, double intra_prob, SpineKind kind,
                         std::uint64_t seed) {
    if (parts < 1 || (kind == SpineKind::Cycle && parts < 3))
        throw InputError("fat sample needs at least 1 part (3 for cycles)");
    if (max_part < 1) throw InputError("fat sample needs positive part sizes");
    Rng rng(seed);
    std::vector<int> sizes(static_cast<std::size_t>(parts));
    int n = 0;
    for (auto& s : sizes) {
        s = rng.range(1, max_part);
        n += s;
    }
    Graph g(n);
    std::vector<VertexSet> part_sets;
    int base = 0;
    for (int s : sizes) {
        VertexSet part(n);
        for (int v = base; v < base + s; ++v) part.set(v);
        part_sets.push_back(std::move(part));
        base += s;
    }
    for (int i = 0; i < parts; ++i) {
        std::vector<int> a = part_sets[static_cast<std::size_t>(i)].to_vector();
        // random edges inside the part
        for (std::size_t x = 0; x < a.size(); ++x)
            for (std::size_t y = x + 1; y < a.size(); ++y)
                if (rng.chance(intra_prob)) g.add_edge(a[x], a[y]);
        // complete join to the next part
        int j = i + 1;
        if (j == parts) {
            if (kind != SpineKind::Cycle || parts < 3) continue;
            j = 0;
        }
        for (int u : a)
            part_sets[static_cast<std::size_t>(j)].for_each([&](int v) { g.add_edge(u, v); });
    }
    return {std::move(g), std::move(part_sets), kind};
}

namespace {

Graph raw_sample(const GenSpec& spec, Rng& rng) {
    switch (spec.family) {
        case Family::Named: return named_graph(spec);
        case Family::FatPath:
        case Family::FatCycle: {
            int parts = spec.parts > 0 ? spec.parts
                                       : std::max(spec.family == Family::FatCycle ? 3 : 1,
                                                  spec.n / std::max(1, spec.max_part));
            return gen_fat_sample(parts, spec.max_part, spec.edge_prob,
                                  spec.family == Family::FatCycle ? SpineKind::Cycle
                                                                  : SpineKind::Path,
                                  rng.next())
                .graph;
        }
        case Family::Decomposable: return decorated_spine(spec.n, rng);
        case Family::CoBipartite: return co_bipartite(spec.n, spec.edge_prob, rng);
        case Family::RandomClass: return gnp(spec.n, spec.edge_prob, rng);
    }
    throw InputError("unknown generator family");
}

} // namespace

Graph gen_graph(const GenSpec& spec) {
    Rng rng(spec.seed);
    if (spec.filter == ClassFilter::None) return raw_sample(spec, rng);
    return filtered_sample(spec, rng);
}

Graph gen_connected_graph(int n, double p, std::uint64_t seed) {
    if (n < 1) throw InputError("connected graph needs n >= 1");
    Rng rng(seed);
    Graph g = gnp(n, p, rng);
    while (true) {
        auto comps = connected_components(g);
        if (comps.size() <= 1) return g;
        // join two random components with a uniform random edge
        std::size_t ci = static_cast<std::size_t>(rng.below(comps.size()));
        std::size_t cj = static_cast<std::size_t>(rng.below(comps.size() - 1));
        if (cj >= ci) ++cj;
        std::vector<int> a = comps[ci].to_vector();
        std::vector<int> b = comps[cj].to_vector();
        g.add_edge(a[static_cast<std::size_t>(rng.below(a.size()))],
                   b[static_cast<std::size_t>(rng.below(b.size()))]);
    }
}

Revenue gen_revenue(int n, int k, long long min_value, long long max_value, double zero_fraction,
                    std::uint64_t seed) {
    if (min_value < 0 || max_value < min_value) throw InputError("bad revenue range");
    if (zero_fraction < 0.0 || zero_fraction > 1.0) throw InputError("bad zero fraction");
    Rng rng(seed);
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n));
    for (auto& row : rows) {
        row.reserve(static_cast<std::size_t>(k));
        for (int c = 0; c < k; ++c) {
            long long v = min_value +
                          static_cast<long long>(rng.below(
                              static_cast<std::uint64_t>(max_value - min_value) + 1));
            if (rng.chance(zero_fraction)) v = 0;
            row.emplace_back(v);
        }
    }
    return Revenue::from_rows(std::move(rows), k);
}

} // namespace mpkc
