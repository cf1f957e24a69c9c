#include "testutil.hpp"

#include <algorithm>
#include <numeric>

namespace mpkc::testutil {

Graph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Instance unit_instance(Graph g, int k) {
    int n = g.n();
    return make_instance(std::move(g), k, Revenue::uniform(n, k, Rational(1)));
}

namespace {

// Best value of a proper coloring of ALL vertices in `members`, colors with
// positive revenue only; returns false when no full coloring exists.
bool best_full_coloring(const Instance& inst, const std::vector<int>& members, std::size_t idx,
                        std::vector<int>& colors, Rational acc, bool& found, Rational& best) {
    if (idx == members.size()) {
        if (!found || acc > best) {
            best = acc;
            found = true;
        }
        return true;
    }
    int v = members[idx];
    bool any = false;
    for (int c = 1; c <= inst.k; ++c) {
        if (!inst.revenue.at(v, c).is_positive()) continue;
        bool clash = false;
        for (std::size_t j = 0; j < idx && !clash; ++j)
            if (colors[j] == c && inst.g().adjacent(members[j], v)) clash = true;
        if (clash) continue;
        colors[idx] = c;
        any |= best_full_coloring(inst, members, idx + 1, colors, acc + inst.revenue.at(v, c),
                                  found, best);
    }
    return any;
}

} // namespace

Solution subset_enumeration_optimum(const Instance& inst) {
    const int n = inst.n();
    Solution out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (mask & (std::uint64_t(1) << v)) members.push_back(v);
        std::vector<int> colors(members.size(), 0);
        bool found = false;
        Rational best;
        best_full_coloring(inst, members, 0, colors, Rational(), found, best);
        if (found && best > out.value) out.value = best;
    }
    return out;
}

int exhaustive_clique_number(const Graph& g) {
    int best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << g.n()); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < g.n(); ++v)
            if (mask & (std::uint64_t(1) << v)) members.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < members.size() && clique; ++i)
            for (std::size_t j = i + 1; j < members.size() && clique; ++j)
                if (!g.adjacent(members[i], members[j])) clique = false;
        if (clique) best = std::max(best, static_cast<int>(members.size()));
    }
    return best;
}

bool naive_contains_induced(const Graph& host, const Pattern& p) {
    const int m = p.graph.n();
    if (host.n() < m) return false;
    std::vector<int> pick(static_cast<std::size_t>(m));
    std::vector<int> verts(static_cast<std::size_t>(host.n()));
    std::iota(verts.begin(), verts.end(), 0);

    std::vector<char> in_use(static_cast<std::size_t>(host.n()), 0);
    auto choose = [&](auto&& self, int depth, int lo) -> bool {
        if (depth == m) {
            std::vector<int> perm(pick);
            std::sort(perm.begin(), perm.end());
            do {
                bool match = true;
                for (int i = 0; i < m && match; ++i)
                    for (int j = i + 1; j < m && match; ++j)
                        if (p.graph.adjacent(i, j) !=
                            host.adjacent(perm[static_cast<std::size_t>(i)],
                                          perm[static_cast<std::size_t>(j)]))
                            match = false;
                if (match) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        }
        for (int v = lo; v < host.n(); ++v) {
            if (in_use[static_cast<std::size_t>(v)]) continue;
            in_use[static_cast<std::size_t>(v)] = 1;
            pick[static_cast<std::size_t>(depth)] = v;
            if (self(self, depth + 1, v + 1)) return true;
            in_use[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    return choose(choose, 0, 0);
}

Rational max_weight_independent_set(const Instance& inst) {
    const int n = inst.n();
    Rational best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        Rational total;
        bool independent = true;
        for (int v = 0; v < n && independent; ++v) {
            if (!(mask & (std::uint64_t(1) << v))) continue;
            for (int u = v + 1; u < n && independent; ++u)
                if ((mask & (std::uint64_t(1) << u)) && inst.g().adjacent(u, v))
                    independent = false;
            total += inst.revenue.at(v, 1);
        }
        if (independent && total > best) best = total;
    }
    return best;
}

} // namespace mpkc::testutil
