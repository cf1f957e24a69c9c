#include "mpkc/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "mpkc/errors.hpp"

namespace mpkc {

namespace {

struct Search {
    const Instance& inst;
    std::vector<int> order;            // vertices by descending degree
    std::vector<Rational> suffix_best; // best possible gain from position t onward
    std::vector<VertexSet> taken;      // taken[c-1] = already-assigned vertices with color c
    std::vector<std::pair<int, int>> current;
    Solution best;

    explicit Search(const Instance& in) : inst(in) {
        const int n = inst.n();
        order.resize(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return inst.g().degree(a) > inst.g().degree(b);
        });
        suffix_best.assign(static_cast<std::size_t>(n) + 1, Rational());
        for (int t = n; t-- > 0;) {
            Rational row_max;
            for (int c = 1; c <= inst.k; ++c)
                row_max = std::max(row_max, inst.revenue.at(order[static_cast<std::size_t>(t)], c));
            suffix_best[static_cast<std::size_t>(t)] =
                suffix_best[static_cast<std::size_t>(t) + 1] + row_max;
        }
        taken.assign(static_cast<std::size_t>(inst.k), VertexSet(n));
    }

    void run(int t, Rational value) {
        const int n = inst.n();
        if (t == n) {
            if (value > best.value) {
                best.colored = current;
                std::sort(best.colored.begin(), best.colored.end());
                best.value = std::move(value);
            }
            return;
        }
        // cannot strictly beat the incumbent: the first optimum found is kept
        if (value + suffix_best[static_cast<std::size_t>(t)] <= best.value) return;
        int v = order[static_cast<std::size_t>(t)];
        run(t + 1, value); // leave v uncolored
        for (int c = 1; c <= inst.k; ++c) {
            const Rational& gain = inst.revenue.at(v, c);
            if (gain.is_zero()) continue;
            if (taken[static_cast<std::size_t>(c - 1)].intersects(inst.g().row(v))) continue;
            taken[static_cast<std::size_t>(c - 1)].set(v);
            current.emplace_back(v, c);
            run(t + 1, value + gain);
            current.pop_back();
            taken[static_cast<std::size_t>(c - 1)].reset(v);
        }
    }
};

} // namespace

Solution brute_force(const Instance& inst, int safety_limit) {
    if (inst.n() > safety_limit)
        throw ResourceError("brute force limited to " + std::to_string(safety_limit) +
                            " vertices, got " + std::to_string(inst.n()));
    Search search(inst);
    search.run(0, Rational());
    return search.best;
}

} // namespace mpkc
