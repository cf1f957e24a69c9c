#include "mpkc/fat_dp.hpp"

#include <algorithm>
#include <numeric>

#include "mpkc/errors.hpp"
#include "mpkc/parallel.hpp"

namespace mpkc {

namespace {

constexpr int kMaxColorsForSubsets = 16;

Instance restrict_part_colors(const Instance& inst, const VertexSet& part, std::uint32_t allowed) {
    RevenuePatch patch(inst.revenue);
    part.for_each([&](int v) {
        for (int c = 1; c <= inst.k; ++c)
            if (!(allowed & (1u << (c - 1)))) patch.zero(v, c);
    });
    return Instance{inst.graph, inst.k, patch.take()};
}

void verify_fat_structure(const Instance& inst, const std::vector<VertexSet>& parts,
                          SpineKind kind) {
    const int r = static_cast<int>(parts.size());
    VertexSet all(inst.n());
    int total = 0;
    for (const auto& part : parts) {
        all |= part;
        total += part.count();
    }
    if (!(all == VertexSet::full(inst.n())) || total != inst.n())
        throw InternalError("fat DP: parts do not partition the instance");
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            bool consecutive = (j == i + 1) || (kind == SpineKind::Cycle && i == 0 && j == r - 1);
            const VertexSet& a = parts[std::size_t(i)];
            const VertexSet& b = parts[std::size_t(j)];
            if (consecutive ? !is_complete_between(inst.g(), a, b)
                            : !is_anticomplete_between(inst.g(), a, b))
                throw InternalError("fat DP: part adjacency is not a fat " +
                                    std::string(kind == SpineKind::Path ? "path" : "cycle"));
        }
}

} // namespace

std::vector<std::uint32_t> canonical_color_masks(int k) {
    std::vector<std::uint32_t> order(std::size_t(1) << k);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return order;
}

Solution solve_fat(const Instance& inst, const std::vector<VertexSet>& parts, SpineKind kind,
                   const InnerSolver& inner, const FatDpOptions& opts, FatDpTrace* trace) {
    const int r = static_cast<int>(parts.size());
    const int k = inst.k;
    if (r == 0) {
        if (inst.n() != 0) throw InputError("fat DP: no parts for a non-empty instance");
        return Solution{};
    }
    if (kind == SpineKind::Cycle && r < 3) throw InputError("fat DP: cycle needs at least 3 parts");
    if (k > kMaxColorsForSubsets)
        throw ResourceError("fat DP color-subset space infeasible for k = " + std::to_string(k));
    if (opts.verify_structure) verify_fat_structure(inst, parts, kind);

    const std::uint32_t full = (k == 32 ? ~0u : (1u << k) - 1);
    const std::size_t masks = std::size_t(1) << k;

    // part subinstances share one vertex map each; revenue varies per mask
    std::vector<std::vector<int>> maps(static_cast<std::size_t>(r));
    std::vector<std::vector<Solution>> opt_sol(static_cast<std::size_t>(r), std::vector<Solution>(masks));
    parallel_for(static_cast<long long>(r) * static_cast<long long>(masks),
                 opts.parallel, opts.workers, [&](long long flat) {
                     int i = static_cast<int>(flat / static_cast<long long>(masks));
                     auto b = static_cast<std::uint32_t>(flat % static_cast<long long>(masks));
                     SubInstance sub =
                         subinstance(restrict_part_colors(inst, parts[std::size_t(i)], b),
                                     parts[std::size_t(i)]);
                     opt_sol[std::size_t(i)][b] = inner(sub.instance);
                     if (b == 0) maps[std::size_t(i)] = std::move(sub.to_parent);
                 });

    if (trace) {
        trace->opt.assign(std::size_t(r), std::vector<Rational>(masks));
        for (int i = 0; i < r; ++i)
            for (std::size_t b = 0; b < masks; ++b)
                trace->opt[std::size_t(i)][b] = opt_sol[std::size_t(i)][b].value;
    }

    const std::vector<std::uint32_t> canonical = canonical_color_masks(k);
    const Rational zero;

    // One run of the path recurrence; for cycles, first-layer color sets are
    // limited to the guess and the last layer is zeroed when it meets it.
    struct DpResult {
        Rational value;
        std::vector<std::uint32_t> layer_masks; // chosen B per layer
        bool last_layer_zeroed = false;
    };
    auto run_path_dp = [&](std::uint32_t first_allowed, bool cycle_guess) -> DpResult {
        auto effective_opt = [&](int i, std::uint32_t b) -> const Rational& {
            if (cycle_guess && i == r - 1 && (b & first_allowed)) return zero;
            return opt_sol[std::size_t(i)][b].value;
        };
        std::vector<std::vector<Rational>> pre(static_cast<std::size_t>(r), std::vector<Rational>(masks));
        std::vector<std::vector<std::uint32_t>> choice(
            static_cast<std::size_t>(r), std::vector<std::uint32_t>(masks, 0));
        std::vector<char> layer0_ok(masks, 0);
        for (std::size_t b = 0; b < masks; ++b) {
            if ((static_cast<std::uint32_t>(b) & ~first_allowed) == 0) {
                layer0_ok[b] = 1;
                pre[0][b] = effective_opt(0, static_cast<std::uint32_t>(b));
            }
        }
        for (int i = 1; i < r; ++i) {
            for (std::size_t b = 0; b < masks; ++b) {
                std::uint32_t avail = full & ~static_cast<std::uint32_t>(b);
                if (i == 1) avail &= first_allowed;
                // ascending enumeration of the submasks of avail; the empty
                // set always qualifies, so every state is reachable
                bool first = true;
                std::uint32_t bp = 0;
                while (true) {
                    if (first || pre[std::size_t(i - 1)][bp] > pre[std::size_t(i)][b]) {
                        pre[std::size_t(i)][b] = pre[std::size_t(i - 1)][bp];
                        choice[std::size_t(i)][b] = bp;
                        first = false;
                    }
                    if (bp == avail) break;
                    bp = (bp - avail) & avail;
                }
                pre[std::size_t(i)][b] += effective_opt(i, static_cast<std::uint32_t>(b));
            }
        }
        DpResult res;
        bool first = true;
        std::uint32_t best_mask = 0;
        for (std::uint32_t b : canonical) {
            if (r == 1 && !layer0_ok[b]) continue;
            if (first || pre[std::size_t(r - 1)][b] > res.value) {
                res.value = pre[std::size_t(r - 1)][b];
                best_mask = b;
                first = false;
            }
        }
        res.layer_masks.assign(std::size_t(r), 0);
        res.layer_masks[std::size_t(r - 1)] = best_mask;
        for (int i = r - 1; i >= 1; --i)
            res.layer_masks[std::size_t(i - 1)] = choice[std::size_t(i)][res.layer_masks[std::size_t(i)]];
        res.last_layer_zeroed =
            cycle_guess && (res.layer_masks[std::size_t(r - 1)] & first_allowed) != 0;
        return res;
    };

    DpResult best;
    if (kind == SpineKind::Path) {
        best = run_path_dp(full, false);
    } else {
        bool first = true;
        for (std::uint32_t guess : canonical) {
            DpResult res = run_path_dp(guess, true);
            if (first || res.value > best.value) {
                best = std::move(res);
                first = false;
            }
        }
    }

    std::vector<MappedSolution> pieces;
    Solution empty;
    for (int i = 0; i < r; ++i) {
        const bool zeroed = best.last_layer_zeroed && i == r - 1;
        const Solution& part_sol =
            zeroed ? empty : opt_sol[std::size_t(i)][best.layer_masks[std::size_t(i)]];
        pieces.push_back({&part_sol, &maps[std::size_t(i)]});
    }
    Solution merged = merge_solutions(inst, pieces);
    if (merged.value != best.value)
        throw InternalError("fat DP: reconstructed witness does not match the table value");
    return merged;
}

} // namespace mpkc
