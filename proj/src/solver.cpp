#include "mpkc/solver.hpp"

#include <algorithm>
#include <cmath>

#include "mpkc/errors.hpp"
#include "mpkc/matching.hpp"
#include "mpkc/oracle.hpp"
#include "mpkc/parallel.hpp"
#include "mpkc/patterns.hpp"

namespace mpkc {

StatsView& StatsView::operator+=(const StatsView& o) {
    nodes += o.nodes;
    branches += o.branches;
    case_a_nodes += o.case_a_nodes;
    case_b_nodes += o.case_b_nodes;
    case_a_branches += o.case_a_branches;
    case_b_branches += o.case_b_branches;
    subexp_branches += o.subexp_branches;
    oracle_calls += o.oracle_calls;
    disjoint_checks += o.disjoint_checks;
    disjoint_failures += o.disjoint_failures;
    chair_dominator_checks += o.chair_dominator_checks;
    return *this;
}

CaseAPartition case_a_partition(const Graph& g, const InducedPath& p) {
    if (p.empty() || !is_induced_path(g, p)) throw InputError("case A needs an induced path");
    const int plen = static_cast<int>(p.size());
    CaseAPartition part;
    part.path = p;
    part.around.assign(static_cast<std::size_t>(plen) + 1, VertexSet(g.n()));
    VertexSet on_path(g.n());
    for (int v : p) on_path.set(v);
    for (int v = 0; v < g.n(); ++v) {
        if (on_path.test(v)) continue;
        int slot = plen; // outside N[P]
        for (int j = 0; j < plen; ++j) {
            if (g.adjacent(v, p[static_cast<std::size_t>(j)])) {
                slot = j;
                break;
            }
        }
        part.around[static_cast<std::size_t>(slot)].set(v);
    }
    return part;
}

void check_case_a_partition(const Graph& g, const CaseAPartition& part) {
    const int plen = static_cast<int>(part.path.size());
    VertexSet all(g.n());
    int total = 0;
    for (const auto& s : part.around) {
        all |= s;
        total += s.count();
    }
    for (int v : part.path) {
        if (all.test(v)) throw InternalError("case A: path vertex inside a part");
        ++total;
    }
    if (total != g.n()) throw InternalError("case A: parts do not partition V minus the path");
    for (int j = 0; j < plen; ++j) {
        VertexSet xj(g.n());
        xj.set(part.path[static_cast<std::size_t>(j)]);
        if (!is_complete_between(g, xj, part.around[static_cast<std::size_t>(j)]))
            throw InternalError("case A: path vertex not complete to its part");
        for (int j2 = j + 1; j2 <= plen; ++j2)
            if (!is_anticomplete_between(g, xj, part.around[static_cast<std::size_t>(j2)]))
                throw InternalError("case A: path vertex sees a later part");
    }
}

Instance apply_case_a_forbiddings(const Instance& inst, const CaseAPartition& part,
                                  const GuessA& guess) {
    const Graph& g = inst.g();
    const int plen = static_cast<int>(part.path.size());
    const int k = inst.k;
    if (static_cast<int>(guess.path_colors.size()) != plen ||
        static_cast<int>(guess.seps.size()) != plen)
        throw InputError("guess dimensions do not match the partition");

    RevenuePatch patch(inst.revenue);

    // colored path vertices forbid their color to every neighbor
    for (int j = 0; j < plen; ++j) {
        int c = guess.path_colors[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        g.row(part.path[static_cast<std::size_t>(j)]).for_each([&](int u) { patch.zero(u, c); });
    }

    // separator vertices keep only their color and forbid it around themselves
    for (int j = 0; j < plen; ++j) {
        for (int i = 1; i <= k; ++i) {
            for (int v : guess.seps[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)]) {
                g.row(v).for_each([&](int u) { patch.zero(u, i); });
                patch.keep_only(v, i);
            }
        }
    }

    // later vertices that miss a separator set kill its color on their
    // neighbors inside the earlier part
    VertexSet later(g.n());
    for (int j = plen; j-- > 0;) {
        later |= part.around[static_cast<std::size_t>(j) + 1];
        for (int i = 1; i <= k; ++i) {
            VertexSet sep(g.n());
            for (int v : guess.seps[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)])
                sep.set(v);
            later.for_each([&](int v) {
                if (g.row(v).intersects(sep)) return;
                (g.row(v) & part.around[static_cast<std::size_t>(j)]).for_each([&](int u) {
                    patch.zero(u, i);
                });
            });
        }
    }
    return Instance{inst.graph, inst.k, patch.take()};
}

Instance apply_case_b_forbiddings(const Instance& inst, const FatDecomposition& dec,
                                  const GuessB& guess) {
    const Graph& g = inst.g();
    const int k = inst.k;
    if (static_cast<int>(guess.seps.size()) != k)
        throw InputError("guess needs one separator set per color");
    RevenuePatch patch(inst.revenue);
    for (int i = 1; i <= k; ++i) {
        for (int d : guess.seps[static_cast<std::size_t>(i - 1)]) {
            g.row(d).for_each([&](int u) { patch.zero(u, i); });
            patch.keep_only(d, i);
        }
    }
    for (int i = 1; i <= k; ++i) {
        VertexSet sep(g.n());
        for (int d : guess.seps[static_cast<std::size_t>(i - 1)]) sep.set(d);
        dec.remainder.for_each([&](int v) {
            if (g.row(v).intersects(sep)) return;
            (g.row(v) & dec.separator).for_each([&](int u) { patch.zero(u, i); });
        });
    }
    return Instance{inst.graph, inst.k, patch.take()};
}

VertexSet minimal_dominators(const Graph& g, const VertexSet& s0, const VertexSet& t) {
    if (s0.intersects(t)) throw InputError("minimal_dominators: sets overlap");
    auto covered = [&](const VertexSet& s) {
        VertexSet out(g.n());
        s.for_each([&](int v) { out |= g.row(v); });
        return out & t;
    };
    VertexSet target = covered(s0);
    VertexSet current = s0;
    for (int v : s0.to_vector()) {
        VertexSet without = current;
        without.reset(v);
        if (covered(without) == target) current = std::move(without);
    }
    return current;
}

Solution solve_complete(const Instance& inst) {
    if (!is_complete_graph(inst.g())) throw InputError("solve_complete needs a complete graph");
    auto matched = max_weight_assignment(
        inst.n(), inst.k,
        [&](int v, int c) -> const Rational& { return inst.revenue.at(v, c + 1); });
    std::vector<std::pair<int, int>> colored;
    colored.reserve(matched.size());
    for (auto [v, c] : matched) colored.emplace_back(v, c + 1);
    return normalized_solution(inst, std::move(colored));
}

namespace {

struct Candidate {
    bool valid = false;
    Rational value;
    Solution sol;

    void offer(Solution s) {
        if (!valid || s.value > value) {
            value = s.value;
            sol = std::move(s);
            valid = true;
        }
    }
};

Candidate pick_first_best(std::vector<Candidate>& slots) {
    Candidate best;
    for (auto& c : slots) {
        if (!c.valid) continue;
        if (!best.valid || c.value > best.value) best = std::move(c);
    }
    return best;
}

int clique_threshold(int n) {
    double v = std::sqrt(static_cast<double>(n) / std::log2(static_cast<double>(n)));
    return static_cast<int>(std::ceil(v - 1e-12));
}

void validate_instance(const Instance& inst) {
    if (!inst.graph) throw InputError("instance without a graph");
    if (inst.k < 1) throw InputError("instance needs k >= 1");
    if (inst.revenue.n() != inst.n() || inst.revenue.k() != inst.k)
        throw InputError("revenue dimensions do not match the instance");
}

} // namespace

Solver::Solver(SolverConfig cfg) : cfg_(cfg) {
    if (cfg_.n0 < 1) throw InputError("n0 must be at least 1");
    if (cfg_.branch_cap < 1) throw InputError("branch cap must be at least 1");
    workers_ = cfg_.workers > 0 ? cfg_.workers : worker_budget();
}

StatsView Solver::stats() const {
    StatsView v;
    v.nodes = stats_.nodes.load();
    v.branches = stats_.branches.load();
    v.case_a_nodes = stats_.case_a_nodes.load();
    v.case_b_nodes = stats_.case_b_nodes.load();
    v.case_a_branches = stats_.case_a_branches.load();
    v.case_b_branches = stats_.case_b_branches.load();
    v.subexp_branches = stats_.subexp_branches.load();
    v.oracle_calls = stats_.oracle_calls.load();
    v.disjoint_checks = stats_.disjoint_checks.load();
    v.disjoint_failures = stats_.disjoint_failures.load();
    v.chair_dominator_checks = stats_.chair_dominator_checks.load();
    return v;
}

void Solver::count_branch(std::atomic<long long>& bucket) {
    bucket.fetch_add(1, std::memory_order_relaxed);
    long long total = stats_.branches.fetch_add(1, std::memory_order_relaxed) + 1;
    if (total > cfg_.branch_cap)
        throw ResourceError("branch budget of " + std::to_string(cfg_.branch_cap) +
                            " exceeded; the instance is too large for exhaustive guessing");
}

bool Solver::parallel_here(const Ctx& ctx) const {
    return ctx.depth == 0 && workers_ > 1 && !in_parallel_region();
}

void Solver::root_class_check(const Instance& inst) {
    chair_free_root_ = false;
    if (cfg_.assert_level != AssertLevel::Full) return;
    ClassMembership m = class_membership(inst.g());
    chair_free_root_ = m.bull_free && m.chair_free;
}

Solution Solver::solve(const Instance& inst) {
    validate_instance(inst);
    root_class_check(inst);
    switch (cfg_.mode) {
        case SolveMode::Oracle:
            stats_.oracle_calls.fetch_add(1, std::memory_order_relaxed);
            return brute_force(inst, cfg_.oracle_limit);
        case SolveMode::Subexp: return subexp(inst, Ctx{});
        case SolveMode::Auto: default: return dispatch(inst, Ctx{});
    }
}

Solution Solver::solve_subexponential(const Instance& inst) {
    validate_instance(inst);
    root_class_check(inst);
    return subexp(inst, Ctx{});
}

InducedPath Solver::build_path(const Instance& inst) const {
    const Graph& g = inst.g();
    int start = -1;
    for (int v = 0; v < g.n() && start == -1; ++v)
        if (g.degree(v) != g.n() - 1) start = v;
    if (start == -1) throw InternalError("build_path called on a complete graph");
    InducedPath p = extend_maximal(g, gyarfas_path(g, start));
    // the closed neighborhood only grew, but check rather than assume
    if (!halving_bound_holds(g, p))
        throw InternalError("halving bound lost while extending the path");
    return p;
}

Solution Solver::dispatch(const Instance& inst, Ctx ctx) {
    stats_.nodes.fetch_add(1, std::memory_order_relaxed);
    if (inst.n() <= cfg_.n0) {
        stats_.oracle_calls.fetch_add(1, std::memory_order_relaxed);
        return brute_force(inst, std::max(cfg_.n0, cfg_.oracle_limit));
    }

    auto comps = connected_components(inst.g());
    if (comps.size() > 1) {
        std::vector<SubInstance> subs;
        subs.reserve(comps.size());
        for (const auto& comp : comps) subs.push_back(subinstance(inst, comp));
        std::vector<Solution> sols(subs.size());
        parallel_for(static_cast<long long>(subs.size()), parallel_here(ctx), workers_,
                     [&](long long i) {
                         sols[static_cast<std::size_t>(i)] =
                             dispatch(subs[static_cast<std::size_t>(i)].instance, ctx.child());
                     });
        std::vector<MappedSolution> pieces;
        pieces.reserve(subs.size());
        for (std::size_t i = 0; i < subs.size(); ++i)
            pieces.push_back({&sols[i], &subs[i].to_parent});
        return merge_solutions(inst, pieces);
    }

    if (is_complete_graph(inst.g())) return solve_complete(inst);

    InducedPath p = build_path(inst);
    if (static_cast<int>(p.size()) <= 6) return case_a(inst, p, ctx);
    return case_b(inst, p, ctx);
}

Solution Solver::case_a(const Instance& inst, const InducedPath& path, Ctx ctx) {
    stats_.case_a_nodes.fetch_add(1, std::memory_order_relaxed);
    const Graph& g = inst.g();
    const int plen = static_cast<int>(path.size());
    const int k = inst.k;

    CaseAPartition part = case_a_partition(g, path);
    if (cfg_.assert_level != AssertLevel::Off) check_case_a_partition(g, part);
    if (cfg_.assert_level == AssertLevel::Full && chair_free_root_ && plen >= 3) {
        path_neighborhood_dominators(g, path);
        stats_.chair_dominator_checks.fetch_add(1, std::memory_order_relaxed);
    }

    // suffix[j] = all vertices in parts after A_{j+1} (including V \ N[P])
    std::vector<VertexSet> suffix(static_cast<std::size_t>(plen) + 1, VertexSet(g.n()));
    for (int j = plen - 1; j >= 0; --j)
        suffix[static_cast<std::size_t>(j)] =
            suffix[static_cast<std::size_t>(j) + 1] | part.around[static_cast<std::size_t>(j) + 1];

    std::vector<char> cross(static_cast<std::size_t>(plen), 0);
    for (int j = 0; j < plen; ++j)
        cross[static_cast<std::size_t>(j)] =
            part.around[static_cast<std::size_t>(j)].intersects(
                open_neighborhood(g, suffix[static_cast<std::size_t>(j)]))
                ? 1
                : 0;

    // which path positions each vertex sees
    std::vector<std::uint32_t> path_adj(static_cast<std::size_t>(g.n()), 0);
    for (int j = 0; j < plen; ++j)
        g.row(path[static_cast<std::size_t>(j)]).for_each([&](int v) {
            path_adj[static_cast<std::size_t>(v)] |= 1u << j;
        });

    // all consistent path assignments, lexicographic with uncolored first
    std::vector<std::vector<int>> assignments;
    {
        std::vector<int> cur(static_cast<std::size_t>(plen), 0);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == plen) {
                assignments.push_back(cur);
                return;
            }
            for (int val = 0; val <= k; ++val) {
                if (val > 0) {
                    if (!inst.revenue.at(path[static_cast<std::size_t>(pos)], val).is_positive())
                        continue;
                    if (pos > 0 && cur[static_cast<std::size_t>(pos - 1)] == val) continue;
                }
                cur[static_cast<std::size_t>(pos)] = val;
                self(self, pos + 1);
                cur[static_cast<std::size_t>(pos)] = 0;
            }
        };
        rec(rec, 0);
    }

    std::vector<Candidate> slots(assignments.size());
    parallel_for(static_cast<long long>(assignments.size()), parallel_here(ctx), workers_,
                 [&](long long ai) {
        const std::vector<int>& assign = assignments[static_cast<std::size_t>(ai)];
        std::vector<std::uint32_t> colored_positions(static_cast<std::size_t>(k) + 1, 0);
        for (int j = 0; j < plen; ++j)
            if (assign[static_cast<std::size_t>(j)] != 0)
                colored_positions[static_cast<std::size_t>(assign[static_cast<std::size_t>(j)])] |=
                    1u << j;

        // candidate separator sets per (position, color); the empty set first
        const int pairs = plen * k;
        std::vector<std::vector<std::vector<int>>> options(static_cast<std::size_t>(pairs));
        for (int j = 0; j < plen; ++j) {
            for (int i = 1; i <= k; ++i) {
                auto& opts = options[static_cast<std::size_t>(j * k + i - 1)];
                opts.push_back({});
                if (!cross[static_cast<std::size_t>(j)]) continue;
                if (assign[static_cast<std::size_t>(j)] == i) continue;
                std::vector<int> verts;
                part.around[static_cast<std::size_t>(j)].for_each([&](int v) {
                    if (!inst.revenue.at(v, i).is_positive()) return;
                    if (path_adj[static_cast<std::size_t>(v)] &
                        colored_positions[static_cast<std::size_t>(i)])
                        return;
                    verts.push_back(v);
                });
                for (int v : verts) opts.push_back({v});
                for (std::size_t a = 0; a < verts.size(); ++a)
                    for (std::size_t b = a + 1; b < verts.size(); ++b)
                        if (!g.adjacent(verts[a], verts[b])) opts.push_back({verts[a], verts[b]});
            }
        }

        Candidate local;
        std::vector<VertexSet> chosen(static_cast<std::size_t>(k), VertexSet(g.n()));
        std::vector<const std::vector<int>*> pick(static_cast<std::size_t>(pairs), nullptr);

        auto leaf = [&]() {
            count_branch(stats_.case_a_branches);
            GuessA guess;
            guess.path_colors = assign;
            guess.seps.assign(static_cast<std::size_t>(plen),
                              std::vector<std::vector<int>>(static_cast<std::size_t>(k)));
            for (int j = 0; j < plen; ++j)
                for (int i = 1; i <= k; ++i)
                    guess.seps[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)] =
                        *pick[static_cast<std::size_t>(j * k + i - 1)];

            Instance modified = apply_case_a_forbiddings(inst, part, guess);

            if (cfg_.assert_level == AssertLevel::Full) {
                stats_.disjoint_checks.fetch_add(1, std::memory_order_relaxed);
                for (int a = 0; a <= plen; ++a) {
                    for (int b = a + 1; b <= plen; ++b) {
                        part.around[static_cast<std::size_t>(a)].for_each([&](int u) {
                            (g.row(u) & part.around[static_cast<std::size_t>(b)]).for_each([&](int v) {
                                for (int i = 1; i <= k; ++i) {
                                    if (modified.revenue.at(u, i).is_positive() &&
                                        modified.revenue.at(v, i).is_positive()) {
                                        stats_.disjoint_failures.fetch_add(
                                            1, std::memory_order_relaxed);
                                        throw InternalError(
                                            "forbidding rules left a cross edge with "
                                            "overlapping color lists");
                                    }
                                }
                            });
                        });
                    }
                }
            }

            // guessed path coloring, valued against this node's revenue
            std::vector<std::pair<int, int>> path_colored;
            for (int j = 0; j < plen; ++j)
                if (assign[static_cast<std::size_t>(j)] != 0)
                    path_colored.emplace_back(path[static_cast<std::size_t>(j)],
                                              assign[static_cast<std::size_t>(j)]);
            Solution path_sol = normalized_solution(inst, std::move(path_colored));

            std::vector<SubInstance> subs;
            std::vector<Solution> sols;
            for (int j = 0; j < plen; ++j) {
                if (part.around[static_cast<std::size_t>(j)].empty()) continue;
                subs.push_back(subinstance(modified, part.around[static_cast<std::size_t>(j)]));
                sols.push_back(dispatch(subs.back().instance, ctx.child()));
            }
            for (const auto& comp :
                 components_within(g, part.around[static_cast<std::size_t>(plen)])) {
                subs.push_back(subinstance(modified, comp));
                sols.push_back(dispatch(subs.back().instance, ctx.child()));
            }

            std::vector<MappedSolution> pieces;
            pieces.push_back({&path_sol, nullptr});
            for (std::size_t s = 0; s < subs.size(); ++s)
                pieces.push_back({&sols[s], &subs[s].to_parent});
            local.offer(merge_solutions(inst, pieces));
        };

        auto dfs = [&](auto&& self, int q) -> void {
            if (q == pairs) {
                leaf();
                return;
            }
            const int color = q % k + 1;
            for (const auto& opt : options[static_cast<std::size_t>(q)]) {
                bool ok = true;
                for (int v : opt)
                    if (g.row(v).intersects(chosen[static_cast<std::size_t>(color - 1)])) ok = false;
                if (!ok) continue;
                for (int v : opt) chosen[static_cast<std::size_t>(color - 1)].set(v);
                pick[static_cast<std::size_t>(q)] = &opt;
                self(self, q + 1);
                for (int v : opt) chosen[static_cast<std::size_t>(color - 1)].reset(v);
            }
        };
        dfs(dfs, 0);
        slots[static_cast<std::size_t>(ai)] = std::move(local);
    });

    Candidate best = pick_first_best(slots);
    if (!best.valid) throw InternalError("case A produced no branch");
    return std::move(best.sol);
}

Solution Solver::case_b(const Instance& inst, const InducedPath& path, Ctx ctx) {
    stats_.case_b_nodes.fetch_add(1, std::memory_order_relaxed);
    const Graph& g = inst.g();
    const int k = inst.k;
    if (k > 16)
        throw ResourceError("color-subset guessing infeasible for k = " + std::to_string(k));

    FatDecomposition dec = build_decomposition(g, path);
    if (cfg_.assert_level == AssertLevel::Full && chair_free_root_) {
        chair_component_dominators(g, dec);
        stats_.chair_dominator_checks.fetch_add(1, std::memory_order_relaxed);
    }

    const VertexSet fat = dec.fat_union();
    const std::vector<int> d_verts = dec.separator.to_vector();
    const std::vector<VertexSet> t_comps = components_within(g, dec.remainder);
    const std::vector<std::uint32_t> masks = canonical_color_masks(k);

    std::vector<Candidate> slots(masks.size());
    parallel_for(static_cast<long long>(masks.size()), parallel_here(ctx), workers_,
                 [&](long long mi) {
        const std::uint32_t allowed_on_fat = masks[static_cast<std::size_t>(mi)];

        RevenuePatch patch(inst.revenue);
        fat.for_each([&](int v) {
            for (int c = 1; c <= k; ++c)
                if (!(allowed_on_fat & (1u << (c - 1)))) patch.zero(v, c);
        });
        dec.separator.for_each([&](int v) {
            for (int c = 1; c <= k; ++c)
                if (allowed_on_fat & (1u << (c - 1))) patch.zero(v, c);
        });
        Instance with_guess{inst.graph, inst.k, patch.take()};

        // the fat structure, solved once per color-set guess
        SubInstance sub_fat = subinstance(with_guess, fat);
        std::vector<int> parent_to_sub(static_cast<std::size_t>(g.n()), -1);
        for (std::size_t i = 0; i < sub_fat.to_parent.size(); ++i)
            parent_to_sub[static_cast<std::size_t>(sub_fat.to_parent[i])] = static_cast<int>(i);
        std::vector<VertexSet> sub_parts;
        sub_parts.reserve(dec.parts.size());
        for (const auto& p : dec.parts) {
            VertexSet sp(sub_fat.instance.n());
            p.for_each([&](int v) { sp.set(parent_to_sub[static_cast<std::size_t>(v)]); });
            sub_parts.push_back(std::move(sp));
        }
        FatDpOptions fat_opts;
        fat_opts.verify_structure = cfg_.assert_level == AssertLevel::Full;
        fat_opts.parallel = false; // already inside the color-set loop
        fat_opts.workers = workers_;
        Solution fat_sol = solve_fat(
            sub_fat.instance, sub_parts, dec.kind,
            [&](const Instance& in) { return dispatch(in, ctx.child()); }, fat_opts);

        // separator-set options per color, under the guessed forbiddings
        std::vector<std::vector<std::vector<int>>> options(static_cast<std::size_t>(k));
        for (int i = 1; i <= k; ++i) {
            auto& opts = options[static_cast<std::size_t>(i - 1)];
            opts.push_back({});
            std::vector<int> verts;
            for (int d : d_verts)
                if (with_guess.revenue.at(d, i).is_positive()) verts.push_back(d);
            for (int v : verts) opts.push_back({v});
            for (std::size_t a = 0; a < verts.size(); ++a)
                for (std::size_t b = a + 1; b < verts.size(); ++b)
                    if (!g.adjacent(verts[a], verts[b])) opts.push_back({verts[a], verts[b]});
        }

        Candidate local;
        std::vector<const std::vector<int>*> pick(static_cast<std::size_t>(k), nullptr);

        auto leaf = [&]() {
            count_branch(stats_.case_b_branches);
            GuessB guess;
            guess.fat_colors = allowed_on_fat;
            guess.seps.reserve(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) guess.seps.push_back(*pick[static_cast<std::size_t>(i)]);

            Instance modified = apply_case_b_forbiddings(with_guess, dec, guess);

            if (cfg_.assert_level == AssertLevel::Full) {
                stats_.disjoint_checks.fetch_add(1, std::memory_order_relaxed);
                dec.separator.for_each([&](int u) {
                    (g.row(u) & dec.remainder).for_each([&](int v) {
                        for (int i = 1; i <= k; ++i) {
                            if (modified.revenue.at(u, i).is_positive() &&
                                modified.revenue.at(v, i).is_positive()) {
                                stats_.disjoint_failures.fetch_add(1, std::memory_order_relaxed);
                                throw InternalError(
                                    "forbidding rules left a separator-remainder edge with "
                                    "overlapping color lists");
                            }
                        }
                    });
                });
            }

            std::vector<SubInstance> subs;
            std::vector<Solution> sols;
            if (!dec.separator.empty()) {
                subs.push_back(subinstance(modified, dec.separator));
                sols.push_back(dispatch(subs.back().instance, ctx.child()));
            }
            for (const auto& comp : t_comps) {
                subs.push_back(subinstance(modified, comp));
                sols.push_back(dispatch(subs.back().instance, ctx.child()));
            }

            std::vector<MappedSolution> pieces;
            pieces.push_back({&fat_sol, &sub_fat.to_parent});
            for (std::size_t s = 0; s < subs.size(); ++s)
                pieces.push_back({&sols[s], &subs[s].to_parent});
            local.offer(merge_solutions(inst, pieces));
        };

        auto dfs = [&](auto&& self, int color) -> void {
            if (color > k) {
                leaf();
                return;
            }
            for (const auto& opt : options[static_cast<std::size_t>(color - 1)]) {
                pick[static_cast<std::size_t>(color - 1)] = &opt;
                self(self, color + 1);
            }
        };
        dfs(dfs, 1);
        slots[static_cast<std::size_t>(mi)] = std::move(local);
    });

    Candidate best = pick_first_best(slots);
    if (!best.valid) throw InternalError("case B produced no branch");
    return std::move(best.sol);
}

Solution Solver::subexp(const Instance& inst, Ctx ctx) {
    const int n = inst.n();
    if (n <= 2) return dispatch(inst, ctx);
    const int k = inst.k;
    const Graph& g = inst.g();

    const int threshold = clique_threshold(n);
    if (threshold > 20)
        throw ResourceError("clique search infeasible at threshold " + std::to_string(threshold));
    auto clique = find_clique(g, threshold);
    if (!clique) return dispatch(inst, ctx); // clique number below the threshold

    VertexSet clique_set(g.n());
    for (int v : *clique) clique_set.set(v);
    const VertexSet rest = clique_set.complement();
    const int t = static_cast<int>(clique->size());

    // all ways to color at most min(k, t) clique vertices with distinct colors
    struct Branch {
        std::vector<std::pair<int, int>> chosen; // (vertex, color)
    };
    std::vector<Branch> branches;
    const std::vector<std::uint32_t> subsets = canonical_color_masks(t);
    for (std::uint32_t sub : subsets) {
        int size = __builtin_popcount(sub);
        if (size > std::min(k, t)) continue;
        std::vector<int> members;
        for (int i = 0; i < t; ++i)
            if (sub & (1u << i)) members.push_back((*clique)[static_cast<std::size_t>(i)]);
        std::vector<std::pair<int, int>> chosen;
        std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
        auto rec = [&](auto&& self, std::size_t idx) -> void {
            if (idx == members.size()) {
                branches.push_back({chosen});
                return;
            }
            for (int c = 1; c <= k; ++c) {
                if (used[static_cast<std::size_t>(c)]) continue;
                if (!inst.revenue.at(members[idx], c).is_positive()) continue;
                used[static_cast<std::size_t>(c)] = 1;
                chosen.emplace_back(members[idx], c);
                self(self, idx + 1);
                chosen.pop_back();
                used[static_cast<std::size_t>(c)] = 0;
            }
        };
        rec(rec, 0);
    }

    std::vector<Candidate> slots(branches.size());
    parallel_for(static_cast<long long>(branches.size()), parallel_here(ctx), workers_,
                 [&](long long bi) {
        const Branch& branch = branches[static_cast<std::size_t>(bi)];
        count_branch(stats_.subexp_branches);

        RevenuePatch patch(inst.revenue);
        for (auto [v, c] : branch.chosen)
            g.row(v).for_each([&](int u) { patch.zero(u, c); });
        Instance modified{inst.graph, inst.k, patch.take()};

        Solution chosen_sol =
            normalized_solution(inst, std::vector<std::pair<int, int>>(branch.chosen));
        SubInstance sub = subinstance(modified, rest);
        Solution rec_sol = subexp(sub.instance, ctx.child());

        std::vector<MappedSolution> pieces{{&chosen_sol, nullptr}, {&rec_sol, &sub.to_parent}};
        slots[static_cast<std::size_t>(bi)].offer(merge_solutions(inst, pieces));
    });

    Candidate best = pick_first_best(slots);
    if (!best.valid) throw InternalError("clique wrapper produced no branch");
    return std::move(best.sol);
}

Solution solve(const Instance& inst, const SolverConfig& cfg) {
    Solver solver(cfg);
    return solver.solve(inst);
}

Solution solve_subexponential(const Instance& inst, const SolverConfig& cfg) {
    Solver solver(cfg);
    return solver.solve_subexponential(inst);
}

} // namespace mpkc
