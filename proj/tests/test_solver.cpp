#include <doctest.h>

#include "mpkc/diff.hpp"
#include "mpkc/errors.hpp"
#include "mpkc/gen.hpp"
#include "mpkc/list_coloring.hpp"
#include "mpkc/oracle.hpp"
#include "mpkc/solver.hpp"
#include "testutil.hpp"

using namespace mpkc;
using testutil::graph_of;
using testutil::unit_instance;

namespace {

SolverConfig deep_config() {
    SolverConfig cfg;
    cfg.n0 = 4; // force the recursion through both cases
    return cfg;
}

Instance random_class_instance(std::uint64_t seed, int n_max, int k, ClassFilter filter) {
    Rng rng(seed);
    GenSpec spec;
    spec.n = rng.range(1, n_max);
    spec.edge_prob = 0.05 + 0.85 * rng.unit();
    spec.filter = filter;
    spec.seed = rng.next();
    Graph g = gen_graph(spec);
    return make_instance(g, k, gen_revenue(g.n(), k, 0, 9, 0.3, rng.next()));
}

} // namespace

TEST_CASE("solve basics") {
    Graph bull = graph_of(5, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {4, 1}});
    CHECK(solve(unit_instance(bull, 1), deep_config()).value == Rational(3));
    CHECK(solve(unit_instance(Graph::cycle(7), 2), deep_config()).value == Rational(6));
    CHECK(solve(unit_instance(Graph::cycle(7), 3), deep_config()).value == Rational(7));
}

TEST_CASE("case A alone handles a bare short path") {
    // the whole graph is the path: only the guessed path coloring contributes
    CHECK(solve(unit_instance(Graph::path(6), 2), deep_config()).value == Rational(6));
}

TEST_CASE("case A copes with a two-vertex maximal path") {
    // starting from 0, the smallest-id extension picks 1 and then stalls:
    // 2 sees both ends and the tail {3,4} sees neither
    Graph g = graph_of(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
    InducedPath p = extend_maximal(g, gyarfas_path(g, 0));
    CHECK(p.size() == 2);
    CHECK(solve(unit_instance(g, 2), deep_config()).value == brute_force(unit_instance(g, 2)).value);
    CHECK(solve(unit_instance(g, 1), deep_config()).value == Rational(2));
}

TEST_CASE("case B alone handles bare fat spines") {
    CHECK(solve(unit_instance(Graph::path(7), 1), deep_config()).value == Rational(4));
    CHECK(solve(unit_instance(Graph::cycle(8), 2), deep_config()).value == Rational(8));
    CHECK(solve(unit_instance(Graph::cycle(9), 2), deep_config()).value == Rational(8));
}

TEST_CASE("apply_case_a_forbiddings") {
    // path (0,1); A_1 = {2,3}, A_2 = {4}, beyond = {5}
    Graph g = graph_of(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 5}});
    Instance inst = unit_instance(g, 2);
    CaseAPartition part = case_a_partition(g, {0, 1});
    check_case_a_partition(g, part);
    CHECK(part.around[0].to_vector() == std::vector<int>{2, 3});
    CHECK(part.around[1].to_vector() == std::vector<int>{4});
    CHECK(part.around[2].to_vector() == std::vector<int>{5});

    GuessA empty;
    empty.path_colors = {0, 0};
    empty.seps.assign(2, std::vector<std::vector<int>>(2));

    SUBCASE("a colored path vertex forbids its color on all neighbors") {
        GuessA guess = empty;
        guess.path_colors = {1, 0};
        Instance out = apply_case_a_forbiddings(inst, part, guess);
        CHECK(out.revenue.at(1, 1).is_zero());
        CHECK(out.revenue.at(2, 1).is_zero());
        CHECK(out.revenue.at(3, 1).is_zero());
        CHECK(out.revenue.at(4, 1) == Rational(1)); // not a neighbor of vertex 0
    }

    SUBCASE("a separator vertex keeps only its color and forbids it around itself") {
        GuessA guess = empty;
        guess.seps[0][0] = {2}; // S for position 1, color 1
        Instance out = apply_case_a_forbiddings(inst, part, guess);
        CHECK(out.revenue.at(2, 1) == Rational(1));
        CHECK(out.revenue.at(2, 2).is_zero());
        CHECK(out.revenue.at(0, 1).is_zero()); // neighbor of 2
        CHECK(out.revenue.at(4, 1).is_zero()); // neighbor of 2
        // 5 misses the set {2}, so color 1 dies on N(5) inside A_1 = {3}
        CHECK(out.revenue.at(3, 1).is_zero());
    }

    SUBCASE("an empty guess still applies the missing-separator rule") {
        Instance out = apply_case_a_forbiddings(inst, part, empty);
        // 4 sees A_1 vertex 2 and no separator: both colors die on 2
        CHECK(out.revenue.at(2, 1).is_zero());
        CHECK(out.revenue.at(2, 2).is_zero());
        // 5 sees A_1 vertex 3 likewise
        CHECK(out.revenue.at(3, 1).is_zero());
        CHECK(out.revenue.at(3, 2).is_zero());
        // vertices of A_2 and beyond keep their table
        CHECK(out.revenue.at(4, 1) == Rational(1));
        CHECK(out.revenue.at(5, 1) == Rational(1));
    }
}

TEST_CASE("apply_case_b_forbiddings") {
    // C8 with a hub complete to it and a pendant hanging off the hub:
    // the hub is the separator, the pendant the remainder
    Graph g(10);
    for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
    for (int i = 0; i < 8; ++i) g.add_edge(8, i);
    g.add_edge(8, 9);
    Instance inst = unit_instance(g, 2);
    InducedPath spine{0, 1, 2, 3, 4, 5, 6};
    FatDecomposition dec = build_decomposition(g, spine);
    REQUIRE(dec.separator.to_vector() == std::vector<int>{8});
    REQUIRE(dec.remainder.to_vector() == std::vector<int>{9});

    SUBCASE("a separator vertex keeps its color and forbids it around itself") {
        GuessB guess;
        guess.fat_colors = 0b01;
        guess.seps = {{}, {8}}; // the hub stands in for color 2
        Instance out = apply_case_b_forbiddings(inst, dec, guess);
        CHECK(out.revenue.at(8, 2) == Rational(1));
        CHECK(out.revenue.at(8, 1).is_zero()); // every other color dies on the hub
        for (int v = 0; v < 8; ++v) CHECK(out.revenue.at(v, 2).is_zero());
        CHECK(out.revenue.at(9, 2).is_zero()); // pendant neighbors the hub
        CHECK(out.revenue.at(9, 1) == Rational(1));
    }

    SUBCASE("an empty guess kills colors the remainder cannot certify") {
        GuessB guess;
        guess.seps = {{}, {}};
        Instance out = apply_case_b_forbiddings(inst, dec, guess);
        // the pendant misses both separator sets, so both colors die on the hub
        CHECK(out.revenue.at(8, 1).is_zero());
        CHECK(out.revenue.at(8, 2).is_zero());
        // everything else keeps its table
        for (int v = 0; v < 8; ++v)
            for (int c = 1; c <= 2; ++c) CHECK(out.revenue.at(v, c) == Rational(1));
        CHECK(out.revenue.at(9, 1) == Rational(1));
    }
}

TEST_CASE("cross-part color lists are disjoint after the forbiddings") {
    // on every consistent branch, edges between different parts must end up
    // with disjoint positive-color sets; full assert mode enforces it
    SolverConfig cfg = deep_config();
    cfg.assert_level = AssertLevel::Full;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Instance inst = random_class_instance(derive_seed(911, seed), 8, 2, ClassFilter::E);
        Solver solver(cfg);
        Solution got = solver.solve(inst);
        CHECK(got.value == brute_force(inst).value);
        CHECK(solver.stats().disjoint_failures == 0);
    }
}

TEST_CASE("class violation surfaces from the decomposition") {
    Graph g(8);
    for (int i = 0; i < 6; ++i) g.add_edge(i, i + 1);
    g.add_edge(7, 0);
    g.add_edge(7, 2);
    g.add_edge(7, 4);
    SolverConfig cfg = deep_config();
    CHECK_THROWS_AS(solve(unit_instance(g, 1), cfg), ClassViolationError);
}

TEST_CASE("branch cap fails loudly") {
    SolverConfig cfg = deep_config();
    cfg.branch_cap = 1;
    CHECK_THROWS_AS(solve(unit_instance(Graph::cycle(7), 2), cfg), ResourceError);
}

TEST_CASE("minimal_dominators") {
    Graph g = graph_of(5, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}});
    // both 0 and 1 see {2,3}; 0 alone already covers {2,3,4}
    VertexSet s0(5, {0, 1});
    VertexSet t(5, {2, 3, 4});
    CHECK(minimal_dominators(g, s0, t).to_vector() == std::vector<int>{0});

    // a single vertex with T-neighbors stays
    CHECK(minimal_dominators(g, VertexSet(5, {0}), t).to_vector() == std::vector<int>{0});

    CHECK_THROWS_AS(minimal_dominators(g, VertexSet(5, {0, 2}), t), InputError);
}

TEST_CASE("minimal dominator sets have at most two vertices in class graphs") {
    int sampled = 0;
    for (std::uint64_t seed = 0; sampled < 120 && seed < 600; ++seed) {
        Rng rng(derive_seed(5417, seed));
        GenSpec spec;
        spec.n = rng.range(6, 12);
        spec.edge_prob = 0.1 + 0.6 * rng.unit();
        spec.filter = ClassFilter::E;
        spec.seed = rng.next();
        Graph g = gen_graph(spec);
        if (g.n() < 3) continue;
        int v = rng.range(0, g.n() - 1);
        if (g.row(v).empty()) continue;

        // greedy proper coloring; its classes are monochromatic sets
        std::vector<int> color(static_cast<std::size_t>(g.n()), 0);
        for (int u = 0; u < g.n(); ++u) {
            int c = 1;
            while (true) {
                bool clash = false;
                g.row(u).for_each([&](int w) {
                    if (w < u && color[static_cast<std::size_t>(w)] == c) clash = true;
                });
                if (!clash) break;
                ++c;
            }
            color[static_cast<std::size_t>(u)] = c;
        }
        int pick = color[static_cast<std::size_t>(g.row(v).first())];
        VertexSet s0(g.n());
        g.row(v).for_each([&](int u) {
            if (color[static_cast<std::size_t>(u)] == pick) s0.set(u);
        });
        VertexSet t(g.n());
        closed_neighborhood(g, VertexSet(g.n(), {v})).complement().for_each([&](int u) {
            if (rng.chance(0.7)) t.set(u);
        });
        if (s0.empty()) continue;
        CHECK(minimal_dominators(g, s0, t).count() <= 2);
        ++sampled;
    }
    CHECK(sampled >= 120);
}

TEST_CASE("subexponential wrapper basics") {
    // edgeless: no clique to strip, delegates to the structural solver
    Revenue rev = gen_revenue(6, 2, 1, 9, 0.0, 99);
    Instance edgeless = make_instance(Graph::edgeless(6), 2, rev);
    Rational expect;
    for (int v = 0; v < 6; ++v) expect += std::max(rev.at(v, 1), rev.at(v, 2));
    CHECK(solve_subexponential(edgeless, deep_config()).value == expect);

    // a clique bigger than k: at most k vertices get colored
    CHECK(solve_subexponential(unit_instance(Graph::complete(9), 2), deep_config()).value ==
          Rational(2));
}

TEST_CASE("solver modes agree with the oracle on random class instances") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Instance inst = random_class_instance(derive_seed(77001, seed), 8, 2, ClassFilter::E);
        Solution expected = brute_force(inst);
        CHECK(solve(inst, deep_config()).value == expected.value);
        CHECK(solve_subexponential(inst, deep_config()).value == expected.value);
    }
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Instance inst = random_class_instance(derive_seed(88001, seed), 7, 3, ClassFilter::E);
        Solution expected = brute_force(inst);
        CHECK(solve(inst, deep_config()).value == expected.value);
        CHECK(solve_subexponential(inst, deep_config()).value == expected.value);
    }
}

TEST_CASE("chair corpus under full asserts") {
    SolverConfig cfg = deep_config();
    cfg.assert_level = AssertLevel::Full;
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Instance inst = random_class_instance(derive_seed(13131, seed), 8, 2, ClassFilter::Chair);
        Solver solver(cfg);
        CHECK(solver.solve(inst).value == brute_force(inst).value);
        CHECK(solver.stats().disjoint_failures == 0);
    }
}

TEST_CASE("solutions returned are valid and deterministic across worker counts") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Instance inst = random_class_instance(derive_seed(424242, seed), 8, 2, ClassFilter::E);
        SolverConfig serial = deep_config();
        serial.workers = 1;
        SolverConfig wide = deep_config();
        wide.workers = 4;
        Solution a = solve(inst, serial);
        Solution b = solve(inst, wide);
        CHECK(solution_value(inst, a) == a.value);
        CHECK(a.value == b.value);
        CHECK(a.colored == b.colored); // witness is schedule-independent
    }
}

TEST_CASE("forbidding a color never helps") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Rng rng(derive_seed(31337, seed));
        Instance inst = random_class_instance(rng.next(), 7, 2, ClassFilter::None);
        if (inst.n() == 0) continue;
        int v = rng.range(0, inst.n() - 1);
        int c = rng.range(1, inst.k);
        CHECK(brute_force(forbid_color(inst, v, c)).value <= brute_force(inst).value);
    }
}

TEST_CASE("a vertex with an all-zero row never changes the optimum") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Rng rng(derive_seed(606060, seed));
        GenSpec spec;
        spec.n = rng.range(2, 7);
        spec.edge_prob = 0.3 + 0.5 * rng.unit();
        spec.filter = ClassFilter::E;
        spec.seed = rng.next();
        Graph g = gen_graph(spec);
        int k = 2;
        Revenue rev = gen_revenue(g.n(), k, 0, 9, 0.2, rng.next());
        Instance inst = make_instance(g, k, rev);

        Graph bigger(g.n() + 1);
        for (int u = 0; u < g.n(); ++u)
            g.row(u).for_each([&](int v2) {
                if (v2 > u) bigger.add_edge(u, v2);
            });
        for (int u = 0; u < g.n(); ++u)
            if (rng.chance(0.4)) bigger.add_edge(g.n(), u);
        std::vector<std::vector<Rational>> rows;
        for (int v = 0; v < g.n(); ++v) {
            std::vector<Rational> row;
            for (int c = 1; c <= k; ++c) row.push_back(rev.at(v, c));
            rows.push_back(std::move(row));
        }
        rows.emplace_back(static_cast<std::size_t>(k)); // all-zero row
        Instance padded = make_instance(bigger, k, Revenue::from_rows(std::move(rows), k));

        CHECK(solve(inst, deep_config()).value == solve(padded, deep_config()).value);
    }
}

TEST_CASE("list coloring corollaries") {
    std::vector<std::uint32_t> full3(7, 0b111), full2(7, 0b11);
    CHECK(!is_list_colorable(Graph::cycle(7), full2, 2));
    CHECK(is_list_colorable(Graph::cycle(7), full3, 3));
    CHECK(!is_list_colorable(Graph::complete(4), std::vector<std::uint32_t>(4, 0b111), 3));
    CHECK(is_list_colorable(Graph::complete(4), std::vector<std::uint32_t>(4, 0b1111), 4));
}

TEST_CASE("list coloring agrees with oracle feasibility") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(derive_seed(515151, seed));
        GenSpec spec;
        spec.n = rng.range(1, 8);
        spec.edge_prob = rng.unit();
        spec.filter = ClassFilter::E;
        spec.seed = rng.next();
        Graph g = gen_graph(spec);
        int k = rng.range(1, 3);
        std::vector<std::uint32_t> lists(static_cast<std::size_t>(g.n()));
        for (auto& l : lists) l = static_cast<std::uint32_t>(rng.below(1u << k));
        Instance encoded = from_list_coloring(g, lists, k);
        bool feasible = brute_force(encoded).value == Rational(g.n());
        CHECK(is_list_colorable(g, lists, k) == feasible);
    }
}

TEST_CASE("fractional revenues flow through every solver exactly") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(derive_seed(272727, seed));
        GenSpec spec;
        spec.n = rng.range(2, 8);
        spec.edge_prob = 0.05 + 0.85 * rng.unit();
        spec.filter = ClassFilter::E;
        spec.seed = rng.next();
        Graph g = gen_graph(spec);
        int k = rng.range(1, 2);
        std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(g.n()));
        for (auto& row : rows)
            for (int c = 0; c < k; ++c)
                row.emplace_back(static_cast<long long>(rng.below(10)),
                                 static_cast<long long>(rng.range(1, 4)));
        Instance inst = make_instance(g, k, Revenue::from_rows(std::move(rows), k));

        Solution expected = brute_force(inst);
        CHECK(solve(inst, deep_config()).value == expected.value);
        CHECK(solve_subexponential(inst, deep_config()).value == expected.value);
        CHECK(solution_value(inst, expected) == expected.value);
    }
}

TEST_CASE("oracle mode matches brute force") {
    SolverConfig cfg;
    cfg.mode = SolveMode::Oracle;
    Instance inst = random_class_instance(derive_seed(999, 1), 8, 2, ClassFilter::None);
    CHECK(solve(inst, cfg).value == brute_force(inst).value);
}
