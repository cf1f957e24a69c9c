#include <doctest.h>

#include "mpkc/errors.hpp"
#include "mpkc/gen.hpp"
#include "mpkc/oracle.hpp"
#include "testutil.hpp"

using namespace mpkc;
using testutil::unit_instance;

TEST_CASE("brute force basics") {
    CHECK(brute_force(unit_instance(Graph(0), 1)).value == Rational(0));

    Revenue rev(1, 2);
    rev.set(0, 1, Rational(5));
    rev.set(0, 2, Rational(7));
    Solution one = brute_force(make_instance(Graph(1), 2, rev));
    CHECK(one.value == Rational(7));
    CHECK(one.colored == std::vector<std::pair<int, int>>{{0, 2}});

    CHECK(brute_force(unit_instance(Graph::complete(3), 2)).value == Rational(2));

    CHECK_THROWS_AS(brute_force(unit_instance(Graph::edgeless(17), 1)), ResourceError);
    CHECK(brute_force(unit_instance(Graph::edgeless(17), 1), 17).value == Rational(17));
}

TEST_CASE("the two oracles agree") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed * 613 + 29);
        GenSpec spec;
        spec.n = rng.range(1, 8);
        spec.edge_prob = rng.unit();
        spec.seed = rng.next();
        Graph g = gen_graph(spec);
        int k = rng.range(1, 3);
        Instance inst =
            make_instance(g, k, gen_revenue(g.n(), k, 0, 9, 0.25, rng.next()));
        CHECK(brute_force(inst).value == testutil::subset_enumeration_optimum(inst).value);
    }
}

TEST_CASE("k=1 matches maximum weight independent set") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed * 271 + 31);
        GenSpec spec;
        spec.n = rng.range(1, 9);
        spec.edge_prob = rng.unit();
        spec.seed = rng.next();
        Graph g = gen_graph(spec);
        Instance inst = make_instance(g, 1, gen_revenue(g.n(), 1, 0, 9, 0.2, rng.next()));
        CHECK(brute_force(inst).value == testutil::max_weight_independent_set(inst));
    }
}

TEST_CASE("odd cycles with two colors lose exactly one vertex") {
    for (int m = 1; m <= 7; ++m) {
        Instance inst = unit_instance(Graph::cycle(2 * m + 1), 2);
        CHECK(brute_force(inst).value == Rational(2 * m));
    }
}

TEST_CASE("oracle solutions are valid") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed * 37 + 41);
        GenSpec spec;
        spec.n = rng.range(1, 8);
        spec.edge_prob = rng.unit();
        spec.seed = rng.next();
        Graph g = gen_graph(spec);
        int k = rng.range(1, 3);
        Instance inst = make_instance(g, k, gen_revenue(g.n(), k, 0, 9, 0.3, rng.next()));
        Solution sol = brute_force(inst);
        CHECK(solution_value(inst, sol) == sol.value);
    }
}
