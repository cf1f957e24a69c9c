#include <doctest.h>

#include "mpkc/gen.hpp"
#include "mpkc/matching.hpp"
#include "mpkc/oracle.hpp"
#include "mpkc/solver.hpp"
#include "testutil.hpp"

using namespace mpkc;
using testutil::unit_instance;

TEST_CASE("solve_complete examples") {
    Revenue r1(1, 1);
    r1.set(0, 1, Rational(3));
    CHECK(solve_complete(make_instance(Graph::complete(1), 1, r1)).value == Rational(3));

    CHECK(solve_complete(unit_instance(Graph::complete(3), 2)).value == Rational(2));

    Revenue r2(2, 2);
    r2.set(0, 1, Rational(5));
    r2.set(0, 2, Rational(1));
    r2.set(1, 1, Rational(4));
    r2.set(1, 2, Rational(4));
    Solution best = solve_complete(make_instance(Graph::complete(2), 2, r2));
    CHECK(best.value == Rational(9));
    CHECK(best.colored == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("assignment agrees with the oracle on random complete instances") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed * 97 + 11);
        int n = rng.range(1, 7);
        int k = rng.range(1, 5);
        Instance inst =
            make_instance(Graph::complete(n), k, gen_revenue(n, k, 0, 9, 0.3, rng.next()));
        Solution matched = solve_complete(inst);
        CHECK(solution_value(inst, matched) == matched.value);
        CHECK(matched.value == brute_force(inst).value);
    }
}

TEST_CASE("assignment handles fractional weights exactly") {
    Revenue rev(2, 2);
    rev.set(0, 1, Rational(1, 3));
    rev.set(0, 2, Rational(1, 2));
    rev.set(1, 1, Rational(1, 2));
    rev.set(1, 2, Rational(2, 3));
    Instance inst = make_instance(Graph::complete(2), 2, rev);
    // 1/3 + 2/3 beats 1/2 + 1/2
    CHECK(solve_complete(inst).value == Rational(1));
}
