#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "monosync/errors.hpp"
#include "monosync/road_coloring.hpp"
#include "monosync/sampling.hpp"
#include "monosync/sync_oracle.hpp"
#include "test_helpers.hpp"

using namespace monosync;

TEST_SUITE_BEGIN("roadcolor");

namespace {

// gcd of all simple cycle lengths via DFS enumeration; independent reference
// for the period (n <= 6 instances only).
void cycle_dfs(const Digraph& g, State start, State at, std::vector<char>& on_path,
               int depth, int& gcd_out) {
    for (int slot = 0; slot < g.k; ++slot) {
        State to = g.target(at, slot);
        if (to == start) gcd_out = std::gcd(gcd_out, depth + 1);
        else if (to > start && !on_path[to]) {
            on_path[to] = 1;
            cycle_dfs(g, start, to, on_path, depth + 1, gcd_out);
            on_path[to] = 0;
        }
    }
}

int simple_cycle_gcd(const Digraph& g) {
    int result = 0;
    for (State start = 0; start < g.n; ++start) {
        std::vector<char> on_path(g.n, 0);
        on_path[start] = 1;
        cycle_dfs(g, start, start, on_path, 0, result);
    }
    return result;
}

Digraph example_period_two() {
    // 0 -> {1,1}, 1 -> {2,0}, 2 -> {3,3}, 3 -> {0,2}; cycle lengths {2, 4}
    return Digraph(4, 2, {1, 1, 2, 0, 3, 3, 0, 2});
}

}  // namespace

TEST_CASE("digraph text format round-trips") {
    const Digraph g = example_period_two();
    const Digraph again = parse_digraph(serialize_digraph(g));
    CHECK(again.arcs == g.arcs);
    CHECK_THROWS_AS(parse_digraph("digraph 2 1\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("digraph 2 1\n0\n5\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("graph 2 1\n0\n1\n"), ParseError);
}

TEST_CASE("period_partition") {
    SUBCASE("directed 3-cycle: period 3, singleton classes") {
        const Digraph g(3, 1, {1, 2, 0});
        const auto part = period_partition(g);
        CHECK(part.period == 3);
        CHECK(part.class_of == std::vector<int>{0, 1, 2});
    }
    SUBCASE("a loop forces period 1") {
        const Digraph g(2, 2, {0, 1, 0, 1});  // 0 has a self-loop
        CHECK(period_partition(g).period == 1);
    }
    SUBCASE("the 4-vertex example: period 2, classes {0,2} and {1,3}") {
        const auto part = period_partition(example_period_two());
        CHECK(part.period == 2);
        CHECK(part.class_of == std::vector<int>{0, 1, 0, 1});
    }
    SUBCASE("not strongly connected") {
        CHECK_THROWS_AS(period_partition(Digraph(2, 1, {0, 0})),
                        NotStronglyConnectedError);
    }
}

TEST_CASE("every arc advances the class by one") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 5));
        const Digraph g = sample_strongly_connected_digraph(n, 2, rng);
        const auto part = period_partition(g);
        for (State v = 0; v < g.n; ++v)
            for (int slot = 0; slot < g.k; ++slot)
                CHECK(part.class_of[g.target(v, slot)] ==
                      (part.class_of[v] + 1) % part.period);
    }
}

TEST_CASE("period equals the gcd of simple cycle lengths") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 5));
        const Digraph g = sample_strongly_connected_digraph(n, 2, rng);
        CHECK(period_partition(g).period == simple_cycle_gcd(g));
    }
    CHECK(period_partition(example_period_two()).period ==
          simple_cycle_gcd(example_period_two()));
}

TEST_CASE("the partition is unique up to rotating class labels") {
    // Recompute with each vertex relabeled as the BFS root by rotating the
    // vertex identities; partitions must agree up to a cyclic shift.
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(uniform_below(rng, 3));
        const Digraph g = sample_strongly_connected_digraph(n, 2, rng);
        const auto base = period_partition(g);
        for (State root = 1; root < n; ++root) {
            // relabel so `root` becomes vertex 0
            auto relabel = [&](State v) { return (v - root + n) % n; };
            std::vector<State> arcs(static_cast<std::size_t>(n) * g.k);
            for (State v = 0; v < n; ++v)
                for (int slot = 0; slot < g.k; ++slot)
                    arcs[static_cast<std::size_t>(relabel(v)) * g.k + slot] =
                        relabel(g.target(v, slot));
            const auto rotated = period_partition(Digraph(n, g.k, std::move(arcs)));
            REQUIRE(rotated.period == base.period);
            const int shift = base.class_of[root];
            for (State v = 0; v < n; ++v)
                CHECK(rotated.class_of[relabel(v)] ==
                      (base.class_of[v] - shift + base.period) % base.period);
        }
    }
}

TEST_CASE("subset_colorable") {
    const Digraph four_cycle(4, 1, {1, 2, 3, 0});
    SUBCASE("singletons are always colorable") {
        CHECK(subset_colorable(four_cycle, StateSet::of(4, {2})));
    }
    SUBCASE("opposite vertices of a 4-cycle are not (period 4)") {
        CHECK(!subset_colorable(four_cycle, StateSet::of(4, {0, 2})));
    }
    SUBCASE("same class of the period-2 example is colorable") {
        CHECK(subset_colorable(example_period_two(), StateSet::of(4, {0, 2})));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(subset_colorable(four_cycle, StateSet(4)), EmptySubsetError);
        CHECK_THROWS_AS(subset_colorable(Digraph(2, 1, {0, 0}), StateSet::of(2, {0})),
                        NotStronglyConnectedError);
    }
}

TEST_CASE("oracle_coloring_search") {
    SUBCASE("singleton: the identity coloring comes first") {
        const auto coloring =
            oracle_coloring_search(example_period_two(), StateSet::of(4, {1}));
        REQUIRE(coloring);
        CHECK(coloring->letter_slot == std::vector<int>{0, 1, 0, 1, 0, 1, 0, 1});
    }
    SUBCASE("adjacent pair on a 4-cycle: no coloring exists") {
        const Digraph four_cycle(4, 1, {1, 2, 3, 0});
        CHECK(oracle_coloring_search(four_cycle, StateSet::of(4, {0, 1})) ==
              std::nullopt);
    }
    SUBCASE("period-2 example, S = {0, 2}: some coloring synchronizes") {
        const auto coloring =
            oracle_coloring_search(example_period_two(), StateSet::of(4, {0, 2}));
        REQUIRE(coloring);
        const auto induced = coloring->induce(example_period_two());
        CHECK(oracle_shortest_sync_word(induced, StateSet::of(4, {0, 2})).has_value());
    }
    SUBCASE("budget guard on (k!)^n") {
        OracleBudget tiny;
        tiny.max_visited = 4;
        CHECK_THROWS_AS(
            oracle_coloring_search(example_period_two(), StateSet::of(4, {0}), tiny),
            BudgetExceededError);
    }
}

TEST_CASE("colorability criterion matches the exhaustive search") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 4));
        const Digraph g = sample_strongly_connected_digraph(n, 2, rng);
        const StateSet set =
            sample_subset(n, 1 + static_cast<int>(uniform_below(rng, n)), rng);
        CHECK(subset_colorable(g, set) == oracle_coloring_search(g, set).has_value());
    }
}

TEST_SUITE_END();
