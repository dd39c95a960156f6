#include <random>

#include "doctest.h"
#include "monosync/errors.hpp"
#include "monosync/families.hpp"
#include "monosync/reductions.hpp"
#include "monosync/sampling.hpp"
#include "monosync/sync_oracle.hpp"
#include "test_helpers.hpp"

using namespace monosync;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("shortest sync word on the ternary family is m^2 + m") {
    const auto fam = ternary_family(3);  // 9 states, S = {q_2, q_8}
    const auto word = oracle_shortest_sync_word(fam.automaton, fam.subset);
    REQUIRE(word);
    CHECK(word->size() == 12);
    CHECK(image_set(fam.automaton, fam.subset, *word).size() == 1);
}

TEST_CASE("shortest sync word on binary_family(1) matches plain enumeration") {
    const auto fam = binary_family(1);  // S = {q_3, q_6}
    CHECK(fam.subset == StateSet::of(7, {2, 5}));
    const auto word = oracle_shortest_sync_word(fam.automaton, fam.subset);
    REQUIRE(word);
    CHECK(*word == Word{0, 1, 1});
    CHECK(*word == *testref::enumerated_shortest_sync_word(fam.automaton, fam.subset, 3));
}

TEST_CASE("singleton and empty sets need the empty word") {
    const auto a = testgen::swap_automaton();
    CHECK(oracle_shortest_sync_word(a, StateSet::of(2, {1})) == Word{});
    CHECK(oracle_shortest_sync_word(a, StateSet(2)) == Word{});
}

TEST_CASE("oracle word equals the enumerated word on random instances") {
    std::mt19937_64 rng(101);
    int compared = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 5));
        const int k = 1 + static_cast<int>(uniform_below(rng, 3));
        std::vector<State> delta;
        for (int i = 0; i < n * k; ++i)
            delta.push_back(static_cast<State>(uniform_below(rng, n)));
        const CompleteAutomaton a(n, k, std::move(delta));
        const StateSet set =
            sample_subset(n, 2 + static_cast<int>(uniform_below(rng, n - 1)), rng);

        const auto fast = oracle_shortest_sync_word(a, set);
        if (fast && fast->size() <= 6) {
            CHECK(*fast == *testref::enumerated_shortest_sync_word(a, set, 6));
            ++compared;
        } else if (!fast) {
            CHECK(testref::enumerated_shortest_sync_word(a, set, 6) == std::nullopt);
        }
    }
    CHECK(compared > 10);
}

TEST_CASE("oracle_rank") {
    SUBCASE("pairwise gap family drops to |S| - 1 only") {
        const auto fam = pairwise_gap_family(2);
        OracleBudget wide;
        wide.max_states = 64;
        const auto result = oracle_rank(fam.automaton, fam.subset, wide);
        CHECK(result.rank == 3);
        CHECK(image_set(fam.automaton, fam.subset, result.witness).size() == 3);
        CHECK(result.rank == testref::closure_rank(fam.automaton, fam.subset));
    }
    SUBCASE("singletons have rank 1 with the empty witness") {
        const auto a = testgen::chain_automaton(4);
        const auto result = oracle_rank(a, StateSet::of(4, {2}));
        CHECK(result.rank == 1);
        CHECK(result.witness.empty());
    }
    SUBCASE("satisfiable formula gives rank m") {
        const Cnf cnf{2, {{1, 2}}};
        const auto inst = max3sat_to_rank(cnf);
        CHECK(oracle_rank(inst.automaton, inst.subset).rank == 1);
    }
    SUBCASE("rank witness length matches sync word when rank is 1") {
        std::mt19937_64 rng(55);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 2 + static_cast<int>(uniform_below(rng, 5));
            const int k = 1 + static_cast<int>(uniform_below(rng, 2));
            std::vector<State> delta;
            for (int i = 0; i < n * k; ++i)
                delta.push_back(static_cast<State>(uniform_below(rng, n)));
            const CompleteAutomaton a(n, k, std::move(delta));
            const StateSet set =
                sample_subset(n, 2 + static_cast<int>(uniform_below(rng, n - 1)), rng);

            const auto word = oracle_shortest_sync_word(a, set);
            const auto rank = oracle_rank(a, set);
            CHECK(word.has_value() == (rank.rank == 1));
            if (word) CHECK(word->size() == rank.witness.size());
            CHECK(rank.rank == testref::closure_rank(a, set));
        }
    }
}

TEST_CASE("oracle_careful_sync on the counter gadgets") {
    SUBCASE("base 2, k = 2: length 4, e.g. a_1 a_2 a_1 a") {
        const auto inst = counter_partial(2, 2);
        const auto word = oracle_careful_sync(inst.automaton);
        REQUIRE(word);
        CHECK(word->size() == 4);
        CHECK(*word == *testref::enumerated_careful_sync(inst.automaton, 4));
        const auto image =
            partial_image_set(inst.automaton, StateSet::full(4), {0, 1, 0, 2});
        REQUIRE(image);
        CHECK(image->size() == 1);
    }
    SUBCASE("base 3, k = 2: length 9 exactly") {
        const auto inst = counter_partial(2, 3);
        const auto word = oracle_careful_sync(inst.automaton);
        REQUIRE(word);
        CHECK(word->size() == 9);  // >= 3^k, and 9 is attained
        CHECK(*word == *testref::enumerated_careful_sync(inst.automaton, 9));
    }
    SUBCASE("no letter defined on the whole pair") {
        // two states; letter 0 defined only on state 0, letter 1 only on 1
        const PartialAutomaton a(2, 2, {0, PartialAutomaton::kUndefined,
                                        PartialAutomaton::kUndefined, 1});
        CHECK(oracle_careful_sync(a) == std::nullopt);
    }
    SUBCASE("single state: empty word") {
        const PartialAutomaton a(1, 1, {PartialAutomaton::kUndefined});
        CHECK(oracle_careful_sync(a) == Word{});
    }
}

TEST_CASE("oracle_intersection") {
    SUBCASE("counter acceptors count to 2^k - 1") {
        const auto counters = counter_acceptors(2);
        const auto word = oracle_intersection(counters.acceptors);
        REQUIRE(word);
        CHECK(*word == Word{0, 1, 0});  // a_1 a_2 a_1
    }
    SUBCASE("initial state already accepting: empty word") {
        Acceptor acc{testgen::cycle_automaton(3), 1, StateSet::of(3, {1})};
        CHECK(oracle_intersection({acc}) == Word{});
    }
    SUBCASE("unsatisfiable formula: empty intersection") {
        const Cnf cnf{1, {{1}, {-1}}};
        CHECK(oracle_intersection(sat_to_intersection(cnf)) == std::nullopt);
    }
    SUBCASE("alphabet mismatch is rejected") {
        Acceptor a{testgen::cycle_automaton(3), 0, StateSet::of(3, {1})};
        Acceptor b{testgen::identity_automaton(2, 2), 0, StateSet::of(2, {0})};
        CHECK_THROWS_AS(oracle_intersection({a, b}), std::invalid_argument);
    }
}

TEST_CASE("oracle_min_unsat") {
    CHECK(oracle_min_unsat(Cnf{1, {{1}, {-1}}}) == 1);
    CHECK(oracle_min_unsat(Cnf{2, {{1, 2}, {-1, 2}}}) == 0);
    CHECK(oracle_min_unsat(Cnf{1, {{1}, {-1}, {1}}}) == 1);
    CHECK(oracle_min_unsat(Cnf{1, {}}) == 0);
    CHECK_THROWS_AS(oracle_min_unsat(Cnf{30, {{1}}}), BudgetExceededError);
}

TEST_CASE("budget guards are errors, never wrong answers") {
    SUBCASE("state-count guard") {
        const auto fam = pairwise_gap_family(3);  // 89 states
        CHECK_THROWS_AS(oracle_shortest_sync_word(fam.automaton, fam.subset),
                        BudgetExceededError);
    }
    SUBCASE("visited-node budget") {
        const auto fam = ternary_family(4);
        OracleBudget tiny;
        tiny.max_visited = 3;
        CHECK_THROWS_AS(oracle_shortest_sync_word(fam.automaton, fam.subset, tiny),
                        BudgetExceededError);
    }
    SUBCASE("raising max_states admits larger structured instances") {
        const auto fam = pairwise_gap_family(2);  // 29 states > default guard
        OracleBudget wide;
        wide.max_states = 64;
        CHECK(oracle_rank(fam.automaton, fam.subset, wide).rank == 3);
        CHECK_THROWS_AS(oracle_rank(fam.automaton, fam.subset), BudgetExceededError);
    }
    SUBCASE("intersection product guard") {
        std::vector<Acceptor> many;
        for (int i = 0; i < 30; ++i)
            many.push_back(Acceptor{testgen::cycle_automaton(5), 0, StateSet::of(5, {1})});
        OracleBudget tiny;
        tiny.max_visited = 1000;
        CHECK_THROWS_AS(oracle_intersection(many, tiny), BudgetExceededError);
    }
}

TEST_CASE("oracle stats report visited counts") {
    const auto fam = ternary_family(2);
    OracleStats stats;
    oracle_shortest_sync_word(fam.automaton, fam.subset, {}, &stats);
    CHECK(stats.visited > 0);
}

TEST_SUITE_END();
