#include <random>

#include "doctest.h"
#include "monosync/classify.hpp"
#include "monosync/errors.hpp"
#include "monosync/families.hpp"
#include "monosync/reductions.hpp"
#include "monosync/sampling.hpp"
#include "test_helpers.hpp"

using namespace monosync;

TEST_SUITE_BEGIN("classify");

TEST_CASE("check_monotonic accepts the documented family orders") {
    for (int m : {1, 2, 3, 4}) {
        const auto fam = ternary_family(m);
        CHECK(check_monotonic(fam.automaton,
                              StateOrder::identity(fam.automaton.state_count())));
    }
    for (int m : {1, 2, 3}) {
        const auto fam = binary_family(m);
        CHECK(check_monotonic(fam.automaton,
                              StateOrder::identity(fam.automaton.state_count())));
    }
}

TEST_CASE("check_monotonic rejects the two-state swap under either order") {
    const auto a = testgen::swap_automaton();
    CHECK(!check_monotonic(a, StateOrder({0, 1})));
    CHECK(!check_monotonic(a, StateOrder({1, 0})));
}

TEST_CASE("the clause gadget respects its construction order") {
    const Acceptor gadget = clause_gadget({1, -3, 4}, 4);
    CHECK(check_monotonic(gadget.automaton,
                          StateOrder::identity(gadget.automaton.state_count())));
}

TEST_CASE("counter gadgets are monotone under the block order") {
    for (int k : {1, 2, 3}) {
        for (int base : {2, 3}) {
            const auto inst = counter_partial(k, base);
            CHECK(check_monotonic(inst.automaton,
                                  StateOrder::identity(inst.automaton.state_count())));
        }
        for (const auto& acc : counter_acceptors(k).acceptors)
            CHECK(check_monotonic(acc.automaton, StateOrder::identity(3)));
    }
}

TEST_CASE("a monotone witness keeps working reversed") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 8));
        const int k = 1 + static_cast<int>(uniform_below(rng, 3));
        const auto a = sample_monotonic(n, k, rng());
        const auto ord = StateOrder::identity(n);
        REQUIRE(check_monotonic(a, ord));
        CHECK(check_monotonic(a, ord.reversed()));
    }
}

TEST_CASE("check_monotonic validates the order argument") {
    const auto a = testgen::identity_automaton(3, 1);
    CHECK_THROWS_AS(check_monotonic(a, StateOrder::identity(2)), std::invalid_argument);
    CHECK_THROWS_AS(StateOrder({0, 0, 2}), std::invalid_argument);
}

TEST_CASE("find_monotonic_order on trivial cases") {
    SUBCASE("identity automaton: some order is found") {
        const auto a = testgen::identity_automaton(4, 2);
        const auto ord = find_monotonic_order(a);
        REQUIRE(ord);
        CHECK(check_monotonic(a, *ord));
    }
    SUBCASE("two-state swap has no order") {
        CHECK(find_monotonic_order(testgen::swap_automaton()) == std::nullopt);
    }
}

TEST_CASE("find_monotonic_order recovers an order after relabeling") {
    // Scramble ternary_family(2) and check the search finds a valid order.
    const auto fam = ternary_family(2);
    const int n = fam.automaton.state_count();
    const int k = fam.automaton.alphabet_size();

    const std::vector<State> relabel{4, 0, 6, 2, 5, 1, 3};  // old -> new
    std::vector<State> delta(static_cast<std::size_t>(n) * k);
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < k; ++x)
            delta[static_cast<std::size_t>(relabel[q]) * k + x] =
                relabel[fam.automaton.next(q, x)];
    const CompleteAutomaton scrambled(n, k, std::move(delta));

    const auto ord = find_monotonic_order(scrambled);
    REQUIRE(ord);
    CHECK(check_monotonic(scrambled, *ord));

    // The construction order, relabeled, must also pass.
    std::vector<State> construction(n);
    for (State q = 0; q < n; ++q) construction[q] = relabel[q];
    CHECK(check_monotonic(scrambled, StateOrder(construction)));
}

TEST_CASE("find_monotonic_order works on partial automata") {
    const auto inst = counter_partial(2, 3);
    const auto ord = find_monotonic_order(inst.automaton);
    REQUIRE(ord);
    CHECK(check_monotonic(inst.automaton, *ord));
}

TEST_CASE("find_monotonic_order raises on an exhausted budget") {
    const auto fam = ternary_family(3);
    CHECK_THROWS_AS(find_monotonic_order(fam.automaton, 2), BudgetExceededError);
}

TEST_CASE("search result is never NONE for sampled monotonic automata") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 5));
        const auto a = sample_monotonic(n, 2, rng());
        const auto ord = find_monotonic_order(a);
        REQUIRE(ord);
        CHECK(check_monotonic(a, *ord));
    }
}

TEST_CASE("weak acyclicity") {
    SUBCASE("clause gadget is weakly acyclic") {
        CHECK(is_weakly_acyclic(clause_gadget({1, -3, 4}, 4).automaton));
    }
    SUBCASE("swap automaton is not") {
        CHECK(!is_weakly_acyclic(testgen::swap_automaton()));
    }
    SUBCASE("pairwise gap family is, with a verbatim witness") {
        const auto fam = pairwise_gap_family(2);
        const auto ord = weak_acyclic_witness(fam.automaton);
        REQUIRE(ord);
        const auto& a = fam.automaton;
        for (State q = 0; q < a.state_count(); ++q)
            for (Letter x = 0; x < a.alphabet_size(); ++x)
                CHECK(ord->position_of(q) <= ord->position_of(a.next(q, x)));
    }
}

TEST_CASE("sample_monotonic") {
    SUBCASE("every output is monotone under the identity order") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const auto a = sample_monotonic(3 + seed % 8, 1 + seed % 3, seed);
            CHECK(check_monotonic(a, StateOrder::identity(a.state_count())));
        }
    }
    SUBCASE("deterministic in the seed") {
        CHECK(sample_monotonic(9, 3, 42) == sample_monotonic(9, 3, 42));
        CHECK(sample_monotonic(9, 3, 42) != sample_monotonic(9, 3, 43));
    }
    SUBCASE("n = 1 gives the single-state automaton") {
        const auto a = sample_monotonic(1, 2, 7);
        CHECK(a.state_count() == 1);
        CHECK(a.next(0, 0) == 0);
        CHECK(a.next(0, 1) == 0);
    }
}

TEST_CASE("strong connectivity") {
    CHECK(is_strongly_connected(testgen::identity_automaton(1, 1)));
    CHECK(is_strongly_connected(testgen::cycle_automaton(5)));
    CHECK(!is_strongly_connected(testgen::chain_automaton(3)));
    // any automaton with a sink and n >= 2
    CHECK(!is_strongly_connected(ternary_family(1).automaton));
}

TEST_SUITE_END();
