#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monosync/automaton.hpp"
#include "monosync/cnf.hpp"

namespace monosync {

/// Limits for the exact exponential-time searches. Exceeding a limit raises
/// BudgetExceededError; an oracle never trades the budget for a wrong answer.
struct OracleBudget {
    /// Cap on distinct sets/tuples the breadth-first search may record.
    std::uint64_t max_visited = std::uint64_t{1} << 22;
    /// Automata larger than this are refused outright (the subset space is
    /// 2^n); raise it explicitly for structured instances whose reachable
    /// subset count is known to be small. Hard ceiling 64 (bit-mask width).
    int max_states = 24;
};

/// Search counters, filled when a caller passes a non-null pointer.
struct OracleStats {
    std::uint64_t visited = 0;
};

struct RankResult {
    int rank = 0;
    Word witness;
};

/// Shortest word mapping all of `set` to one state: breadth-first search over
/// image sets, letters expanded in increasing index order, so the result is
/// the lexicographically least among the shortest. nullopt when no word
/// synchronizes the set. Sets of size <= 1 yield the empty word.
std::optional<Word> oracle_shortest_sync_word(const CompleteAutomaton& a,
                                              const StateSet& set,
                                              const OracleBudget& budget = {},
                                              OracleStats* stats = nullptr);

/// Minimum image size of `set` over all words, with a shortest
/// (lexicographically least) witness. The empty set has rank 0.
RankResult oracle_rank(const CompleteAutomaton& a, const StateSet& set,
                       const OracleBudget& budget = {}, OracleStats* stats = nullptr);

/// Shortest carefully synchronizing word of a partial automaton: from the
/// full state set, a letter applies to a set only when defined on all its
/// members. nullopt when the automaton is not carefully synchronizing.
std::optional<Word> oracle_careful_sync(const PartialAutomaton& a,
                                        const OracleBudget& budget = {},
                                        OracleStats* stats = nullptr);

/// Shortest word accepted by every acceptor (product-automaton breadth-first
/// search); nullopt when the intersection language is empty.
std::optional<Word> oracle_intersection(const std::vector<Acceptor>& acceptors,
                                        const OracleBudget& budget = {},
                                        OracleStats* stats = nullptr);

/// Minimum number of unsatisfied clauses over all assignments (full 2^nvars
/// sweep; refuses more than `max_vars` variables).
int oracle_min_unsat(const Cnf& cnf, int max_vars = 20);

}  // namespace monosync
