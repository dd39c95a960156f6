#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "monosync/automaton.hpp"

namespace monosync {

/// The pair automaton: all unordered pairs {p, q} with p <= q (singletons
/// included), with arcs ({p, q}, x) -> {delta(p, x), delta(q, x)}. Node count
/// is n(n+1)/2 and every node has exactly k outgoing arcs.
class PairGraph {
public:
    explicit PairGraph(const CompleteAutomaton& a);

    int node_count() const { return static_cast<int>(step_.size()) / k_; }
    int alphabet_size() const { return k_; }

    int index(State p, State q) const;
    std::pair<State, State> pair_at(int node) const;
    bool is_singleton(int node) const { return singleton_[node]; }

    int step(int node, Letter x) const { return step_[node * k_ + x]; }

private:
    int n_;
    int k_;
    std::vector<int> step_;
    std::vector<bool> singleton_;
};

/// Membership structure over unordered state pairs.
class SyncablePairs {
public:
    SyncablePairs(int n, std::vector<bool> merged);

    int state_count() const { return n_; }
    bool contains(State p, State q) const;
    std::vector<std::pair<State, State>> to_pairs() const;  // p < q, ascending

private:
    int n_;
    std::vector<bool> merged_;  // indexed like PairGraph nodes
};

/// All pairs from which some singleton is reachable in the pair automaton,
/// computed by one multi-source reverse breadth-first search from the
/// singletons. O(n^2 k) time and space; valid for any complete automaton.
SyncablePairs sync_pairs(const CompleteAutomaton& a);

/// Pairwise synchronizability criterion. Sound and complete for monotonic
/// automata (caller-asserted); on other automata it is only the pairwise
/// check. Sets of size <= 1 are synchronizing.
bool is_sync_set_monotonic(const CompleteAutomaton& a, const StateSet& set);
bool is_sync_set_monotonic(const SyncablePairs& pairs, const StateSet& set);

/// Shortest (lexicographically least) word merging p and q; the empty word
/// when p == q; nullopt when the pair cannot be merged.
std::optional<Word> shortest_pair_word(const CompleteAutomaton& a, State p, State q);

/// The order-free algorithm for monotonic automata: compute a shortest
/// merging word for every pair of states, keep those that synchronize `set`
/// (checked by applying them), return the shortest with lexicographic
/// tie-break. On monotonic input the result length equals the true optimum.
/// Raises NotMonotonicEvidenceError when every pair of `set` is mergeable yet
/// no candidate synchronizes it (impossible for monotonic automata); returns
/// nullopt when some pair of `set` cannot be merged.
std::optional<Word> shortest_sync_word_monotonic(const CompleteAutomaton& a,
                                                 const StateSet& set);

struct MaxSyncSet {
    StateSet set;
    Word word;
};

/// Largest synchronizing subset (for monotonic automata): for every mergeable
/// pair, apply its shortest merging word and collect every state landing on
/// the pair's target; the largest collection wins, ties broken by the
/// pair-lexicographically smallest generating pair. Falls back to
/// ({state 0}, empty word) when no pair is mergeable.
MaxSyncSet max_sync_set_monotonic(const CompleteAutomaton& a);

}  // namespace monosync
