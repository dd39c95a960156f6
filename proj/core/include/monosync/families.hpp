#pragma once

#include <string>
#include <vector>

#include "monosync/automaton.hpp"

namespace monosync {

/// A generated complete automaton together with its distinguished subset,
/// a documented witness word (empty when the construction has none) and the
/// naming metadata used for file output. States are always emitted in the
/// construction's monotone/topological order, so StateOrder::identity(n) is a
/// valid witness order.
struct FamilyInstance {
    CompleteAutomaton automaton;
    StateSet subset;
    Word witness;
    std::vector<std::string> letter_names;
    std::vector<std::string> state_names;
};

struct PartialInstance {
    PartialAutomaton automaton;
    std::vector<std::string> letter_names;
    std::vector<std::string> state_names;
};

struct CounterAcceptors {
    std::vector<Acceptor> acceptors;
    std::vector<std::string> letter_names;
    std::vector<std::vector<std::string>> state_names;  // per acceptor
};

/// Binary weakly acyclic automaton on 2^l source states s_0..s_{2^l - 1}
/// where every pair of sources merges yet the whole source set only ever
/// drops to size 2^l - 1. Each source runs a two-stage binary trie: reading
/// its own l-bit code reaches the shared sink f, any other l-letter word
/// reaches t_i; the second stage repeats the game from t_i towards f / the
/// private sink p_i. No witness word (the subset is not synchronizing for
/// l >= 2).
FamilyInstance pairwise_gap_family(int l);

/// Layout helper for pairwise_gap_family.
struct PairwiseGapLayout {
    int l;
    int block_size() const { return 4 * l - 1; }
    State s(int i) const { return i * block_size(); }
    State t(int i) const { return i * block_size() + 2 * l - 1; }
    State p(int i) const { return i * block_size() + 4 * l - 2; }
    State f() const { return (1 << l) * block_size(); }
};

/// Three-letter monotonic automaton on 2m+3 states (sinks q_1, q_{m+2},
/// q_{2m+3}) whose subset S = {q_2, q_{2m+2}} has shortest synchronizing word
/// 1^{m-1} (0 1^{m-1})^m 2 of length m^2 + m; that word is the witness.
FamilyInstance ternary_family(int m);

/// Binary monotonic automaton on 4m+3 states (sinks q_1, q_{2m+2}, q_{4m+3})
/// whose subset S = {q_{m+2}, q_{4m+2}} needs length >= m^2; the witness
/// (1^{m-1} 0)^m 1^{2m} of length m^2 + 2m synchronizes it.
FamilyInstance binary_family(int m);

/// k three-state acceptors over letters a_1..a_k that jointly imitate a
/// binary counter: the shortest common accepted word has length 2^k - 1.
CounterAcceptors counter_acceptors(int k);

/// Partial monotonic automaton imitating a base-2 or base-3 counter over
/// letters a_1..a_k plus a merge letter a. base 2: the acceptor family with
/// the failure states removed (2k states). base 3: three states per digit
/// (3k states); the shortest carefully synchronizing word has length >= 3^k.
PartialInstance counter_partial(int k, int base);

/// Deletes the first and last state under `ord` (which must pass
/// check_monotonic), turning transitions into them undefined; the survivors
/// are reindexed by their position in `ord`, so the result is monotone under
/// the identity order.
PartialAutomaton trim_to_partial(const CompleteAutomaton& a, const StateOrder& ord);

}  // namespace monosync
