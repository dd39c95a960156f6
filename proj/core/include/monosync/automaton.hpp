#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace monosync {

using State = int;
using Letter = int;

/// A word is a sequence of letter indices.
using Word = std::vector<Letter>;

/// Ordering used for all tie-breaking: shorter first, then lexicographic by
/// letter index.
bool word_less(const Word& a, const Word& b);

/// Subset of the states [0, n) of a fixed automaton, stored as a bit vector.
/// Immutable in spirit: all library operations take and return StateSets by
/// value and never mutate shared instances.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(int universe);

    static StateSet full(int universe);
    static StateSet of(int universe, std::initializer_list<State> states);

    int universe() const { return n_; }
    int size() const;
    bool empty() const { return size() == 0; }

    bool contains(State q) const;
    void insert(State q);
    void erase(State q);

    bool is_subset_of(const StateSet& other) const;

    /// Members in ascending order.
    std::vector<State> to_vector() const;

    bool operator==(const StateSet&) const = default;

private:
    void check(State q) const;

    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// A linear order of the states: position -> state (a permutation of [0, n)).
class StateOrder {
public:
    explicit StateOrder(std::vector<State> states);

    static StateOrder identity(int n);

    int size() const { return static_cast<int>(states_.size()); }
    State at(int position) const { return states_[position]; }
    int position_of(State q) const { return positions_[q]; }

    const std::vector<State>& states() const { return states_; }

    StateOrder reversed() const;

    bool operator==(const StateOrder& other) const {
        return states_ == other.states_;
    }

private:
    std::vector<State> states_;     // position -> state
    std::vector<int> positions_;    // state -> position
};

/// Deterministic finite automaton with a total transition table. States are
/// 0..n-1, letters 0..k-1. Immutable after construction; every query is
/// read-only and safe to call concurrently.
class CompleteAutomaton {
public:
    CompleteAutomaton(int n, int k, std::vector<State> delta);

    int state_count() const { return n_; }
    int alphabet_size() const { return k_; }

    State next(State q, Letter x) const;

    bool operator==(const CompleteAutomaton&) const = default;

private:
    int n_;
    int k_;
    std::vector<State> delta_;  // n_*k_ entries, row per state
};

/// Automaton whose transition function may be undefined on some
/// (state, letter) pairs.
class PartialAutomaton {
public:
    static constexpr State kUndefined = -1;

    PartialAutomaton(int n, int k, std::vector<State> delta);

    int state_count() const { return n_; }
    int alphabet_size() const { return k_; }

    bool defined(State q, Letter x) const;
    /// Precondition: defined(q, x).
    State next(State q, Letter x) const;
    /// Raw table entry, kUndefined when the transition is absent.
    State entry(State q, Letter x) const;

    bool operator==(const PartialAutomaton&) const = default;

private:
    int n_;
    int k_;
    std::vector<State> delta_;
};

/// Complete automaton with an initial state and a set of accepting states,
/// used by the intersection problems.
struct Acceptor {
    CompleteAutomaton automaton;
    State initial;
    StateSet accepting;
};

/// State reached from q by reading w; the empty word returns q.
State apply_word(const CompleteAutomaton& a, State q, const Word& w);

/// { apply_word(a, s, w) : s in set }. The empty set maps to the empty set.
StateSet image_set(const CompleteAutomaton& a, const StateSet& set, const Word& w);

/// Image of the set under w if every prefix of w is defined on the evolving
/// set; nullopt (a legal outcome, not an error) otherwise.
std::optional<StateSet> partial_image_set(const PartialAutomaton& a,
                                          const StateSet& set, const Word& w);

}  // namespace monosync
