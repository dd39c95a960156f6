#pragma once

#include <optional>
#include <vector>

#include "monosync/automaton.hpp"
#include "monosync/cnf.hpp"

namespace monosync {

/// State layout of a clause gadget over n variables and letters {0, 1, r}.
/// States are emitted in the monotone order s, q_1, q_2, q'_2, ..., q_n,
/// q'_n, q_{n+1}, t (identity order is monotone).
struct ClauseGadgetLayout {
    int nvars;
    int state_count() const { return 2 * nvars + 2; }
    State s() const { return 0; }
    State q(int i) const { return i == 1 ? 1 : 2 * (i - 1); }  // 1 <= i <= n+1
    State q_prime(int i) const { return 2 * (i - 1) + 1; }     // 2 <= i <= n
    State t() const { return 2 * nvars + 1; }
};

/// Timer layout: a, p_1, ..., p_{n+1}, b.
struct TimerLayout {
    int nvars;
    int state_count() const { return nvars + 3; }
    State a() const { return 0; }
    State p(int i) const { return i; }  // 1 <= i <= n+1
    State b() const { return nvars + 2; }
};

/// Layout of the rank-reduction automaton: one block per clause, each block a
/// clause gadget with its t merged with its timer's a, followed by the timer
/// tail p_1..p_{n+1}, b. Blocks are consecutive, the identity order is
/// monotone.
struct RankInstanceLayout {
    int nvars;
    int nclauses;
    int block_size() const { return 3 * nvars + 4; }
    int state_count() const { return nclauses * block_size(); }
    State block(int j) const { return j * block_size(); }           // 0-based j
    State q1(int j) const { return block(j) + 1; }
    State t(int j) const { return block(j) + 2 * nvars + 1; }       // = timer a
    State p(int j, int i) const { return block(j) + 2 * nvars + 1 + i; }
    State p1(int j) const { return p(j, 1); }
    State b(int j) const { return block(j) + block_size() - 1; }
};

/// Layout of the careful-synchronization instance over letters {0, 1, y, z}:
/// per-clause blocks of the clause gadget without s, then the timer chain
/// without a and b, then the fresh merge target f.
struct CarefulInstanceLayout {
    int nvars;
    int nclauses;
    int block_size() const { return 2 * nvars + 1; }
    State block(int j) const { return j * block_size(); }
    State q(int j, int i) const {  // 1 <= i <= n+1
        return block(j) + (i == 1 ? 0 : 2 * (i - 1) - 1);
    }
    State q_prime(int j, int i) const { return block(j) + 2 * (i - 1); }
    State t(int j) const { return block(j) + 2 * nvars; }
    State p(int i) const { return nclauses * block_size() + i - 1; }  // 1 <= i <= n+1
    State f() const { return nclauses * block_size() + nvars + 1; }
    int state_count() const { return f() + 1; }
};

inline const std::vector<std::string>& intersection_letter_names() {
    static const std::vector<std::string> names{"0", "1", "r"};
    return names;
}

inline const std::vector<std::string>& careful_letter_names() {
    static const std::vector<std::string> names{"0", "1", "y", "z"};
    return names;
}

/// Acceptor A_j for one clause: reading an assignment letter-by-letter, the
/// run jumps onto the primed track as soon as a literal is satisfied and only
/// then can reach the accepting sink t after exactly n letters; r resets
/// everything except t to the dead sink s.
Acceptor clause_gadget(const std::vector<int>& clause, int nvars);

/// The timer T: accepts exactly the words of n {0,1}-letters followed by r.
Acceptor timer_gadget(int nvars);

/// One clause gadget per clause plus one timer; the intersection language is
/// non-empty iff the formula is satisfiable.
std::vector<Acceptor> sat_to_intersection(const Cnf& cnf);

struct RankInstance {
    CompleteAutomaton automaton;
    StateSet subset;
};

/// Disjoint union of clause gadgets and per-clause timers with t and a
/// merged; the subset {q_1, p_1 per block} has rank m + h where h is the
/// minimum number of unsatisfied clauses.
RankInstance max3sat_to_rank(const Cnf& cnf);

/// Partial automaton over {0, 1, y, z} that is carefully synchronizing iff
/// the formula is satisfiable; y restarts every block, z collects the
/// accepting tips onto f.
PartialAutomaton sat_to_careful(const Cnf& cnf);

/// Reads an assignment back out of a witness word: the first nvars
/// {0,1}-letters, skipping one leading non-binary letter (the y of a careful
/// witness or a stray r). nullopt when w has no such prefix.
std::optional<std::vector<bool>> decode_assignment(const Word& w, int nvars);

}  // namespace monosync
