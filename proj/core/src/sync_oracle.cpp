#include "monosync/sync_oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>
#include <unordered_map>

#include "monosync/errors.hpp"

namespace monosync {

namespace {

using Mask = std::uint64_t;

void check_oracle_size(int n, const OracleBudget& budget, const char* who) {
    const int hard_cap = std::min(budget.max_states, 64);
    if (n > hard_cap)
        throw BudgetExceededError(std::string(who) + ": " + std::to_string(n) +
                                  " states exceed the oracle guard of " +
                                  std::to_string(hard_cap));
}

Mask to_mask(const StateSet& set) {
    Mask m = 0;
    for (State q : set.to_vector()) m |= Mask{1} << q;
    return m;
}

struct Prev {
    Mask parent;
    std::int8_t letter;  // -1 marks the search root
};

// Breadth-first search over image sets. Expanding letters in increasing index
// order and never revisiting a set makes discovery order equal to
// (length, lexicographic) order of the generating words, so the first set
// satisfying a goal is reached by the shortest lexicographically least word.
class SubsetBfs {
public:
    SubsetBfs(int n, int k, const OracleBudget& budget, OracleStats* stats)
        : n_(n), k_(k), budget_(budget), stats_(stats) {}

    // step(mask, letter) -> optional<Mask>: nullopt when the letter is not
    // applicable (careful synchronization).
    template <typename Step, typename Goal>
    std::optional<Word> shortest_to(Mask start, Step step, Goal goal) {
        visited_.clear();
        visited_.reserve(1024);
        visited_.emplace(start, Prev{0, -1});
        if (goal(start)) return Word{};

        std::deque<Mask> queue{start};
        while (!queue.empty()) {
            Mask cur = queue.front();
            queue.pop_front();
            for (Letter x = 0; x < k_; ++x) {
                std::optional<Mask> next = step(cur, x);
                if (!next) continue;
                auto [it, inserted] =
                    visited_.emplace(*next, Prev{cur, static_cast<std::int8_t>(x)});
                if (!inserted) continue;
                note_visit();
                if (goal(*next)) return reconstruct(*next);
                queue.push_back(*next);
            }
        }
        return std::nullopt;
    }

    // Full closure; returns the first-discovered mask minimizing `score`.
    template <typename Step, typename Score>
    Mask min_score_closure(Mask start, Step step, Score score) {
        visited_.clear();
        visited_.reserve(1024);
        visited_.emplace(start, Prev{0, -1});

        Mask best = start;
        int best_score = score(start);
        std::deque<Mask> queue{start};
        while (!queue.empty()) {
            Mask cur = queue.front();
            queue.pop_front();
            for (Letter x = 0; x < k_; ++x) {
                std::optional<Mask> next = step(cur, x);
                if (!next) continue;
                auto [it, inserted] =
                    visited_.emplace(*next, Prev{cur, static_cast<std::int8_t>(x)});
                if (!inserted) continue;
                note_visit();
                if (int s = score(*next); s < best_score) {
                    best_score = s;
                    best = *next;
                }
                queue.push_back(*next);
            }
        }
        return best;
    }

    Word reconstruct(Mask goal) const {
        Word w;
        Mask cur = goal;
        for (;;) {
            const Prev& p = visited_.at(cur);
            if (p.letter < 0) break;
            w.push_back(p.letter);
            cur = p.parent;
        }
        std::reverse(w.begin(), w.end());
        return w;
    }

private:
    void note_visit() {
        if (stats_) ++stats_->visited;
        if (visited_.size() > budget_.max_visited)
            throw BudgetExceededError("oracle: visited-set budget of " +
                                      std::to_string(budget_.max_visited) +
                                      " exceeded");
    }

    int n_;
    int k_;
    OracleBudget budget_;
    OracleStats* stats_;
    std::unordered_map<Mask, Prev> visited_;
};

std::vector<Mask> image_tables(const CompleteAutomaton& a) {
    const int n = a.state_count();
    const int k = a.alphabet_size();
    std::vector<Mask> bit_of_next(static_cast<std::size_t>(n) * k);
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < k; ++x)
            bit_of_next[static_cast<std::size_t>(q) * k + x] = Mask{1} << a.next(q, x);
    return bit_of_next;
}

}  // namespace

std::optional<Word> oracle_shortest_sync_word(const CompleteAutomaton& a,
                                              const StateSet& set,
                                              const OracleBudget& budget,
                                              OracleStats* stats) {
    if (set.universe() != a.state_count())
        throw std::invalid_argument("oracle_shortest_sync_word: universe mismatch");
    if (set.size() <= 1) return Word{};
    check_oracle_size(a.state_count(), budget, "oracle_shortest_sync_word");

    const int k = a.alphabet_size();
    const auto table = image_tables(a);
    auto step = [&](Mask cur, Letter x) -> std::optional<Mask> {
        Mask out = 0;
        Mask rest = cur;
        while (rest) {
            int q = std::countr_zero(rest);
            rest &= rest - 1;
            out |= table[static_cast<std::size_t>(q) * k + x];
        }
        return out;
    };
    auto goal = [](Mask m) { return std::has_single_bit(m); };

    SubsetBfs bfs(a.state_count(), k, budget, stats);
    return bfs.shortest_to(to_mask(set), step, goal);
}

RankResult oracle_rank(const CompleteAutomaton& a, const StateSet& set,
                       const OracleBudget& budget, OracleStats* stats) {
    if (set.universe() != a.state_count())
        throw std::invalid_argument("oracle_rank: universe mismatch");
    if (set.empty()) return RankResult{0, Word{}};
    check_oracle_size(a.state_count(), budget, "oracle_rank");

    const int k = a.alphabet_size();
    const auto table = image_tables(a);
    auto step = [&](Mask cur, Letter x) -> std::optional<Mask> {
        Mask out = 0;
        Mask rest = cur;
        while (rest) {
            int q = std::countr_zero(rest);
            rest &= rest - 1;
            out |= table[static_cast<std::size_t>(q) * k + x];
        }
        return out;
    };

    SubsetBfs bfs(a.state_count(), k, budget, stats);
    Mask best = bfs.min_score_closure(to_mask(set), step,
                                      [](Mask m) { return std::popcount(m); });
    return RankResult{std::popcount(best), bfs.reconstruct(best)};
}

std::optional<Word> oracle_careful_sync(const PartialAutomaton& a,
                                        const OracleBudget& budget,
                                        OracleStats* stats) {
    check_oracle_size(a.state_count(), budget, "oracle_careful_sync");

    const int n = a.state_count();
    const int k = a.alphabet_size();
    std::vector<Mask> defined(k, 0);
    std::vector<Mask> bit_of_next(static_cast<std::size_t>(n) * k, 0);
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < k; ++x)
            if (a.defined(q, x)) {
                defined[x] |= Mask{1} << q;
                bit_of_next[static_cast<std::size_t>(q) * k + x] =
                    Mask{1} << a.next(q, x);
            }

    const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    auto step = [&](Mask cur, Letter x) -> std::optional<Mask> {
        if (cur & ~defined[x]) return std::nullopt;  // undefined on a member
        Mask out = 0;
        Mask rest = cur;
        while (rest) {
            int q = std::countr_zero(rest);
            rest &= rest - 1;
            out |= bit_of_next[static_cast<std::size_t>(q) * k + x];
        }
        return out;
    };
    auto goal = [](Mask m) { return std::has_single_bit(m); };

    SubsetBfs bfs(n, k, budget, stats);
    return bfs.shortest_to(full, step, goal);
}

std::optional<Word> oracle_intersection(const std::vector<Acceptor>& acceptors,
                                        const OracleBudget& budget,
                                        OracleStats* stats) {
    if (acceptors.empty())
        throw std::invalid_argument("oracle_intersection: no acceptors");
    const int k = acceptors[0].automaton.alphabet_size();
    for (const auto& acc : acceptors) {
        if (acc.automaton.alphabet_size() != k)
            throw std::invalid_argument("oracle_intersection: alphabet size mismatch");
        if (acc.accepting.universe() != acc.automaton.state_count())
            throw std::invalid_argument("oracle_intersection: accepting-set mismatch");
        if (acc.initial < 0 || acc.initial >= acc.automaton.state_count())
            throw std::out_of_range("oracle_intersection: initial state out of range");
    }

    // Mixed-radix encoding of state tuples.
    const std::size_t m = acceptors.size();
    std::vector<std::uint64_t> stride(m);
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < m; ++i) {
        stride[i] = product;
        std::uint64_t n_i = acceptors[i].automaton.state_count();
        if (product > budget.max_visited / n_i)
            throw BudgetExceededError(
                "oracle_intersection: product state count exceeds budget");
        product *= n_i;
    }

    std::vector<std::vector<char>> accepting(m);
    for (std::size_t i = 0; i < m; ++i) {
        accepting[i].assign(acceptors[i].automaton.state_count(), 0);
        for (State q : acceptors[i].accepting.to_vector()) accepting[i][q] = 1;
    }

    auto decode = [&](std::uint64_t idx, std::size_t i) -> State {
        return static_cast<State>((idx / stride[i]) %
                                  acceptors[i].automaton.state_count());
    };
    auto all_accepting = [&](std::uint64_t idx) {
        for (std::size_t i = 0; i < m; ++i)
            if (!accepting[i][decode(idx, i)]) return false;
        return true;
    };

    std::uint64_t start = 0;
    for (std::size_t i = 0; i < m; ++i)
        start += stride[i] * static_cast<std::uint64_t>(acceptors[i].initial);

    std::unordered_map<std::uint64_t, Prev> visited;
    visited.emplace(start, Prev{0, -1});
    if (all_accepting(start)) return Word{};

    std::deque<std::uint64_t> queue{start};
    std::uint64_t seen = 1;
    while (!queue.empty()) {
        std::uint64_t cur = queue.front();
        queue.pop_front();
        for (Letter x = 0; x < k; ++x) {
            std::uint64_t next = 0;
            for (std::size_t i = 0; i < m; ++i)
                next += stride[i] * static_cast<std::uint64_t>(
                                        acceptors[i].automaton.next(decode(cur, i), x));
            auto [it, inserted] = visited.emplace(next, Prev{cur, static_cast<std::int8_t>(x)});
            if (!inserted) continue;
            if (stats) ++stats->visited;
            if (++seen > budget.max_visited)
                throw BudgetExceededError("oracle_intersection: visited budget exceeded");
            if (all_accepting(next)) {
                Word w;
                std::uint64_t node = next;
                for (;;) {
                    const Prev& p = visited.at(node);
                    if (p.letter < 0) break;
                    w.push_back(p.letter);
                    node = p.parent;
                }
                std::reverse(w.begin(), w.end());
                return w;
            }
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

int oracle_min_unsat(const Cnf& cnf, int max_vars) {
    cnf.validate();
    if (cnf.nvars > max_vars)
        throw BudgetExceededError("oracle_min_unsat: " + std::to_string(cnf.nvars) +
                                  " variables exceed the sweep guard of " +
                                  std::to_string(max_vars));
    int best = cnf.clause_count();
    std::vector<bool> assignment(cnf.nvars, false);
    const std::uint64_t total = std::uint64_t{1} << cnf.nvars;
    for (std::uint64_t bits = 0; bits < total && best > 0; ++bits) {
        for (int v = 0; v < cnf.nvars; ++v) assignment[v] = (bits >> v) & 1;
        best = std::min(best, count_unsat(cnf, assignment));
    }
    return best;
}

}  // namespace monosync
