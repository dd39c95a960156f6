#include "monosync/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace monosync {

namespace {

constexpr Letter kZero = 0;
constexpr Letter kOne = 1;
constexpr Letter kReset = 2;   // 'r'
constexpr Letter kRestart = 2; // 'y' in the careful alphabet
constexpr Letter kCollect = 3; // 'z'

void validate_clause(const std::vector<int>& clause, int nvars) {
    if (clause.empty()) throw std::invalid_argument("clause_gadget: empty clause");
    for (int lit : clause) {
        int var = std::abs(lit);
        if (lit == 0 || var > nvars)
            throw std::invalid_argument("clause_gadget: literal " +
                                        std::to_string(lit) + " out of range");
    }
}

// Does assigning x_i := value satisfy the clause?
bool assignment_satisfies(const std::vector<int>& clause, int i, Letter value) {
    int wanted = value == kOne ? i : -i;
    return std::find(clause.begin(), clause.end(), wanted) != clause.end();
}

class Table {
public:
    Table(int n, int k, State fill)
        : n_(n), k_(k), delta_(static_cast<std::size_t>(n) * k, fill) {}
    void set(State q, Letter x, State to) {
        delta_[static_cast<std::size_t>(q) * k_ + x] = to;
    }
    std::vector<State> take() && { return std::move(delta_); }

private:
    int n_;
    int k_;
    std::vector<State> delta_;
};

// Writes the clause-gadget transitions into an embedding of the layout with
// the given state translation; shared by clause_gadget, max3sat_to_rank and
// (sans s, sans r) sat_to_careful.
template <typename Map>
void emit_clause_rows(Table& table, const ClauseGadgetLayout& lay,
                      const std::vector<int>& clause, Map state, bool with_reset) {
    const int n = lay.nvars;
    for (int i = 1; i <= n; ++i) {
        for (Letter x : {kZero, kOne}) {
            State to = assignment_satisfies(clause, i, x)
                           ? (i == n ? lay.t() : lay.q_prime(i + 1))
                           : lay.q(i + 1);
            table.set(state(lay.q(i)), x, state(to));
        }
    }
    for (int i = 2; i <= n - 1; ++i)
        for (Letter x : {kZero, kOne})
            table.set(state(lay.q_prime(i)), x, state(lay.q_prime(i + 1)));
    if (n >= 2)
        for (Letter x : {kZero, kOne})
            table.set(state(lay.q_prime(n)), x, state(lay.t()));
    for (Letter x : {kZero, kOne}) {
        table.set(state(lay.q(n + 1)), x, state(lay.t()));
        table.set(state(lay.t()), x, state(lay.t()));
    }
    if (with_reset) {
        for (int i = 1; i <= n + 1; ++i) table.set(state(lay.q(i)), kReset, state(lay.s()));
        for (int i = 2; i <= n; ++i)
            table.set(state(lay.q_prime(i)), kReset, state(lay.s()));
        for (Letter x : {kZero, kOne, kReset}) table.set(state(lay.s()), x, state(lay.s()));
        table.set(state(lay.t()), kReset, state(lay.t()));
    }
}

}  // namespace

Acceptor clause_gadget(const std::vector<int>& clause, int nvars) {
    if (nvars < 1) throw std::invalid_argument("clause_gadget: need nvars >= 1");
    validate_clause(clause, nvars);

    const ClauseGadgetLayout lay{nvars};
    Table table(lay.state_count(), 3, 0);
    emit_clause_rows(table, lay, clause, [](State q) { return q; },
                     /*with_reset=*/true);

    return Acceptor{CompleteAutomaton(lay.state_count(), 3, std::move(table).take()),
                    lay.q(1), StateSet::of(lay.state_count(), {lay.t()})};
}

Acceptor timer_gadget(int nvars) {
    if (nvars < 1) throw std::invalid_argument("timer_gadget: need nvars >= 1");
    const TimerLayout lay{nvars};
    Table table(lay.state_count(), 3, 0);

    for (Letter x : {kZero, kOne, kReset}) {
        table.set(lay.a(), x, lay.a());
        table.set(lay.b(), x, lay.b());
    }
    for (int i = 1; i <= nvars; ++i)
        for (Letter x : {kZero, kOne}) table.set(lay.p(i), x, lay.p(i + 1));
    for (Letter x : {kZero, kOne}) table.set(lay.p(nvars + 1), x, lay.b());
    for (int i = 1; i <= nvars + 1; ++i) table.set(lay.p(i), kReset, lay.a());

    return Acceptor{CompleteAutomaton(lay.state_count(), 3, std::move(table).take()),
                    lay.p(1), StateSet::of(lay.state_count(), {lay.a()})};
}

std::vector<Acceptor> sat_to_intersection(const Cnf& cnf) {
    cnf.validate();
    if (cnf.nvars < 1)
        throw std::invalid_argument("sat_to_intersection: need nvars >= 1");
    std::vector<Acceptor> out;
    out.reserve(cnf.clauses.size() + 1);
    for (const auto& clause : cnf.clauses) out.push_back(clause_gadget(clause, cnf.nvars));
    out.push_back(timer_gadget(cnf.nvars));
    return out;
}

RankInstance max3sat_to_rank(const Cnf& cnf) {
    cnf.validate();
    if (cnf.nvars < 1 || cnf.clause_count() < 1)
        throw std::invalid_argument("max3sat_to_rank: need variables and clauses");

    const int n = cnf.nvars;
    const int m = cnf.clause_count();
    const RankInstanceLayout lay{n, m};
    const ClauseGadgetLayout clause_lay{n};
    Table table(lay.state_count(), 3, 0);

    for (int j = 0; j < m; ++j) {
        const State base = lay.block(j);
        emit_clause_rows(table, clause_lay, cnf.clauses[j],
                         [base](State q) { return base + q; },
                         /*with_reset=*/true);
        // Timer tail of the block; its a-state is the gadget's t (the rows
        // coincide: self-loops on every letter).
        for (int i = 1; i <= n; ++i)
            for (Letter x : {kZero, kOne}) table.set(lay.p(j, i), x, lay.p(j, i + 1));
        for (Letter x : {kZero, kOne}) table.set(lay.p(j, n + 1), x, lay.b(j));
        for (int i = 1; i <= n + 1; ++i) table.set(lay.p(j, i), kReset, lay.t(j));
        for (Letter x : {kZero, kOne, kReset}) table.set(lay.b(j), x, lay.b(j));
    }

    StateSet subset(lay.state_count());
    for (int j = 0; j < m; ++j) {
        subset.insert(lay.q1(j));
        subset.insert(lay.p1(j));
    }
    return RankInstance{
        CompleteAutomaton(lay.state_count(), 3, std::move(table).take()),
        std::move(subset)};
}

PartialAutomaton sat_to_careful(const Cnf& cnf) {
    cnf.validate();
    if (cnf.nvars < 1 || cnf.clause_count() < 1)
        throw std::invalid_argument("sat_to_careful: need variables and clauses");

    const int n = cnf.nvars;
    const int m = cnf.clause_count();
    const CarefulInstanceLayout lay{n, m};
    constexpr State U = PartialAutomaton::kUndefined;
    Table table(lay.state_count(), 4, U);

    for (int j = 0; j < m; ++j) {
        // 0/1 rows of the clause gadget, with s removed (no 0/1 transition
        // ever targets s).
        const ClauseGadgetLayout clause_lay{n};
        auto state = [&](State q) -> State {
            if (q == clause_lay.t()) return lay.t(j);
            if (q == clause_lay.q(1)) return lay.q(j, 1);
            // interior states shift down by one once s is gone
            return lay.block(j) + q - 1;
        };
        emit_clause_rows(table, clause_lay, cnf.clauses[j], state,
                         /*with_reset=*/false);

        // y restarts the block, z collects its accepting tip.
        for (State q = lay.block(j); q <= lay.t(j); ++q)
            table.set(q, kRestart, lay.q(j, 1));
        table.set(lay.t(j), kCollect, lay.f());
    }

    for (int i = 1; i <= n; ++i)
        for (Letter x : {kZero, kOne}) table.set(lay.p(i), x, lay.p(i + 1));
    // 0/1 undefined on p_{n+1}: the timer runs out
    for (int i = 1; i <= n + 1; ++i) table.set(lay.p(i), kRestart, lay.p(1));
    table.set(lay.p(n + 1), kCollect, lay.f());

    for (Letter x : {kZero, kOne, kRestart, kCollect}) table.set(lay.f(), x, lay.f());

    return PartialAutomaton(lay.state_count(), 4, std::move(table).take());
}

std::optional<std::vector<bool>> decode_assignment(const Word& w, int nvars) {
    std::size_t at = 0;
    if (!w.empty() && (w[0] < kZero || w[0] > kOne)) at = 1;
    if (w.size() < at + static_cast<std::size_t>(nvars)) return std::nullopt;
    std::vector<bool> assignment(nvars);
    for (int i = 0; i < nvars; ++i) {
        Letter x = w[at + i];
        if (x != kZero && x != kOne) return std::nullopt;
        assignment[i] = x == kOne;
    }
    return assignment;
}

}  // namespace monosync
