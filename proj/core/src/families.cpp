#include "monosync/families.hpp"

#include <stdexcept>
#include <string>

#include "monosync/classify.hpp"

namespace monosync {

namespace {

class TableBuilder {
public:
    TableBuilder(int n, int k, State fill)
        : n_(n), k_(k), delta_(static_cast<std::size_t>(n) * k, fill) {}

    void set(State q, Letter x, State to) {
        delta_[static_cast<std::size_t>(q) * k_ + x] = to;
    }
    void self_loop_row(State q) {
        for (Letter x = 0; x < k_; ++x) set(q, x, q);
    }

    CompleteAutomaton complete() && { return {n_, k_, std::move(delta_)}; }
    PartialAutomaton partial() && { return {n_, k_, std::move(delta_)}; }

private:
    int n_;
    int k_;
    std::vector<State> delta_;
};

std::string sub(const std::string& base, int i) {
    return base + "_" + std::to_string(i);
}

}  // namespace

FamilyInstance pairwise_gap_family(int l) {
    if (l < 1) throw std::invalid_argument("pairwise_gap_family: need l >= 1");
    if (l > 20) throw std::invalid_argument("pairwise_gap_family: l too large");
    const int sources = 1 << l;
    const PairwiseGapLayout lay{l};
    const int n = lay.f() + 1;

    TableBuilder table(n, 2, 0);
    std::vector<std::string> state_names(n);
    state_names[lay.f()] = "f";
    table.self_loop_row(lay.f());

    auto bit_of = [l](int i, int depth) { return (i >> (l - 1 - depth)) & 1; };

    for (int i = 0; i < sources; ++i) {
        const State base = lay.s(i);
        state_names[lay.s(i)] = sub("s", i);
        state_names[lay.t(i)] = sub("t", i);
        state_names[lay.p(i)] = sub("p", i);
        table.self_loop_row(lay.p(i));

        // One trie stage: from `start`, reading bin(i) ends at f, anything
        // else of length l ends at `deviated_end`.
        auto build_stage = [&](State start, State deviated_end, State track_base,
                               const char* tag) {
            auto matched = [&](int d) { return track_base + 2 * (d - 1); };
            auto deviated = [&](int d) { return track_base + 2 * (d - 1) + 1; };
            for (int d = 1; d < l; ++d) {
                state_names[matched(d)] = sub(std::string("m") + tag, i) + "." + std::to_string(d);
                state_names[deviated(d)] = sub(std::string("n") + tag, i) + "." + std::to_string(d);
            }
            State cur_m = start;
            for (int d = 0; d < l; ++d) {
                const int good = bit_of(i, d);
                const State next_m = d == l - 1 ? lay.f() : matched(d + 1);
                const State next_n = d == l - 1 ? deviated_end : deviated(d + 1);
                table.set(cur_m, good, next_m);
                table.set(cur_m, 1 - good, next_n);
                if (d >= 1) {
                    table.set(deviated(d), 0, next_n);
                    table.set(deviated(d), 1, next_n);
                }
                cur_m = next_m;
            }
        };
        build_stage(lay.s(i), lay.t(i), base + 1, "1");
        build_stage(lay.t(i), lay.p(i), base + 2 * l, "2");
    }

    StateSet subset(n);
    for (int i = 0; i < sources; ++i) subset.insert(lay.s(i));

    return FamilyInstance{std::move(table).complete(), subset, Word{},
                          {"0", "1"}, std::move(state_names)};
}

FamilyInstance ternary_family(int m) {
    if (m < 1) throw std::invalid_argument("ternary_family: need m >= 1");
    const int n = 2 * m + 3;
    auto q = [](int i) { return i - 1; };  // q_i naming is 1-based

    TableBuilder table(n, 3, 0);
    table.self_loop_row(q(1));
    table.self_loop_row(q(m + 2));
    table.self_loop_row(q(2 * m + 3));
    for (int i = 2; i <= m + 1; ++i) {
        table.set(q(i), 0, q(i + 1));
        table.set(q(i), 1, q(i));
        table.set(q(i), 2, q(1));
    }
    for (int i = m + 4; i <= 2 * m + 2; ++i) {
        table.set(q(i), 0, q(2 * m + 3));
        table.set(q(i), 1, q(i - 1));
        table.set(q(i), 2, q(i));
    }
    table.set(q(m + 3), 0, q(2 * m + 2));
    table.set(q(m + 3), 1, q(m + 3));
    table.set(q(m + 3), 2, q(m + 2));

    // 1^{m-1} (0 1^{m-1})^m 2
    Word witness;
    for (int i = 0; i < m - 1; ++i) witness.push_back(1);
    for (int rep = 0; rep < m; ++rep) {
        witness.push_back(0);
        for (int i = 0; i < m - 1; ++i) witness.push_back(1);
    }
    witness.push_back(2);

    std::vector<std::string> state_names(n);
    for (int i = 1; i <= n; ++i) state_names[q(i)] = sub("q", i);

    return FamilyInstance{std::move(table).complete(),
                          StateSet::of(n, {q(2), q(2 * m + 2)}), std::move(witness),
                          {"0", "1", "2"}, std::move(state_names)};
}

FamilyInstance binary_family(int m) {
    if (m < 1) throw std::invalid_argument("binary_family: need m >= 1");
    const int n = 4 * m + 3;
    auto q = [](int i) { return i - 1; };

    TableBuilder table(n, 2, 0);
    table.self_loop_row(q(1));
    table.self_loop_row(q(2 * m + 2));
    table.self_loop_row(q(4 * m + 3));
    for (int i = 1; i <= n; ++i) {
        if (i == 1 || i == 2 * m + 2 || i == 4 * m + 3) continue;
        table.set(q(i), 1, q(i - 1));
    }
    // The four index ranges of the construction; at m = 1 the last one is
    // empty and q_5, q_6 take self-loops from the third range.
    for (int i = 2; i <= m + 1; ++i) table.set(q(i), 0, q(i + m));
    for (int i = m + 2; i <= 2 * m + 1; ++i) table.set(q(i), 0, q(2 * m + 2));
    for (int i = 2 * m + 3; i <= 3 * m + 3; ++i) table.set(q(i), 0, q(m + i - 1));
    for (int i = 3 * m + 4; i <= 4 * m + 2; ++i) table.set(q(i), 0, q(4 * m + 3));

    // (1^{m-1} 0)^m 1^{2m}
    Word witness;
    for (int rep = 0; rep < m; ++rep) {
        for (int i = 0; i < m - 1; ++i) witness.push_back(1);
        witness.push_back(0);
    }
    for (int i = 0; i < 2 * m; ++i) witness.push_back(1);

    std::vector<std::string> state_names(n);
    for (int i = 1; i <= n; ++i) state_names[q(i)] = sub("q", i);

    return FamilyInstance{std::move(table).complete(),
                          StateSet::of(n, {q(m + 2), q(4 * m + 2)}),
                          std::move(witness),
                          {"0", "1"}, std::move(state_names)};
}

CounterAcceptors counter_acceptors(int k) {
    if (k < 1) throw std::invalid_argument("counter_acceptors: need k >= 1");
    CounterAcceptors out;
    for (int j = 1; j <= k; ++j) out.letter_names.push_back(sub("a", j));

    // Per acceptor i: f = 0, s = 1, t = 2 (the monotone order).
    constexpr State F = 0, S = 1, T = 2;
    for (int i = 1; i <= k; ++i) {
        TableBuilder table(3, k, 0);
        table.self_loop_row(F);
        for (int j = 1; j <= k; ++j) {
            const Letter x = j - 1;
            if (j < i) {
                table.set(S, x, S);
                table.set(T, x, T);
            } else if (j == i) {
                table.set(S, x, T);
                table.set(T, x, T);
            } else {
                table.set(S, x, F);
                table.set(T, x, S);
            }
        }
        out.acceptors.push_back(
            Acceptor{std::move(table).complete(), S, StateSet::of(3, {T})});
        out.state_names.push_back({sub("f", i), sub("s", i), sub("t", i)});
    }
    return out;
}

PartialInstance counter_partial(int k, int base) {
    if (k < 1) throw std::invalid_argument("counter_partial: need k >= 1");
    if (base != 2 && base != 3)
        throw std::invalid_argument("counter_partial: base must be 2 or 3");

    const int per_digit = base;
    const int n = per_digit * k;
    const int letters = k + 1;  // a_1..a_k, then the merge letter a
    const Letter merge = k;
    constexpr State U = PartialAutomaton::kUndefined;

    TableBuilder table(n, letters, U);
    std::vector<std::string> state_names(n);

    for (int i = 1; i <= k; ++i) {
        const State lo = per_digit * (i - 1);  // s_i / z_i
        for (int j = 1; j <= k; ++j) {
            const Letter x = j - 1;
            if (j < i) {
                for (int d = 0; d < per_digit; ++d) table.set(lo + d, x, lo + d);
            } else if (j == i) {
                // increment this digit, saturating at the top
                for (int d = 0; d < per_digit - 1; ++d) table.set(lo + d, x, lo + d + 1);
                table.set(lo + per_digit - 1, x, lo + per_digit - 1);
            } else {
                // reset: defined only on the top value
                table.set(lo + per_digit - 1, x, lo);
            }
        }
        // merge letter: top value of every digit -> top value of digit k
        table.set(lo + per_digit - 1, merge, per_digit * k - 1);

        if (base == 2) {
            state_names[lo] = sub("s", i);
            state_names[lo + 1] = sub("t", i);
        } else {
            state_names[lo] = sub("z", i);
            state_names[lo + 1] = sub("o", i);
            state_names[lo + 2] = sub("w", i);
        }
    }

    std::vector<std::string> letter_names;
    for (int j = 1; j <= k; ++j) letter_names.push_back(sub("a", j));
    letter_names.push_back("a");

    return PartialInstance{std::move(table).partial(), std::move(letter_names),
                           std::move(state_names)};
}

PartialAutomaton trim_to_partial(const CompleteAutomaton& a, const StateOrder& ord) {
    const int n = a.state_count();
    const int k = a.alphabet_size();
    if (n < 3) throw std::invalid_argument("trim_to_partial: need n >= 3");
    if (ord.size() != n)
        throw std::invalid_argument("trim_to_partial: order size mismatch");
    if (!check_monotonic(a, ord))
        throw std::invalid_argument("trim_to_partial: order is not monotone");

    // Survivor at position p of ord becomes state p-1.
    std::vector<State> new_index(n, PartialAutomaton::kUndefined);
    for (int p = 1; p + 1 < n; ++p) new_index[ord.at(p)] = p - 1;

    std::vector<State> delta(static_cast<std::size_t>(n - 2) * k,
                             PartialAutomaton::kUndefined);
    for (int p = 1; p + 1 < n; ++p) {
        State q = ord.at(p);
        for (Letter x = 0; x < k; ++x)
            delta[static_cast<std::size_t>(p - 1) * k + x] = new_index[a.next(q, x)];
    }
    return PartialAutomaton(n - 2, k, std::move(delta));
}

}  // namespace monosync
