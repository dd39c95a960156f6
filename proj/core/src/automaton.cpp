#include "monosync/automaton.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace monosync {

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

StateSet::StateSet(int universe) : n_(universe) {
    if (universe < 0) throw std::invalid_argument("StateSet: negative universe");
    bits_.assign((static_cast<std::size_t>(n_) + 63) / 64, 0);
}

StateSet StateSet::full(int universe) {
    StateSet s(universe);
    for (State q = 0; q < universe; ++q) s.insert(q);
    return s;
}

StateSet StateSet::of(int universe, std::initializer_list<State> states) {
    StateSet s(universe);
    for (State q : states) s.insert(q);
    return s;
}

int StateSet::size() const {
    int total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return total;
}

void StateSet::check(State q) const {
    if (q < 0 || q >= n_)
        throw std::out_of_range("StateSet: state " + std::to_string(q) +
                                " outside [0, " + std::to_string(n_) + ")");
}

bool StateSet::contains(State q) const {
    check(q);
    return (bits_[q / 64] >> (q % 64)) & 1u;
}

void StateSet::insert(State q) {
    check(q);
    bits_[q / 64] |= std::uint64_t{1} << (q % 64);
}

void StateSet::erase(State q) {
    check(q);
    bits_[q / 64] &= ~(std::uint64_t{1} << (q % 64));
}

bool StateSet::is_subset_of(const StateSet& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("StateSet: universe mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~other.bits_[i]) return false;
    return true;
}

std::vector<State> StateSet::to_vector() const {
    std::vector<State> out;
    for (State q = 0; q < n_; ++q)
        if ((bits_[q / 64] >> (q % 64)) & 1u) out.push_back(q);
    return out;
}

StateOrder::StateOrder(std::vector<State> states) : states_(std::move(states)) {
    const int n = static_cast<int>(states_.size());
    positions_.assign(n, -1);
    for (int pos = 0; pos < n; ++pos) {
        State q = states_[pos];
        if (q < 0 || q >= n || positions_[q] != -1)
            throw std::invalid_argument("StateOrder: not a permutation of [0, n)");
        positions_[q] = pos;
    }
}

StateOrder StateOrder::identity(int n) {
    std::vector<State> states(n);
    for (int i = 0; i < n; ++i) states[i] = i;
    return StateOrder(std::move(states));
}

StateOrder StateOrder::reversed() const {
    std::vector<State> states(states_.rbegin(), states_.rend());
    return StateOrder(std::move(states));
}

namespace {

void validate_table(int n, int k, const std::vector<State>& delta,
                    bool allow_undefined) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("automaton: need n >= 1 and k >= 1");
    if (delta.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(k))
        throw std::invalid_argument("automaton: transition table has wrong size");
    for (State to : delta) {
        if (to >= 0 && to < n) continue;
        if (allow_undefined && to == PartialAutomaton::kUndefined) continue;
        throw std::invalid_argument("automaton: transition target " +
                                    std::to_string(to) + " out of range");
    }
}

void check_state(int n, State q) {
    if (q < 0 || q >= n)
        throw std::out_of_range("state " + std::to_string(q) + " outside [0, " +
                                std::to_string(n) + ")");
}

void check_letter(int k, Letter x) {
    if (x < 0 || x >= k)
        throw std::out_of_range("letter " + std::to_string(x) + " outside [0, " +
                                std::to_string(k) + ")");
}

}  // namespace

CompleteAutomaton::CompleteAutomaton(int n, int k, std::vector<State> delta)
    : n_(n), k_(k), delta_(std::move(delta)) {
    validate_table(n_, k_, delta_, /*allow_undefined=*/false);
}

State CompleteAutomaton::next(State q, Letter x) const {
    check_state(n_, q);
    check_letter(k_, x);
    return delta_[static_cast<std::size_t>(q) * k_ + x];
}

PartialAutomaton::PartialAutomaton(int n, int k, std::vector<State> delta)
    : n_(n), k_(k), delta_(std::move(delta)) {
    validate_table(n_, k_, delta_, /*allow_undefined=*/true);
}

bool PartialAutomaton::defined(State q, Letter x) const {
    return entry(q, x) != kUndefined;
}

State PartialAutomaton::next(State q, Letter x) const {
    State to = entry(q, x);
    if (to == kUndefined)
        throw std::logic_error("PartialAutomaton::next on undefined transition");
    return to;
}

State PartialAutomaton::entry(State q, Letter x) const {
    check_state(n_, q);
    check_letter(k_, x);
    return delta_[static_cast<std::size_t>(q) * k_ + x];
}

State apply_word(const CompleteAutomaton& a, State q, const Word& w) {
    State cur = q;
    check_state(a.state_count(), q);
    for (Letter x : w) cur = a.next(cur, x);
    return cur;
}

StateSet image_set(const CompleteAutomaton& a, const StateSet& set, const Word& w) {
    if (set.universe() != a.state_count())
        throw std::invalid_argument("image_set: subset universe mismatch");
    StateSet out(a.state_count());
    for (State s : set.to_vector()) out.insert(apply_word(a, s, w));
    return out;
}

std::optional<StateSet> partial_image_set(const PartialAutomaton& a,
                                          const StateSet& set, const Word& w) {
    if (set.universe() != a.state_count())
        throw std::invalid_argument("partial_image_set: subset universe mismatch");
    std::vector<State> current = set.to_vector();
    for (Letter x : w) {
        check_letter(a.alphabet_size(), x);
        std::vector<State> next;
        next.reserve(current.size());
        for (State q : current) {
            if (!a.defined(q, x)) return std::nullopt;
            next.push_back(a.next(q, x));
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current = std::move(next);
    }
    StateSet out(a.state_count());
    for (State q : current) out.insert(q);
    return out;
}

}  // namespace monosync
