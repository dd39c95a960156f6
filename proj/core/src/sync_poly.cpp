#include "monosync/sync_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>

#include "monosync/errors.hpp"

namespace monosync {

namespace {

// Upper-triangular (diagonal included) pair indexing.
int pair_index(int n, State p, State q) {
    if (p > q) std::swap(p, q);
    return p * n - p * (p - 1) / 2 + (q - p);
}

}  // namespace

PairGraph::PairGraph(const CompleteAutomaton& a)
    : n_(a.state_count()), k_(a.alphabet_size()) {
    const int nodes = n_ * (n_ + 1) / 2;
    step_.resize(static_cast<std::size_t>(nodes) * k_);
    singleton_.assign(nodes, false);
    for (State p = 0; p < n_; ++p) {
        singleton_[pair_index(n_, p, p)] = true;
        for (State q = p; q < n_; ++q) {
            const int node = pair_index(n_, p, q);
            for (Letter x = 0; x < k_; ++x)
                step_[static_cast<std::size_t>(node) * k_ + x] =
                    pair_index(n_, a.next(p, x), a.next(q, x));
        }
    }
}

int PairGraph::index(State p, State q) const {
    if (p < 0 || p >= n_ || q < 0 || q >= n_)
        throw std::out_of_range("PairGraph::index: state out of range");
    return pair_index(n_, p, q);
}

std::pair<State, State> PairGraph::pair_at(int node) const {
    for (State p = 0; p < n_; ++p) {
        const int row = n_ - p;  // pairs whose smaller element is p
        const int base = pair_index(n_, p, p);
        if (node < base + row) return {p, p + (node - base)};
    }
    throw std::out_of_range("PairGraph::pair_at: node out of range");
}

SyncablePairs::SyncablePairs(int n, std::vector<bool> merged)
    : n_(n), merged_(std::move(merged)) {
    if (merged_.size() != static_cast<std::size_t>(n) * (n + 1) / 2)
        throw std::invalid_argument("SyncablePairs: size mismatch");
}

bool SyncablePairs::contains(State p, State q) const {
    if (p < 0 || p >= n_ || q < 0 || q >= n_)
        throw std::out_of_range("SyncablePairs::contains: state out of range");
    return merged_[pair_index(n_, p, q)];
}

std::vector<std::pair<State, State>> SyncablePairs::to_pairs() const {
    std::vector<std::pair<State, State>> out;
    for (State p = 0; p < n_; ++p)
        for (State q = p + 1; q < n_; ++q)
            if (merged_[pair_index(n_, p, q)]) out.emplace_back(p, q);
    return out;
}

SyncablePairs sync_pairs(const CompleteAutomaton& a) {
    const PairGraph graph(a);
    const int nodes = graph.node_count();
    const int k = graph.alphabet_size();
    const int n = a.state_count();

    std::vector<std::vector<int>> reverse(nodes);
    for (int node = 0; node < nodes; ++node)
        for (Letter x = 0; x < k; ++x) reverse[graph.step(node, x)].push_back(node);

    std::vector<bool> reached(nodes, false);
    std::deque<int> queue;
    for (State q = 0; q < n; ++q) {
        const int node = graph.index(q, q);
        reached[node] = true;
        queue.push_back(node);
    }
    while (!queue.empty()) {
        int node = queue.front();
        queue.pop_front();
        for (int from : reverse[node])
            if (!reached[from]) {
                reached[from] = true;
                queue.push_back(from);
            }
    }
    return SyncablePairs(n, std::move(reached));
}

bool is_sync_set_monotonic(const CompleteAutomaton& a, const StateSet& set) {
    if (set.universe() != a.state_count())
        throw std::invalid_argument("is_sync_set_monotonic: universe mismatch");
    if (set.size() <= 1) return true;
    return is_sync_set_monotonic(sync_pairs(a), set);
}

bool is_sync_set_monotonic(const SyncablePairs& pairs, const StateSet& set) {
    if (set.universe() != pairs.state_count())
        throw std::invalid_argument("is_sync_set_monotonic: universe mismatch");
    const auto members = set.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!pairs.contains(members[i], members[j])) return false;
    return true;
}

std::optional<Word> shortest_pair_word(const CompleteAutomaton& a, State p, State q) {
    if (p < 0 || p >= a.state_count() || q < 0 || q >= a.state_count())
        throw std::out_of_range("shortest_pair_word: state out of range");
    if (p == q) return Word{};

    const PairGraph graph(a);
    const int nodes = graph.node_count();
    const int k = graph.alphabet_size();

    // Forward BFS with letters in increasing order: first singleton found is
    // reached by the shortest lexicographically least word.
    struct Prev {
        int parent;
        std::int8_t letter;
    };
    std::vector<Prev> prev(nodes, Prev{-1, -2});  // -2 marks unvisited
    const int start = graph.index(p, q);
    prev[start] = Prev{-1, -1};

    std::deque<int> queue{start};
    while (!queue.empty()) {
        int node = queue.front();
        queue.pop_front();
        for (Letter x = 0; x < k; ++x) {
            int to = graph.step(node, x);
            if (prev[to].letter != -2) continue;
            prev[to] = Prev{node, static_cast<std::int8_t>(x)};
            if (graph.is_singleton(to)) {
                Word w;
                for (int cur = to; prev[cur].letter >= 0; cur = prev[cur].parent)
                    w.push_back(prev[cur].letter);
                std::reverse(w.begin(), w.end());
                return w;
            }
            queue.push_back(to);
        }
    }
    return std::nullopt;
}

std::optional<Word> shortest_sync_word_monotonic(const CompleteAutomaton& a,
                                                 const StateSet& set) {
    if (set.universe() != a.state_count())
        throw std::invalid_argument("shortest_sync_word_monotonic: universe mismatch");
    if (set.size() <= 1) return Word{};

    const int n = a.state_count();
    const SyncablePairs pairs = sync_pairs(a);

    std::optional<Word> best;
    for (State p = 0; p < n; ++p)
        for (State q = p + 1; q < n; ++q) {
            if (!pairs.contains(p, q)) continue;
            std::optional<Word> w = shortest_pair_word(a, p, q);
            if (!w) continue;  // unreachable given the pair check
            if (best && !word_less(*w, *best)) continue;
            if (image_set(a, set, *w).size() == 1) best = std::move(w);
        }
    if (best) return best;

    if (is_sync_set_monotonic(pairs, set))
        throw NotMonotonicEvidenceError(
            "shortest_sync_word_monotonic: every pair of the subset is "
            "synchronizable but no pair word synchronizes it; the automaton "
            "cannot be monotonic");
    return std::nullopt;
}

MaxSyncSet max_sync_set_monotonic(const CompleteAutomaton& a) {
    const int n = a.state_count();
    const SyncablePairs pairs = sync_pairs(a);

    MaxSyncSet best{StateSet::of(n, {0}), Word{}};
    for (State p = 0; p < n; ++p)
        for (State q = p + 1; q < n; ++q) {
            if (!pairs.contains(p, q)) continue;
            std::optional<Word> w = shortest_pair_word(a, p, q);
            if (!w) continue;
            const State target = apply_word(a, p, *w);
            StateSet collected(n);
            for (State s = 0; s < n; ++s)
                if (apply_word(a, s, *w) == target) collected.insert(s);
            if (collected.size() > best.set.size())
                best = MaxSyncSet{std::move(collected), std::move(*w)};
        }
    return best;
}

}  // namespace monosync
