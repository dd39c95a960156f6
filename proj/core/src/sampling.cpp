#include "monosync/sampling.hpp"

#include <stdexcept>

namespace monosync {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

namespace {

// Uniform size-`count` combination from [0, pool) in ascending order
// (selection sampling: each candidate kept with probability need/left).
std::vector<int> sample_combination(int pool, int count, std::mt19937_64& rng) {
    std::vector<int> out;
    out.reserve(count);
    int need = count;
    for (int candidate = 0; candidate < pool && need > 0; ++candidate) {
        if (uniform_below(rng, pool - candidate) < static_cast<std::uint64_t>(need)) {
            out.push_back(candidate);
            --need;
        }
    }
    return out;
}

}  // namespace

CompleteAutomaton sample_monotonic(int n, int k, std::uint64_t seed) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("sample_monotonic: need n >= 1, k >= 1");
    std::mt19937_64 rng(seed);
    std::vector<State> delta(static_cast<std::size_t>(n) * k);
    for (Letter x = 0; x < k; ++x) {
        // A multiset of n values from [0, n) corresponds to a combination of
        // n values from [0, 2n-1): subtract the index.
        std::vector<int> combo = sample_combination(2 * n - 1, n, rng);
        for (int i = 0; i < n; ++i)
            delta[static_cast<std::size_t>(i) * k + x] = combo[i] - i;
    }
    return CompleteAutomaton(n, k, std::move(delta));
}

StateSet sample_subset(int n, int size, std::mt19937_64& rng) {
    if (size < 0 || size > n)
        throw std::invalid_argument("sample_subset: size out of range");
    StateSet set(n);
    for (int q : sample_combination(n, size, rng)) set.insert(q);
    return set;
}

Digraph sample_strongly_connected_digraph(int n, int k, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<State> arcs(static_cast<std::size_t>(n) * k);
        for (auto& to : arcs) to = static_cast<State>(uniform_below(rng, n));
        Digraph g(n, k, std::move(arcs));
        if (is_strongly_connected(g)) return g;
    }
    throw std::runtime_error(
        "sample_strongly_connected_digraph: rejection sampling gave up");
}

}  // namespace monosync
