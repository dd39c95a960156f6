#pragma once

#include <cstdint>
#include <random>

#include "monosync/automaton.hpp"
#include "monosync/road_coloring.hpp"

namespace monosync {

/// Unbiased draw from [0, bound) via rejection; mt19937_64 output is fully
/// specified by the standard, so sampled instances are reproducible across
/// platforms.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniformly random monotone map [0, n) -> [0, n) per letter (a uniformly
/// chosen multiset of n images, laid out in non-decreasing order), so the
/// identity order is always a monotone witness. Deterministic in the seed.
CompleteAutomaton sample_monotonic(int n, int k, std::uint64_t seed);

/// Uniformly random subset of the given size (selection sampling).
StateSet sample_subset(int n, int size, std::mt19937_64& rng);

/// Rejection-samples uniform-out-degree digraphs until one is strongly
/// connected.
Digraph sample_strongly_connected_digraph(int n, int k, std::mt19937_64& rng);

}  // namespace monosync
