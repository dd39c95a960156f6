#pragma once

#include <cstdint>
#include <optional>

#include "monosync/automaton.hpp"

namespace monosync {

/// True iff every letter preserves the given order: for states p <= q (in
/// ord) with both images defined, delta(p, x) <= delta(q, x). Implemented as
/// the equivalent linear scan: per letter, the defined images read in ord
/// order must be non-decreasing.
bool check_monotonic(const CompleteAutomaton& a, const StateOrder& ord);
bool check_monotonic(const PartialAutomaton& a, const StateOrder& ord);

inline constexpr std::uint64_t kDefaultOrderSearchBudget = 10'000'000;

/// Exact backtracking search for an order passing check_monotonic.
/// Returns nullopt when no such order exists; throws BudgetExceededError once
/// the search has tried more than `node_budget` placements (recognition is
/// NP-complete, so the budget makes failure explicit).
std::optional<StateOrder> find_monotonic_order(
    const CompleteAutomaton& a, std::uint64_t node_budget = kDefaultOrderSearchBudget);
std::optional<StateOrder> find_monotonic_order(
    const PartialAutomaton& a, std::uint64_t node_budget = kDefaultOrderSearchBudget);

/// Topological witness order for weak acyclicity: an order q_1, ..., q_n with
/// delta(q_i, x) = q_j implying i <= j. nullopt iff the underlying digraph
/// (self-loops removed) has a cycle.
std::optional<StateOrder> weak_acyclic_witness(const CompleteAutomaton& a);

inline bool is_weakly_acyclic(const CompleteAutomaton& a) {
    return weak_acyclic_witness(a).has_value();
}

bool is_strongly_connected(const CompleteAutomaton& a);

}  // namespace monosync
