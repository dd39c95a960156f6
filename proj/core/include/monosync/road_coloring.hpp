#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monosync/automaton.hpp"
#include "monosync/sync_oracle.hpp"

namespace monosync {

/// Digraph with uniform out-degree k; parallel arcs and loops allowed.
/// Text format: line 1 'digraph <n> <k>', then n lines of k targets.
struct Digraph {
    int n = 0;
    int k = 0;
    std::vector<State> arcs;  // n*k targets, row per vertex

    Digraph() = default;
    Digraph(int n, int k, std::vector<State> arcs);

    State target(State v, int slot) const {
        return arcs[static_cast<std::size_t>(v) * k + slot];
    }
};

Digraph parse_digraph(std::string_view text);
std::string serialize_digraph(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

/// The unique partition V_1..V_l advanced by every arc, where l is the gcd of
/// all cycle lengths. Classes are normalized so vertex 0 is in class 0.
struct PeriodPartition {
    int period = 1;
    std::vector<int> class_of;
};

/// Throws NotStronglyConnectedError when g is not strongly connected.
PeriodPartition period_partition(const Digraph& g);

/// Decision criterion: some coloring of g synchronizes `set` iff all of
/// `set` lies in one period class.
bool subset_colorable(const Digraph& g, const StateSet& set);

/// Per-vertex bijection slot -> letter. letter_slot[v*k + c] is the out-arc
/// slot that letter c takes at vertex v.
struct Coloring {
    int n = 0;
    int k = 0;
    std::vector<int> letter_slot;

    CompleteAutomaton induce(const Digraph& g) const;
};

/// Exhaustive search over all (k!)^n colorings in lexicographic order of the
/// per-vertex letter->slot tables (vertex 0 most significant); returns the
/// first coloring whose induced automaton synchronizes `set`, checked by
/// oracle_shortest_sync_word, or nullopt. Unlike subset_colorable it needs no
/// structure of g, which is what makes it an independent check; the default
/// budget admits n <= 8, k <= 3.
std::optional<Coloring> oracle_coloring_search(const Digraph& g, const StateSet& set,
                                               const OracleBudget& budget = {});

}  // namespace monosync
