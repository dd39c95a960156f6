#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "monosync/automaton.hpp"

namespace monosync {

/// Parsed contents of an automaton text file.
///
/// Format (line-oriented, UTF-8, '#' starts a comment):
///   line 1:        dfa <n> <k>   |   pdfa <n> <k>
///   lines 2..n+1:  k whitespace-separated entries, each a target state
///                  index or '-' (undefined, pdfa only)
///   optional trailing lines, in any order:
///     subset: i j k ...
///     initial: i
///     accepting: i j ...
///     order: p_0 ... p_{n-1}
///     names: <k letter names>
struct AutomatonFile {
    std::variant<CompleteAutomaton, PartialAutomaton> machine;

    AutomatonFile(CompleteAutomaton a) : machine(std::move(a)) {}
    AutomatonFile(PartialAutomaton a) : machine(std::move(a)) {}

    std::optional<StateSet> subset;
    std::optional<State> initial;
    std::optional<StateSet> accepting;
    std::optional<StateOrder> order;
    std::vector<std::string> letter_names;  // empty when no registry

    bool is_complete() const {
        return std::holds_alternative<CompleteAutomaton>(machine);
    }
    const CompleteAutomaton& complete() const {
        return std::get<CompleteAutomaton>(machine);
    }
    const PartialAutomaton& partial() const {
        return std::get<PartialAutomaton>(machine);
    }

    int state_count() const;
    int alphabet_size() const;

    /// The acceptor view; throws if the file lacks initial/accepting lines or
    /// holds a partial automaton.
    Acceptor acceptor() const;
};

/// Throws ParseError with a 1-based line number on malformed input.
AutomatonFile parse_automaton(std::string_view text);

/// Inverse of parse_automaton: parse(serialize(f)) reproduces f exactly.
/// `comment`, when non-empty, is emitted as leading '#' lines (parse drops it).
std::string serialize_automaton(const AutomatonFile& file,
                                const std::string& comment = "");

std::string serialize_automaton(const CompleteAutomaton& a);
std::string serialize_automaton(const PartialAutomaton& a);

/// Space-separated letter names when a registry is given, else indices.
std::string render_word(const Word& w, const std::vector<std::string>& names = {});

}  // namespace monosync
