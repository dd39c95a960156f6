#include "monosync/io.hpp"

#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "monosync/errors.hpp"

namespace monosync {

int AutomatonFile::state_count() const {
    return is_complete() ? complete().state_count() : partial().state_count();
}

int AutomatonFile::alphabet_size() const {
    return is_complete() ? complete().alphabet_size() : partial().alphabet_size();
}

Acceptor AutomatonFile::acceptor() const {
    if (!is_complete())
        throw std::invalid_argument("acceptor: automaton is partial");
    if (!initial || !accepting)
        throw std::invalid_argument("acceptor: missing initial: or accepting: line");
    return Acceptor{complete(), *initial, *accepting};
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start) out.emplace_back(line.substr(start, i - start));
    }
    return out;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

State parse_target(const std::string& tok, int n, bool partial, int line_no) {
    if (tok == "-") {
        if (!partial)
            throw ParseError(line_no, "undefined entry '-' in a complete automaton");
        return PartialAutomaton::kUndefined;
    }
    int value = parse_int(tok, line_no, "state index");
    if (value < 0 || value >= n)
        throw ParseError(line_no, "target state " + std::to_string(value) +
                                      " outside [0, " + std::to_string(n) + ")");
    return value;
}

StateSet parse_state_list(const std::vector<std::string>& toks, std::size_t from,
                          int n, int line_no) {
    StateSet set(n);
    for (std::size_t i = from; i < toks.size(); ++i) {
        int q = parse_int(toks[i], line_no, "state index");
        if (q < 0 || q >= n)
            throw ParseError(line_no, "state " + std::to_string(q) +
                                          " outside [0, " + std::to_string(n) + ")");
        set.insert(q);
    }
    return set;
}

}  // namespace

AutomatonFile parse_automaton(std::string_view text) {
    // Strip comments, keep (line number, tokens) for non-empty lines.
    std::vector<std::pair<int, std::vector<std::string>>> lines;
    {
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t eol = text.find('\n', pos);
            std::string_view line = text.substr(
                pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            auto toks = tokenize(line);
            if (!toks.empty()) lines.emplace_back(line_no, std::move(toks));
            if (eol == std::string_view::npos) break;
            pos = eol + 1;
        }
    }

    if (lines.empty()) throw ParseError(1, "empty input");

    const auto& [header_line, header] = lines.front();
    bool is_partial;
    if (header[0] == "dfa")
        is_partial = false;
    else if (header[0] == "pdfa")
        is_partial = true;
    else
        throw ParseError(header_line, "expected 'dfa <n> <k>' or 'pdfa <n> <k>'");
    if (header.size() != 3)
        throw ParseError(header_line, "header needs exactly <n> and <k>");
    int n = parse_int(header[1], header_line, "state count");
    int k = parse_int(header[2], header_line, "alphabet size");
    if (n < 1 || k < 1) throw ParseError(header_line, "need n >= 1 and k >= 1");

    if (lines.size() < static_cast<std::size_t>(n) + 1)
        throw ParseError(lines.back().first, "expected " + std::to_string(n) +
                                                 " transition rows");

    std::vector<State> delta;
    delta.reserve(static_cast<std::size_t>(n) * k);
    for (int q = 0; q < n; ++q) {
        const auto& [line_no, toks] = lines[q + 1];
        if (static_cast<int>(toks.size()) != k)
            throw ParseError(line_no, "row has " + std::to_string(toks.size()) +
                                          " entries, expected " + std::to_string(k));
        for (const auto& tok : toks)
            delta.push_back(parse_target(tok, n, is_partial, line_no));
    }

    AutomatonFile file =
        is_partial ? AutomatonFile{PartialAutomaton(n, k, std::move(delta))}
                   : AutomatonFile{CompleteAutomaton(n, k, std::move(delta))};

    for (std::size_t i = n + 1; i < lines.size(); ++i) {
        const auto& [line_no, toks] = lines[i];
        const std::string& key = toks[0];
        if (key == "subset:") {
            if (file.subset) throw ParseError(line_no, "duplicate subset: line");
            file.subset = parse_state_list(toks, 1, n, line_no);
        } else if (key == "initial:") {
            if (file.initial) throw ParseError(line_no, "duplicate initial: line");
            if (toks.size() != 2)
                throw ParseError(line_no, "initial: needs exactly one state");
            int q = parse_int(toks[1], line_no, "state index");
            if (q < 0 || q >= n) throw ParseError(line_no, "initial state out of range");
            file.initial = q;
        } else if (key == "accepting:") {
            if (file.accepting) throw ParseError(line_no, "duplicate accepting: line");
            file.accepting = parse_state_list(toks, 1, n, line_no);
        } else if (key == "order:") {
            if (file.order) throw ParseError(line_no, "duplicate order: line");
            if (static_cast<int>(toks.size()) != n + 1)
                throw ParseError(line_no, "order: needs exactly n states");
            std::vector<State> perm;
            for (std::size_t j = 1; j < toks.size(); ++j)
                perm.push_back(parse_int(toks[j], line_no, "state index"));
            try {
                file.order = StateOrder(std::move(perm));
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, e.what());
            }
        } else if (key == "names:") {
            if (!file.letter_names.empty())
                throw ParseError(line_no, "duplicate names: line");
            if (static_cast<int>(toks.size()) != k + 1)
                throw ParseError(line_no, "names: needs exactly k letter names");
            file.letter_names.assign(toks.begin() + 1, toks.end());
        } else {
            throw ParseError(line_no, "unknown directive '" + key + "'");
        }
    }
    return file;
}

namespace {

void serialize_table(std::ostringstream& out, int n, int k,
                     const std::function<State(State, Letter)>& entry,
                     bool is_partial) {
    out << (is_partial ? "pdfa " : "dfa ") << n << ' ' << k << '\n';
    for (State q = 0; q < n; ++q) {
        for (Letter x = 0; x < k; ++x) {
            if (x) out << ' ';
            State to = entry(q, x);
            if (to == PartialAutomaton::kUndefined)
                out << '-';
            else
                out << to;
        }
        out << '\n';
    }
}

}  // namespace

std::string serialize_automaton(const AutomatonFile& file, const std::string& comment) {
    std::ostringstream out;
    if (!comment.empty()) {
        std::istringstream in(comment);
        std::string line;
        while (std::getline(in, line)) out << "# " << line << '\n';
    }
    const int n = file.state_count();
    const int k = file.alphabet_size();
    if (file.is_complete()) {
        const auto& a = file.complete();
        serialize_table(out, n, k, [&](State q, Letter x) { return a.next(q, x); },
                        false);
    } else {
        const auto& a = file.partial();
        serialize_table(out, n, k, [&](State q, Letter x) { return a.entry(q, x); },
                        true);
    }
    if (file.subset) {
        out << "subset:";
        for (State q : file.subset->to_vector()) out << ' ' << q;
        out << '\n';
    }
    if (file.initial) out << "initial: " << *file.initial << '\n';
    if (file.accepting) {
        out << "accepting:";
        for (State q : file.accepting->to_vector()) out << ' ' << q;
        out << '\n';
    }
    if (file.order) {
        out << "order:";
        for (State q : file.order->states()) out << ' ' << q;
        out << '\n';
    }
    if (!file.letter_names.empty()) {
        out << "names:";
        for (const auto& name : file.letter_names) out << ' ' << name;
        out << '\n';
    }
    return out.str();
}

std::string serialize_automaton(const CompleteAutomaton& a) {
    return serialize_automaton(AutomatonFile{a});
}

std::string serialize_automaton(const PartialAutomaton& a) {
    return serialize_automaton(AutomatonFile{a});
}

std::string render_word(const Word& w, const std::vector<std::string>& names) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out << ' ';
        if (w[i] >= 0 && w[i] < static_cast<int>(names.size()))
            out << names[w[i]];
        else
            out << w[i];
    }
    return out.str();
}

}  // namespace monosync
