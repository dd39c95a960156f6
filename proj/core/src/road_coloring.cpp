#include "monosync/road_coloring.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "monosync/errors.hpp"

namespace monosync {

Digraph::Digraph(int n_, int k_, std::vector<State> arcs_)
    : n(n_), k(k_), arcs(std::move(arcs_)) {
    if (n < 1 || k < 1) throw std::invalid_argument("digraph: need n >= 1, k >= 1");
    if (arcs.size() != static_cast<std::size_t>(n) * k)
        throw std::invalid_argument("digraph: arc table has wrong size");
    for (State to : arcs)
        if (to < 0 || to >= n)
            throw std::invalid_argument("digraph: arc target out of range");
}

Digraph parse_digraph(std::string_view text) {
    std::vector<std::pair<int, std::vector<std::string>>> lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line(text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos));
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream in(line);
        std::vector<std::string> toks;
        std::string tok;
        while (in >> tok) toks.push_back(tok);
        if (!toks.empty()) lines.emplace_back(line_no, std::move(toks));
    }
    if (lines.empty()) throw ParseError(1, "empty input");

    auto to_int = [](const std::string& tok, int line, const char* what) {
        int value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
        return value;
    };

    const auto& [hline, header] = lines[0];
    if (header.size() != 3 || header[0] != "digraph")
        throw ParseError(hline, "expected 'digraph <n> <k>'");
    int n = to_int(header[1], hline, "vertex count");
    int k = to_int(header[2], hline, "out-degree");
    if (n < 1 || k < 1) throw ParseError(hline, "need n >= 1 and k >= 1");
    if (lines.size() != static_cast<std::size_t>(n) + 1)
        throw ParseError(lines.back().first,
                         "expected exactly " + std::to_string(n) + " arc rows");

    std::vector<State> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * k);
    for (int v = 0; v < n; ++v) {
        const auto& [rline, row] = lines[v + 1];
        if (static_cast<int>(row.size()) != k)
            throw ParseError(rline, "row has " + std::to_string(row.size()) +
                                        " targets, expected " + std::to_string(k));
        for (const auto& tok : row) {
            int to = to_int(tok, rline, "vertex index");
            if (to < 0 || to >= n) throw ParseError(rline, "arc target out of range");
            arcs.push_back(to);
        }
    }
    return Digraph(n, k, std::move(arcs));
}

std::string serialize_digraph(const Digraph& g) {
    std::ostringstream out;
    out << "digraph " << g.n << ' ' << g.k << '\n';
    for (State v = 0; v < g.n; ++v) {
        for (int slot = 0; slot < g.k; ++slot) {
            if (slot) out << ' ';
            out << g.target(v, slot);
        }
        out << '\n';
    }
    return out.str();
}

bool is_strongly_connected(const Digraph& g) {
    auto reach_all = [&](bool reversed) {
        std::vector<std::vector<State>> adj(g.n);
        for (State v = 0; v < g.n; ++v)
            for (int slot = 0; slot < g.k; ++slot) {
                State to = g.target(v, slot);
                if (reversed)
                    adj[to].push_back(v);
                else
                    adj[v].push_back(to);
            }
        std::vector<char> seen(g.n, 0);
        std::vector<State> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            State u = stack.back();
            stack.pop_back();
            for (State v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
        }
        return count == g.n;
    };
    return reach_all(false) && reach_all(true);
}

PeriodPartition period_partition(const Digraph& g) {
    if (!is_strongly_connected(g))
        throw NotStronglyConnectedError("period_partition: digraph not strongly connected");

    // BFS depths from vertex 0; every arc (u, v) has depth(v) <= depth(u)+1,
    // and the gcd of the slacks depth(u)+1-depth(v) is the period.
    std::vector<int> depth(g.n, -1);
    depth[0] = 0;
    std::deque<State> queue{0};
    while (!queue.empty()) {
        State u = queue.front();
        queue.pop_front();
        for (int slot = 0; slot < g.k; ++slot) {
            State v = g.target(u, slot);
            if (depth[v] < 0) {
                depth[v] = depth[u] + 1;
                queue.push_back(v);
            }
        }
    }

    int period = 0;
    for (State u = 0; u < g.n; ++u)
        for (int slot = 0; slot < g.k; ++slot) {
            State v = g.target(u, slot);
            period = std::gcd(period, depth[u] + 1 - depth[v]);
        }
    // A strongly connected digraph has a cycle, so some arc has positive slack.
    if (period <= 0)
        throw std::logic_error("period_partition: no positive cycle slack");

    PeriodPartition out;
    out.period = period;
    out.class_of.resize(g.n);
    for (State v = 0; v < g.n; ++v) out.class_of[v] = depth[v] % period;
    return out;
}

bool subset_colorable(const Digraph& g, const StateSet& set) {
    if (set.universe() != g.n)
        throw std::invalid_argument("subset_colorable: universe mismatch");
    if (set.empty()) throw EmptySubsetError("subset_colorable: empty subset");
    const PeriodPartition part = period_partition(g);
    const auto members = set.to_vector();
    for (State v : members)
        if (part.class_of[v] != part.class_of[members[0]]) return false;
    return true;
}

CompleteAutomaton Coloring::induce(const Digraph& g) const {
    if (n != g.n || k != g.k)
        throw std::invalid_argument("Coloring::induce: shape mismatch");
    std::vector<State> delta(static_cast<std::size_t>(n) * k);
    for (State v = 0; v < n; ++v)
        for (Letter c = 0; c < k; ++c)
            delta[static_cast<std::size_t>(v) * k + c] =
                g.target(v, letter_slot[static_cast<std::size_t>(v) * k + c]);
    return CompleteAutomaton(n, k, std::move(delta));
}

std::optional<Coloring> oracle_coloring_search(const Digraph& g, const StateSet& set,
                                               const OracleBudget& budget) {
    if (set.universe() != g.n)
        throw std::invalid_argument("oracle_coloring_search: universe mismatch");
    if (set.empty()) throw EmptySubsetError("oracle_coloring_search: empty subset");

    // (k!)^n colorings; refuse upfront when that exceeds the budget.
    std::uint64_t factorial = 1;
    for (int i = 2; i <= g.k; ++i) factorial *= i;
    std::uint64_t total = 1;
    for (State v = 0; v < g.n; ++v) {
        if (total > budget.max_visited / factorial)
            throw BudgetExceededError(
                "oracle_coloring_search: (k!)^n exceeds the coloring budget");
        total *= factorial;
    }

    // All permutations of [0, k) in lexicographic order.
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> perm(g.k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    // Odometer over per-vertex permutation choices, vertex 0 most significant.
    std::vector<std::size_t> choice(g.n, 0);
    for (;;) {
        Coloring coloring{g.n, g.k, {}};
        coloring.letter_slot.reserve(static_cast<std::size_t>(g.n) * g.k);
        for (State v = 0; v < g.n; ++v)
            for (int c = 0; c < g.k; ++c)
                coloring.letter_slot.push_back(perms[choice[v]][c]);

        if (oracle_shortest_sync_word(coloring.induce(g), set, budget))
            return coloring;

        int v = g.n - 1;
        while (v >= 0 && ++choice[v] == perms.size()) {
            choice[v] = 0;
            --v;
        }
        if (v < 0) return std::nullopt;
    }
}

}  // namespace monosync
