#include "monosync/classify.hpp"

#include <algorithm>
#include <queue>
#include <vector>

#include "monosync/errors.hpp"

namespace monosync {

namespace {

// Shared view so the order logic is written once for both table kinds.
// entry() returns kUndefined for absent transitions.
struct TableView {
    int n;
    int k;
    const CompleteAutomaton* complete = nullptr;
    const PartialAutomaton* partial = nullptr;

    State entry(State q, Letter x) const {
        return complete ? complete->next(q, x) : partial->entry(q, x);
    }
};

TableView view_of(const CompleteAutomaton& a) {
    return {a.state_count(), a.alphabet_size(), &a, nullptr};
}
TableView view_of(const PartialAutomaton& a) {
    return {a.state_count(), a.alphabet_size(), nullptr, &a};
}

bool check_monotonic_impl(const TableView& a, const StateOrder& ord) {
    if (ord.size() != a.n)
        throw std::invalid_argument("check_monotonic: order size mismatch");
    for (Letter x = 0; x < a.k; ++x) {
        int last = -1;
        for (int pos = 0; pos < a.n; ++pos) {
            State to = a.entry(ord.at(pos), x);
            if (to == PartialAutomaton::kUndefined) continue;
            int to_pos = ord.position_of(to);
            if (to_pos < last) return false;
            last = to_pos;
        }
    }
    return true;
}

// Backtracking order search. States are placed left to right; placing u after
// prev adds, per letter, the requirement "image of the last defined
// predecessor <= image of u" as an edge of a precedence digraph. An edge
// a -> b means pos(a) <= pos(b); a cycle through two distinct states, or an
// edge from an unplaced state into a placed one, kills the branch.
class OrderSearch {
public:
    OrderSearch(const TableView& a, std::uint64_t budget)
        : a_(a), budget_(budget), pos_(a.n, -1), edges_(a.n), last_defined_(a.k, -1) {}

    std::optional<StateOrder> run() {
        order_.reserve(a_.n);
        if (place_next()) return StateOrder(order_);
        return std::nullopt;
    }

private:
    bool reaches(State from, State goal) const {
        if (from == goal) return true;
        std::vector<char> seen(a_.n, 0);
        std::vector<State> stack{from};
        seen[from] = 1;
        while (!stack.empty()) {
            State u = stack.back();
            stack.pop_back();
            for (State v : edges_[u]) {
                if (v == goal) return true;
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        return false;
    }

    // Returns false (and adds nothing) if the edge is immediately
    // contradictory. Appends to `added` otherwise.
    bool add_edge(State from, State to, std::vector<std::pair<State, State>>& added) {
        if (from == to) return true;
        if (pos_[from] >= 0 && pos_[to] >= 0) return pos_[from] <= pos_[to];
        if (pos_[from] < 0 && pos_[to] >= 0) return false;  // from would be placed later
        if (reaches(to, from)) return false;                // would force to <= from too
        edges_[from].push_back(to);
        added.emplace_back(from, to);
        return true;
    }

    bool placeable(State u) const {
        if (pos_[u] >= 0) return false;
        // every constraint v <= u must already have v placed
        for (State v = 0; v < a_.n; ++v) {
            if (pos_[v] >= 0) continue;
            for (State w : edges_[v])
                if (w == u) return false;
        }
        return true;
    }

    bool place_next() {
        const int depth = static_cast<int>(order_.size());
        if (depth == a_.n) return true;
        for (State u = 0; u < a_.n; ++u) {
            if (!placeable(u)) continue;
            if (++nodes_ > budget_)
                throw BudgetExceededError("find_monotonic_order: node budget of " +
                                          std::to_string(budget_) + " exceeded");

            std::vector<std::pair<State, State>> added;
            std::vector<std::pair<Letter, State>> saved_last;
            pos_[u] = depth;
            order_.push_back(u);

            bool ok = true;
            for (Letter x = 0; x < a_.k && ok; ++x) {
                State img = a_.entry(u, x);
                if (img == PartialAutomaton::kUndefined) continue;
                if (last_defined_[x] >= 0) ok = add_edge(last_defined_[x], img, added);
                if (ok) {
                    saved_last.emplace_back(x, last_defined_[x]);
                    last_defined_[x] = img;
                }
            }

            if (ok && place_next()) return true;

            for (auto it = saved_last.rbegin(); it != saved_last.rend(); ++it)
                last_defined_[it->first] = it->second;
            for (auto it = added.rbegin(); it != added.rend(); ++it)
                edges_[it->first].pop_back();
            order_.pop_back();
            pos_[u] = -1;
        }
        return false;
    }

    const TableView& a_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> pos_;
    std::vector<State> order_;
    std::vector<std::vector<State>> edges_;
    std::vector<State> last_defined_;  // per letter, image of last placed state
};

std::optional<StateOrder> find_order_impl(const TableView& a, std::uint64_t budget) {
    return OrderSearch(a, budget).run();
}

}  // namespace

bool check_monotonic(const CompleteAutomaton& a, const StateOrder& ord) {
    return check_monotonic_impl(view_of(a), ord);
}

bool check_monotonic(const PartialAutomaton& a, const StateOrder& ord) {
    return check_monotonic_impl(view_of(a), ord);
}

std::optional<StateOrder> find_monotonic_order(const CompleteAutomaton& a,
                                               std::uint64_t node_budget) {
    return find_order_impl(view_of(a), node_budget);
}

std::optional<StateOrder> find_monotonic_order(const PartialAutomaton& a,
                                               std::uint64_t node_budget) {
    return find_order_impl(view_of(a), node_budget);
}

std::optional<StateOrder> weak_acyclic_witness(const CompleteAutomaton& a) {
    const int n = a.state_count();
    const int k = a.alphabet_size();

    std::vector<std::vector<State>> out(n);
    std::vector<int> indegree(n, 0);
    for (State q = 0; q < n; ++q) {
        std::vector<State> targets;
        for (Letter x = 0; x < k; ++x) {
            State to = a.next(q, x);
            if (to != q) targets.push_back(to);
        }
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (State to : targets) ++indegree[to];
        out[q] = std::move(targets);
    }

    // Kahn with smallest-index selection for a deterministic witness.
    std::priority_queue<State, std::vector<State>, std::greater<>> ready;
    for (State q = 0; q < n; ++q)
        if (indegree[q] == 0) ready.push(q);

    std::vector<State> order;
    order.reserve(n);
    while (!ready.empty()) {
        State q = ready.top();
        ready.pop();
        order.push_back(q);
        for (State to : out[q])
            if (--indegree[to] == 0) ready.push(to);
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return StateOrder(std::move(order));
}

bool is_strongly_connected(const CompleteAutomaton& a) {
    const int n = a.state_count();
    const int k = a.alphabet_size();

    auto reach_all = [&](bool reversed) {
        std::vector<std::vector<State>> adj(n);
        for (State q = 0; q < n; ++q)
            for (Letter x = 0; x < k; ++x) {
                State to = a.next(q, x);
                if (reversed)
                    adj[to].push_back(q);
                else
                    adj[q].push_back(to);
            }
        std::vector<char> seen(n, 0);
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
        return count == n;
    };

    return reach_all(false) && reach_all(true);
}

}  // namespace monosync
