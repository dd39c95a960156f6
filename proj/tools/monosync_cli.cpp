// monosync command-line front end: classification, synchronization queries,
// family generators, SAT reductions and road-coloring over the text formats
// described in the README.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "monosync/classify.hpp"
#include "monosync/errors.hpp"
#include "monosync/families.hpp"
#include "monosync/io.hpp"
#include "monosync/reductions.hpp"
#include "monosync/road_coloring.hpp"
#include "monosync/sampling.hpp"
#include "monosync/sync_oracle.hpp"
#include "monosync/sync_poly.hpp"

using json = nlohmann::json;
using namespace monosync;

namespace {

// ---------------------------------------------------------------------------
// run report

enum class Status { Ok, No, Error, Budget };

int exit_code(Status s) {
    switch (s) {
        case Status::Ok: return 0;
        case Status::No: return 1;
        case Status::Error: return 2;
        case Status::Budget: return 3;
    }
    return 2;
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Ok: return "OK";
        case Status::No: return "NO";
        case Status::Error: return "ERROR";
        case Status::Budget: return "BUDGET_EXCEEDED";
    }
    return "ERROR";
}

struct Report {
    Status status = Status::Ok;
    std::optional<Word> witness;
    std::vector<std::string> names;  // letter registry for rendering
    json result = json::object();
    std::string message;             // human-readable note / error text
    std::string artifact;            // generated file text destined for stdout
};

struct GlobalOptions {
    bool json_output = false;
    std::uint64_t seed = 12345;
    std::uint64_t budget_nodes = std::uint64_t{1} << 22;
    std::uint64_t budget_mem_mb = 0;  // 0 = derive nothing from memory

    OracleBudget oracle_budget() const {
        OracleBudget budget;
        budget.max_visited = budget_nodes;
        if (budget_mem_mb > 0) {
            // rough 48 bytes per visited set (hash node + parent link)
            const std::uint64_t by_mem = budget_mem_mb * 1024 * 1024 / 48;
            budget.max_visited = std::min(budget.max_visited, by_mem);
        }
        budget.max_states = 64;  // mask width; node budget is the real guard
        return budget;
    }
};

std::string command_echo(int argc, char** argv) {
    std::string echo;
    for (int i = 0; i < argc; ++i) {
        if (i) echo += ' ';
        echo += argv[i];
    }
    return echo;
}

int emit(const Report& report, const GlobalOptions& opts, const std::string& echo,
         double elapsed_ms, const OracleStats& stats) {
    if (opts.json_output) {
        json out;
        out["command"] = echo;
        out["status"] = status_name(report.status);
        if (report.witness) {
            out["witness"] = {{"letters", *report.witness},
                              {"rendered", render_word(*report.witness, report.names)},
                              {"length", report.witness->size()}};
        } else {
            out["witness"] = nullptr;
        }
        out["result"] = report.result;
        if (!report.artifact.empty()) out["result"]["text"] = report.artifact;
        out["elapsed_ms"] = elapsed_ms;
        out["budget"] = {{"nodes_used", stats.visited},
                         {"nodes_limit", opts.oracle_budget().max_visited}};
        if (!report.message.empty()) out["message"] = report.message;
        std::cout << out.dump(2) << '\n';
        return exit_code(report.status);
    }

    // When a command streams a generated file to stdout, the report moves to
    // stderr so redirection stays clean.
    std::ostream& side = report.artifact.empty() ? std::cout : std::cerr;
    if (!report.artifact.empty()) std::cout << report.artifact;

    side << "status: " << status_name(report.status) << '\n';
    if (!report.message.empty()) side << report.message << '\n';
    if (report.witness)
        side << "witness: " << render_word(*report.witness, report.names)
             << "   (length " << report.witness->size() << ")\n";
    if (!report.result.empty()) side << "result: " << report.result.dump() << '\n';
    std::cerr << "elapsed-ms: " << elapsed_ms << "  nodes: " << stats.visited << '/'
              << opts.oracle_budget().max_visited << '\n';
    return exit_code(report.status);
}

// ---------------------------------------------------------------------------
// input helpers

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

AutomatonFile load_automaton(const std::string& path) {
    return parse_automaton(slurp(path));
}

StateSet subset_from(const AutomatonFile& file, const std::vector<int>& flag,
                     const char* who) {
    if (!flag.empty()) {
        StateSet set(file.state_count());
        for (int q : flag) set.insert(q);
        return set;
    }
    if (file.subset) return *file.subset;
    throw std::invalid_argument(std::string(who) +
                                ": no --subset given and no subset: line in the file");
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

json order_json(const StateOrder& ord) { return json(ord.states()); }

// ---------------------------------------------------------------------------
// command payloads (each returns a Report; wrapping/timing handled in main)

Report cmd_classify(const std::string& path, const GlobalOptions& opts) {
    const AutomatonFile file = load_automaton(path);
    Report report;

    auto order_search = [&](const auto& machine) -> json {
        try {
            if (auto ord = find_monotonic_order(machine, opts.budget_nodes))
                return {{"status", "yes"}, {"order", order_json(*ord)}};
            return {{"status", "no"}};
        } catch (const BudgetExceededError&) {
            return {{"status", "budget-exceeded"}};
        }
    };

    if (file.is_complete()) {
        const auto& a = file.complete();
        report.result["monotonic"] = order_search(a);
        if (auto ord = weak_acyclic_witness(a))
            report.result["weakly_acyclic"] = {{"value", true}, {"order", order_json(*ord)}};
        else
            report.result["weakly_acyclic"] = {{"value", false}};
        report.result["strongly_connected"] = is_strongly_connected(a);
    } else {
        report.result["monotonic"] = order_search(file.partial());
        report.result["weakly_acyclic"] = nullptr;  // defined for complete automata
        report.result["strongly_connected"] = nullptr;
    }

    std::ostringstream text;
    const auto& mono = report.result["monotonic"];
    text << "monotonic: " << mono["status"].get<std::string>();
    if (mono.contains("order")) text << "  (order:" << mono["order"].dump() << ")";
    text << "\nweakly-acyclic: ";
    if (report.result["weakly_acyclic"].is_null())
        text << "n/a (partial automaton)";
    else
        text << (report.result["weakly_acyclic"]["value"].get<bool>() ? "yes" : "no");
    text << "\nstrongly-connected: ";
    if (report.result["strongly_connected"].is_null())
        text << "n/a (partial automaton)";
    else
        text << (report.result["strongly_connected"].get<bool>() ? "yes" : "no");
    report.message = text.str();
    return report;
}

Report cmd_check_sync(const std::string& path, const std::vector<int>& subset_flag) {
    const AutomatonFile file = load_automaton(path);
    if (!file.is_complete())
        throw std::invalid_argument("check-sync: needs a complete automaton");
    const StateSet set = subset_from(file, subset_flag, "check-sync");
    const bool ok = is_sync_set_monotonic(file.complete(), set);

    Report report;
    report.status = ok ? Status::Ok : Status::No;
    report.result["synchronizing"] = ok;
    report.result["subset"] = set.to_vector();
    report.message = ok ? "subset is synchronizing (pairwise criterion)"
                        : "subset is not synchronizing";
    return report;
}

Report cmd_shortest_word(const std::string& path, const std::vector<int>& subset_flag,
                         const std::string& method, const GlobalOptions& opts,
                         OracleStats& stats) {
    const AutomatonFile file = load_automaton(path);
    if (!file.is_complete())
        throw std::invalid_argument("shortest-word: needs a complete automaton");
    const StateSet set = subset_from(file, subset_flag, "shortest-word");

    std::optional<Word> word;
    if (method == "poly")
        word = shortest_sync_word_monotonic(file.complete(), set);
    else if (method == "oracle")
        word = oracle_shortest_sync_word(file.complete(), set, opts.oracle_budget(),
                                         &stats);
    else
        throw std::invalid_argument("shortest-word: --method must be poly or oracle");

    Report report;
    report.names = file.letter_names;
    report.result["method"] = method;
    report.result["subset"] = set.to_vector();
    if (word) {
        report.witness = *word;
        report.result["length"] = word->size();
    } else {
        report.status = Status::No;
        report.message = "subset is not synchronizing";
    }
    return report;
}

Report cmd_max_subset(const std::string& path) {
    const AutomatonFile file = load_automaton(path);
    if (!file.is_complete())
        throw std::invalid_argument("max-subset: needs a complete automaton");
    const MaxSyncSet best = max_sync_set_monotonic(file.complete());

    Report report;
    report.names = file.letter_names;
    report.witness = best.word;
    report.result["set"] = best.set.to_vector();
    report.result["size"] = best.set.size();
    return report;
}

Report cmd_rank(const std::string& path, const std::vector<int>& subset_flag,
                const GlobalOptions& opts, OracleStats& stats) {
    const AutomatonFile file = load_automaton(path);
    if (!file.is_complete())
        throw std::invalid_argument("rank: needs a complete automaton");
    const StateSet set = subset_from(file, subset_flag, "rank");
    const RankResult result = oracle_rank(file.complete(), set, opts.oracle_budget(), &stats);

    Report report;
    report.names = file.letter_names;
    report.witness = result.witness;
    report.result["rank"] = result.rank;
    report.result["subset"] = set.to_vector();
    return report;
}

Report cmd_careful(const std::string& path, const GlobalOptions& opts,
                   OracleStats& stats) {
    const AutomatonFile file = load_automaton(path);
    if (file.is_complete())
        throw std::invalid_argument("careful: needs a partial automaton (pdfa)");
    const auto word = oracle_careful_sync(file.partial(), opts.oracle_budget(), &stats);

    Report report;
    report.names = file.letter_names;
    if (word) {
        report.witness = *word;
        report.result["length"] = word->size();
    } else {
        report.status = Status::No;
        report.message = "not carefully synchronizing";
    }
    return report;
}

Report cmd_intersect(const std::vector<std::string>& paths, const GlobalOptions& opts,
                     OracleStats& stats) {
    std::vector<Acceptor> acceptors;
    std::vector<std::string> names;
    for (const auto& path : paths) {
        AutomatonFile file = load_automaton(path);
        if (names.empty()) names = file.letter_names;
        acceptors.push_back(file.acceptor());
    }
    const auto word = oracle_intersection(acceptors, opts.oracle_budget(), &stats);

    Report report;
    report.names = names;
    if (word) {
        report.witness = *word;
        report.result["length"] = word->size();
    } else {
        report.status = Status::No;
        report.message = "no common accepted word";
    }
    return report;
}

// gen ------------------------------------------------------------------------

std::string family_text(const FamilyInstance& fam, const std::string& title) {
    AutomatonFile file{fam.automaton};
    file.subset = fam.subset;
    file.order = StateOrder::identity(fam.automaton.state_count());
    file.letter_names = fam.letter_names;

    std::ostringstream comment;
    comment << title << '\n';
    comment << "states:";
    for (const auto& name : fam.state_names) comment << ' ' << name;
    if (!fam.witness.empty())
        comment << "\nwitness: " << render_word(fam.witness, fam.letter_names);
    return serialize_automaton(file, comment.str());
}

Report cmd_gen(const std::string& family, int m, int l, int k, bool acceptors,
               int base, const std::string& trim_path, const std::string& out_path,
               const GlobalOptions&) {
    Report report;
    std::string text;

    if (family == "ternary") {
        const auto fam = ternary_family(m);
        text = family_text(fam, "ternary subset-synchronization family, m = " +
                                    std::to_string(m));
        report.result = {{"states", fam.automaton.state_count()},
                         {"subset", fam.subset.to_vector()},
                         {"witness_length", fam.witness.size()}};
    } else if (family == "binary") {
        const auto fam = binary_family(m);
        text = family_text(fam, "binary subset-synchronization family, m = " +
                                    std::to_string(m));
        report.result = {{"states", fam.automaton.state_count()},
                         {"subset", fam.subset.to_vector()},
                         {"witness_length", fam.witness.size()}};
    } else if (family == "pairwise-gap") {
        const auto fam = pairwise_gap_family(l);
        text = family_text(fam, "pairwise-synchronizable gap family, l = " +
                                    std::to_string(l));
        report.result = {{"states", fam.automaton.state_count()},
                         {"subset", fam.subset.to_vector()}};
    } else if (family == "counter") {
        if (acceptors) {
            const auto counters = counter_acceptors(k);
            std::ostringstream all;
            for (int i = 0; i < k; ++i) {
                const auto& acc = counters.acceptors[i];
                AutomatonFile file{acc.automaton};
                file.initial = acc.initial;
                file.accepting = acc.accepting;
                file.letter_names = counters.letter_names;
                std::ostringstream comment;
                comment << "counter acceptor " << (i + 1) << " of " << k << "\nstates:";
                for (const auto& name : counters.state_names[i]) comment << ' ' << name;
                if (!out_path.empty()) {
                    write_output(serialize_automaton(file, comment.str()),
                                 out_path + "." + std::to_string(i + 1) + ".aut");
                } else {
                    all << serialize_automaton(file, comment.str());
                }
            }
            text = all.str();
            report.result = {{"acceptors", k}};
            if (!out_path.empty()) {
                report.message = "wrote " + out_path + ".1.aut .. " + out_path + "." +
                                 std::to_string(k) + ".aut";
                return report;
            }
        } else {
            const auto inst = counter_partial(k, base);
            AutomatonFile file{inst.automaton};
            file.order = StateOrder::identity(inst.automaton.state_count());
            file.letter_names = inst.letter_names;
            std::ostringstream comment;
            comment << "base-" << base << " counter gadget, k = " << k << "\nstates:";
            for (const auto& name : inst.state_names) comment << ' ' << name;
            text = serialize_automaton(file, comment.str());
            report.result = {{"states", inst.automaton.state_count()}, {"base", base}};
        }
    } else if (family == "trim") {
        const AutomatonFile file = load_automaton(trim_path);
        if (!file.is_complete())
            throw std::invalid_argument("gen trim: needs a complete automaton");
        const StateOrder ord =
            file.order ? *file.order : StateOrder::identity(file.state_count());
        const PartialAutomaton trimmed = trim_to_partial(file.complete(), ord);
        AutomatonFile out{trimmed};
        out.order = StateOrder::identity(trimmed.state_count());
        out.letter_names = file.letter_names;
        text = serialize_automaton(out, "trimmed: first/last state removed");
        report.result = {{"states", trimmed.state_count()}};
    } else {
        throw std::invalid_argument("gen: unknown family '" + family + "'");
    }

    if (out_path.empty()) {
        report.artifact = text;
    } else {
        write_output(text, out_path);
        report.message = "wrote " + out_path;
    }
    return report;
}

// reduce ----------------------------------------------------------------------

Report cmd_reduce(const std::string& kind, const std::string& cnf_path, bool solve,
                  const std::string& out_path, const GlobalOptions& opts,
                  OracleStats& stats) {
    const Cnf cnf = parse_dimacs(slurp(cnf_path));
    Report report;
    report.result["nvars"] = cnf.nvars;
    report.result["clauses"] = cnf.clause_count();

    auto attach_assignment = [&](const Word& word) {
        if (auto assignment = decode_assignment(word, cnf.nvars)) {
            json values = json::array();
            for (bool v : *assignment) values.push_back(v ? 1 : 0);
            report.result["assignment"] = values;
        } else {
            report.result["assignment"] = nullptr;
        }
    };

    if (kind == "sat-intersection") {
        const auto acceptors = sat_to_intersection(cnf);
        report.names = intersection_letter_names();
        if (solve) {
            const auto word = oracle_intersection(acceptors, opts.oracle_budget(), &stats);
            if (word) {
                report.witness = *word;
                attach_assignment(*word);
            } else {
                report.status = Status::No;
                report.message = "unsatisfiable: intersection empty";
            }
            return report;
        }
        std::ostringstream all;
        for (std::size_t j = 0; j < acceptors.size(); ++j) {
            AutomatonFile file{acceptors[j].automaton};
            file.initial = acceptors[j].initial;
            file.accepting = acceptors[j].accepting;
            file.letter_names = intersection_letter_names();
            const std::string comment =
                j + 1 < acceptors.size() ? "clause gadget " + std::to_string(j + 1)
                                         : "timer";
            if (!out_path.empty())
                write_output(serialize_automaton(file, comment),
                             out_path + "." + std::to_string(j + 1) + ".aut");
            else
                all << serialize_automaton(file, comment);
        }
        if (out_path.empty()) {
            report.artifact = all.str();
        } else {
            report.message = "wrote " + out_path + ".1.aut .. " + out_path + "." +
                             std::to_string(acceptors.size()) + ".aut";
        }
        report.result["acceptors"] = acceptors.size();
        return report;
    }

    if (kind == "max3sat-rank") {
        const auto inst = max3sat_to_rank(cnf);
        report.names = intersection_letter_names();
        if (solve) {
            const auto result =
                oracle_rank(inst.automaton, inst.subset, opts.oracle_budget(), &stats);
            report.witness = result.witness;
            report.result["rank"] = result.rank;
            attach_assignment(result.witness);
            return report;
        }
        AutomatonFile file{inst.automaton};
        file.subset = inst.subset;
        file.order = StateOrder::identity(inst.automaton.state_count());
        file.letter_names = intersection_letter_names();
        const std::string text = serialize_automaton(file, "rank-reduction instance");
        if (out_path.empty()) {
            report.artifact = text;
        } else {
            write_output(text, out_path);
            report.message = "wrote " + out_path;
        }
        report.result["states"] = inst.automaton.state_count();
        return report;
    }

    if (kind == "sat-careful") {
        const auto automaton = sat_to_careful(cnf);
        report.names = careful_letter_names();
        if (solve) {
            const auto word =
                oracle_careful_sync(automaton, opts.oracle_budget(), &stats);
            if (word) {
                report.witness = *word;
                attach_assignment(*word);
            } else {
                report.status = Status::No;
                report.message = "unsatisfiable: not carefully synchronizing";
            }
            return report;
        }
        AutomatonFile file{automaton};
        file.order = StateOrder::identity(automaton.state_count());
        file.letter_names = careful_letter_names();
        const std::string text =
            serialize_automaton(file, "careful-synchronization instance");
        if (out_path.empty()) {
            report.artifact = text;
        } else {
            write_output(text, out_path);
            report.message = "wrote " + out_path;
        }
        report.result["states"] = automaton.state_count();
        return report;
    }

    throw std::invalid_argument("reduce: unknown kind '" + kind + "'");
}

// roadcolor --------------------------------------------------------------------

Report cmd_roadcolor(const std::string& path, const std::vector<int>& subset_flag,
                     bool search, const GlobalOptions& opts) {
    const Digraph g = parse_digraph(slurp(path));
    if (subset_flag.empty())
        throw std::invalid_argument("roadcolor: --subset is required");
    StateSet set(g.n);
    for (int v : subset_flag) set.insert(v);

    const PeriodPartition part = period_partition(g);
    const bool colorable = subset_colorable(g, set);

    Report report;
    report.status = colorable ? Status::Ok : Status::No;
    report.result["period"] = part.period;
    report.result["classes"] = part.class_of;
    report.result["colorable"] = colorable;

    std::ostringstream text;
    text << "period: " << part.period << "\nclasses:";
    for (int c : part.class_of) text << ' ' << c;
    text << "\ncolorable: " << (colorable ? "yes" : "no");
    report.message = text.str();

    if (search) {
        const auto coloring = oracle_coloring_search(g, set, opts.oracle_budget());
        if (coloring) {
            const std::string induced = serialize_automaton(coloring->induce(g));
            report.result["coloring"] = induced;
            report.message += "\ncoloring found:\n" + induced;
        } else {
            report.result["coloring"] = nullptr;
            report.message += "\nno synchronizing coloring";
        }
    }
    return report;
}

// selftest ----------------------------------------------------------------------

Report cmd_selftest(const GlobalOptions& opts) {
    Report report;
    std::ostringstream log;
    int failures = 0;

    auto suite = [&](const std::string& name, bool ok, const std::string& detail) {
        log << (ok ? "[ok]   " : "[FAIL] ") << name << ": " << detail << '\n';
        if (!ok) ++failures;
    };

    {  // poly algorithms agree with the oracle on monotonic samples
        std::mt19937_64 rng(opts.seed);
        int checked = 0, disagreements = 0, length_mismatches = 0;
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 4 + static_cast<int>(uniform_below(rng, 7));
            const int k = 2 + static_cast<int>(uniform_below(rng, 2));
            const auto a = sample_monotonic(n, k, rng());
            for (int s = 0; s < 8; ++s) {
                const int size = 2 + static_cast<int>(uniform_below(rng, 4));
                if (size > n) continue;
                const StateSet set = sample_subset(n, size, rng);
                const auto oracle = oracle_shortest_sync_word(a, set);
                if (is_sync_set_monotonic(a, set) != oracle.has_value()) ++disagreements;
                const auto poly = shortest_sync_word_monotonic(a, set);
                if (poly.has_value() != oracle.has_value())
                    ++disagreements;
                else if (poly && poly->size() != oracle->size())
                    ++length_mismatches;
                ++checked;
            }
        }
        suite("poly-vs-oracle", disagreements == 0 && length_mismatches == 0,
              std::to_string(checked) + " subsets, " + std::to_string(disagreements) +
                  " disagreements, " + std::to_string(length_mismatches) +
                  " length mismatches");
    }

    {  // family exactness
        bool ok = true;
        for (int m : {1, 2, 3}) {
            const auto fam = ternary_family(m);
            const auto word = oracle_shortest_sync_word(fam.automaton, fam.subset);
            ok = ok && word && static_cast<int>(word->size()) == m * m + m;
        }
        for (int m : {1, 2}) {
            const auto fam = binary_family(m);
            const auto word = oracle_shortest_sync_word(fam.automaton, fam.subset);
            ok = ok && word && static_cast<int>(word->size()) >= m * m &&
                 static_cast<int>(word->size()) <= m * m + 2 * m &&
                 image_set(fam.automaton, fam.subset, fam.witness).size() == 1;
        }
        for (int k = 1; k <= 3; ++k) {
            const auto word = oracle_intersection(counter_acceptors(k).acceptors);
            ok = ok && word && static_cast<int>(word->size()) == (1 << k) - 1;
        }
        const auto careful = oracle_careful_sync(counter_partial(2, 3).automaton);
        ok = ok && careful && careful->size() >= 9;
        suite("families", ok, "ternary/binary/counter bounds");
    }

    {  // reduction equivalences on an exhaustive micro-sweep
        std::vector<std::vector<int>> clauses;
        for (int a : {1, -1, 2, -2}) {
            clauses.push_back({a});
            for (int b : {1, -1, 2, -2})
                if (std::abs(a) < std::abs(b)) clauses.push_back({a, b});
        }
        OracleBudget wide = opts.oracle_budget();
        bool ok = true;
        int count = 0;
        for (std::size_t i = 0; i < clauses.size(); ++i)
            for (std::size_t j = i; j < clauses.size(); ++j) {
                const Cnf cnf{2, {clauses[i], clauses[j]}};
                const int h = oracle_min_unsat(cnf);
                const auto common = oracle_intersection(sat_to_intersection(cnf));
                const auto rank_inst = max3sat_to_rank(cnf);
                const auto rank = oracle_rank(rank_inst.automaton, rank_inst.subset, wide);
                const auto careful = oracle_careful_sync(sat_to_careful(cnf), wide);
                ok = ok && common.has_value() == (h == 0) && rank.rank == 2 + h &&
                     careful.has_value() == (h == 0);
                ++count;
            }
        suite("reductions", ok, std::to_string(count) + " formulas");
    }

    {  // road coloring criterion vs exhaustive search
        std::mt19937_64 rng(opts.seed + 1);
        bool ok = true;
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 2 + static_cast<int>(uniform_below(rng, 4));
            const Digraph g = sample_strongly_connected_digraph(n, 2, rng);
            const StateSet set =
                sample_subset(n, 1 + static_cast<int>(uniform_below(rng, n)), rng);
            if (subset_colorable(g, set) != oracle_coloring_search(g, set).has_value())
                ok = false;
            const auto part = period_partition(g);
            for (State v = 0; v < g.n && ok; ++v)
                for (int slot = 0; slot < g.k; ++slot)
                    if (part.class_of[g.target(v, slot)] !=
                        (part.class_of[v] + 1) % part.period)
                        ok = false;
        }
        suite("road-coloring", ok, "30 random digraphs");
    }

    report.message = log.str() + (failures == 0 ? "selftest passed" : "selftest FAILED");
    report.status = failures == 0 ? Status::Ok : Status::Error;
    report.result["failures"] = failures;
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subset synchronization toolkit for deterministic finite automata"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_flag("--json", opts.json_output, "machine-readable output");
    app.add_option("--seed", opts.seed, "seed for sampled instances (selftest)");
    app.add_option("--budget-nodes", opts.budget_nodes,
                   "search-node budget for the exact oracles");
    app.add_option("--budget-mem", opts.budget_mem_mb,
                   "approximate memory budget for the oracles, in MiB");

    std::string file_arg, method = "poly", out_path, gen_family, reduce_kind, trim_path;
    std::vector<std::string> file_args;
    std::vector<int> subset_flag;
    int gen_m = 1, gen_l = 1, gen_k = 1, gen_base = 3;
    bool gen_acceptors = false, solve = false, search = false;

    auto* classify_cmd = app.add_subcommand("classify", "structural class flags");
    classify_cmd->add_option("file", file_arg)->required();

    auto* check_cmd =
        app.add_subcommand("check-sync", "is the subset synchronizing (pair criterion)");
    check_cmd->add_option("file", file_arg)->required();
    check_cmd->add_option("--subset", subset_flag, "state indices");

    auto* shortest_cmd =
        app.add_subcommand("shortest-word", "shortest word synchronizing the subset");
    shortest_cmd->add_option("file", file_arg)->required();
    shortest_cmd->add_option("--subset", subset_flag, "state indices");
    shortest_cmd->add_option("--method", method, "poly|oracle")
        ->check(CLI::IsMember({"poly", "oracle"}));

    auto* max_cmd = app.add_subcommand("max-subset", "largest synchronizing subset");
    max_cmd->add_option("file", file_arg)->required();

    auto* rank_cmd = app.add_subcommand("rank", "exact rank of the subset");
    rank_cmd->add_option("file", file_arg)->required();
    rank_cmd->add_option("--subset", subset_flag, "state indices");

    auto* careful_cmd =
        app.add_subcommand("careful", "shortest carefully synchronizing word");
    careful_cmd->add_option("file", file_arg)->required();

    auto* intersect_cmd =
        app.add_subcommand("intersect", "shortest word accepted by all acceptors");
    intersect_cmd->add_option("files", file_args)->required()->expected(-1);

    auto* gen_cmd = app.add_subcommand("gen", "generate an extremal family instance");
    gen_cmd->add_option("family", gen_family, "ternary|binary|pairwise-gap|counter|trim")
        ->required();
    gen_cmd->add_option("--m", gen_m, "family size parameter");
    gen_cmd->add_option("--l", gen_l, "pairwise-gap parameter (2^l sources)");
    gen_cmd->add_option("--k", gen_k, "counter digits");
    gen_cmd->add_flag("--acceptors", gen_acceptors, "emit the acceptor family");
    bool gen_partial = false;  // the default when --acceptors is absent
    gen_cmd->add_flag("--partial", gen_partial, "emit the partial counter gadget");
    gen_cmd->add_option("--base", gen_base, "counter base (2 or 3)");
    gen_cmd->add_option("input", trim_path, "input automaton (trim only)");
    gen_cmd->add_option("-o,--output", out_path, "output file (or prefix)");

    auto* reduce_cmd = app.add_subcommand("reduce", "CNF reductions");
    reduce_cmd->add_option("kind", reduce_kind, "sat-intersection|max3sat-rank|sat-careful")
        ->required();
    reduce_cmd->add_option("cnf", file_arg, "DIMACS CNF file")->required();
    reduce_cmd->add_flag("--solve", solve, "run the matching oracle");
    reduce_cmd->add_option("-o,--output", out_path, "output file (or prefix)");

    auto* road_cmd = app.add_subcommand("roadcolor", "subset road-coloring feasibility");
    road_cmd->add_option("file", file_arg)->required();
    road_cmd->add_option("--subset", subset_flag, "vertex indices");
    road_cmd->add_flag("--search", search, "exhaustive search for a witness coloring");

    app.add_subcommand("selftest", "run the built-in property suite");

    // accept the global flags in any position, including after the subcommand
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (gen_partial && gen_acceptors) {
        std::cerr << "gen counter: --acceptors and --partial are exclusive\n";
        return 2;
    }

    const std::string echo = command_echo(argc, argv);
    OracleStats stats;
    Report report;
    const auto start = std::chrono::steady_clock::now();

    try {
        if (classify_cmd->parsed()) {
            report = cmd_classify(file_arg, opts);
        } else if (check_cmd->parsed()) {
            report = cmd_check_sync(file_arg, subset_flag);
        } else if (shortest_cmd->parsed()) {
            report = cmd_shortest_word(file_arg, subset_flag, method, opts, stats);
        } else if (max_cmd->parsed()) {
            report = cmd_max_subset(file_arg);
        } else if (rank_cmd->parsed()) {
            report = cmd_rank(file_arg, subset_flag, opts, stats);
        } else if (careful_cmd->parsed()) {
            report = cmd_careful(file_arg, opts, stats);
        } else if (intersect_cmd->parsed()) {
            report = cmd_intersect(file_args, opts, stats);
        } else if (gen_cmd->parsed()) {
            report = cmd_gen(gen_family, gen_m, gen_l, gen_k, gen_acceptors, gen_base,
                             trim_path, out_path, opts);
        } else if (reduce_cmd->parsed()) {
            report = cmd_reduce(reduce_kind, file_arg, solve, out_path, opts, stats);
        } else if (road_cmd->parsed()) {
            report = cmd_roadcolor(file_arg, subset_flag, search, opts);
        } else {
            report = cmd_selftest(opts);
        }
    } catch (const BudgetExceededError& e) {
        report = Report{};
        report.status = Status::Budget;
        report.message = e.what();
    } catch (const std::exception& e) {
        report = Report{};
        report.status = Status::Error;
        report.message = e.what();
    }

    const auto end = std::chrono::steady_clock::now();
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(end - start).count();
    return emit(report, opts, echo, elapsed_ms, stats);
}
