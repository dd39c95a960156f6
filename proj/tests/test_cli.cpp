// End-to-end checks of the command-line tool: exit codes, output contracts
// and the frozen JSON schema.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef MONOSYNC_CLI
#error "MONOSYNC_CLI must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(MONOSYNC_CLI) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer;
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    const int raw = pclose(pipe);
    return RunResult{WEXITSTATUS(raw), output};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / "monosync_cli_test") {
        fs::create_directories(path_);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path_, ec); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("generate, query, classify round trip") {
    TempDir dir;
    const std::string aut = dir.file("t2.aut");
    CHECK(run("gen ternary --m 2 -o " + aut).exit_code == 0);

    SUBCASE("shortest-word poly prints the documented word") {
        const auto result = run("shortest-word " + aut + " --subset 1 5 --method poly");
        CHECK(result.exit_code == 0);
        CHECK(result.output.find("1 0 1 0 1 2") != std::string::npos);
    }
    SUBCASE("poly and oracle agree") {
        const auto poly = run("shortest-word " + aut + " --subset 1 5 --method poly");
        const auto oracle = run("shortest-word " + aut + " --subset 1 5 --method oracle");
        CHECK(poly.output.find("length 6") != std::string::npos);
        CHECK(oracle.output.find("length 6") != std::string::npos);
    }
    SUBCASE("the subset: line in the file is the default") {
        CHECK(run("check-sync " + aut).exit_code == 0);
    }
    SUBCASE("singleton subsets are trivially synchronizing") {
        CHECK(run("check-sync " + aut + " --subset 3").exit_code == 0);
    }
    SUBCASE("unsynchronizable subset exits 1") {
        CHECK(run("check-sync " + aut + " --subset 0 6").exit_code == 1);
        CHECK(run("shortest-word " + aut + " --subset 0 6 --method oracle").exit_code == 1);
    }
    SUBCASE("classify reports the monotone order") {
        const auto result = run("classify " + aut);
        CHECK(result.exit_code == 0);
        CHECK(result.output.find("monotonic: yes") != std::string::npos);
    }
    SUBCASE("max-subset finds the middle interval") {
        const auto result = run("max-subset " + aut + " --json");
        CHECK(result.exit_code == 0);
        const auto parsed = nlohmann::json::parse(result.output);
        CHECK(parsed["result"]["size"] == 5);
    }
    SUBCASE("rank of the whole state set") {
        const auto result = run("rank " + aut + " --subset 0 1 2 3 4 5 6 --json");
        CHECK(result.exit_code == 0);
        const auto parsed = nlohmann::json::parse(result.output);
        CHECK(parsed["result"]["rank"] == 3);  // three sinks survive
    }
}

TEST_CASE("gen without -o streams a clean artifact to stdout") {
    // report lines go to stderr, so the stdout text parses as an automaton
    TempDir dir;
    const auto piped = run("gen binary --m 1");
    CHECK(piped.exit_code == 0);
    CHECK(piped.output.find("dfa 7 2") != std::string::npos);
    CHECK(piped.output.find("status:") == std::string::npos);

    const std::string file = dir.file("piped.aut");
    {
        std::ofstream out(file);
        out << piped.output;
    }
    CHECK(run("classify " + file).exit_code == 0);
}

TEST_CASE("intersect on the counter acceptors") {
    TempDir dir;
    CHECK(run("gen counter --k 3 --acceptors -o " + dir.file("cnt")).exit_code == 0);
    const auto result = run("intersect " + dir.file("cnt.1.aut") + " " +
                            dir.file("cnt.2.aut") + " " + dir.file("cnt.3.aut"));
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("length 7") != std::string::npos);
}

TEST_CASE("careful on the base-3 counter") {
    TempDir dir;
    const std::string aut = dir.file("c23.aut");
    CHECK(run("gen counter --k 2 --base 3 -o " + aut).exit_code == 0);
    const auto result = run("careful " + aut + " --json");
    CHECK(result.exit_code == 0);
    const auto parsed = nlohmann::json::parse(result.output);
    CHECK(parsed["witness"]["length"] == 9);
}

TEST_CASE("gen trim produces a partial automaton") {
    TempDir dir;
    const std::string aut = dir.file("t1.aut");
    const std::string trimmed = dir.file("t1.trim.aut");
    CHECK(run("gen ternary --m 1 -o " + aut).exit_code == 0);
    CHECK(run("gen trim " + aut + " -o " + trimmed).exit_code == 0);
    const auto result = run("careful " + trimmed);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("length 2") != std::string::npos);
}

TEST_CASE("reduce subcommands") {
    TempDir dir;
    const std::string cnf = dir.file("f.cnf");
    {
        std::ofstream out(cnf);
        out << "p cnf 2 2\n1 -2 0\n-1 2 0\n";
    }

    SUBCASE("sat-intersection --solve decodes a satisfying assignment") {
        const auto result = run("reduce sat-intersection " + cnf + " --solve --json");
        CHECK(result.exit_code == 0);
        const auto parsed = nlohmann::json::parse(result.output);
        const auto& assignment = parsed["result"]["assignment"];
        REQUIRE(assignment.size() == 2);
        CHECK(assignment[0] == assignment[1]);  // both clauses want x1 == x2
    }
    SUBCASE("max3sat-rank --solve reports rank m on a satisfiable formula") {
        const auto result = run("reduce max3sat-rank " + cnf + " --solve --json");
        CHECK(result.exit_code == 0);
        CHECK(nlohmann::json::parse(result.output)["result"]["rank"] == 2);
    }
    SUBCASE("sat-careful --solve exits 1 on a contradiction") {
        const std::string bad = dir.file("unsat.cnf");
        {
            std::ofstream out(bad);
            out << "p cnf 1 2\n1 0\n-1 0\n";
        }
        CHECK(run("reduce sat-careful " + bad + " --solve").exit_code == 1);
    }
    SUBCASE("written instance files parse back through other commands") {
        const std::string inst = dir.file("rank.aut");
        CHECK(run("reduce max3sat-rank " + cnf + " -o " + inst).exit_code == 0);
        CHECK(run("rank " + inst).exit_code == 0);  // subset: line is used
    }
}

TEST_CASE("roadcolor decision and search") {
    TempDir dir;
    const std::string dg = dir.file("g.dg");
    {
        std::ofstream out(dg);
        out << "digraph 4 2\n1 1\n2 0\n3 3\n0 2\n";
    }
    CHECK(run("roadcolor " + dg + " --subset 0 2").exit_code == 0);
    CHECK(run("roadcolor " + dg + " --subset 0 1").exit_code == 1);
    const auto result = run("roadcolor " + dg + " --subset 0 2 --search --json");
    const auto parsed = nlohmann::json::parse(result.output);
    CHECK(parsed["result"]["period"] == 2);
    CHECK(parsed["result"]["coloring"].is_string());
}

TEST_CASE("error and budget exit codes") {
    TempDir dir;
    SUBCASE("missing file is an error (2)") {
        CHECK(run("classify " + dir.file("missing.aut")).exit_code == 2);
    }
    SUBCASE("parse errors carry the line number") {
        const std::string bad = dir.file("bad.aut");
        {
            std::ofstream out(bad);
            out << "dfa 2 1\n0\n7\n";
        }
        const auto result = run("classify " + bad + " --json");
        CHECK(result.exit_code == 2);
        const auto parsed = nlohmann::json::parse(result.output);
        CHECK(parsed["status"] == "ERROR");
        CHECK(parsed["message"].get<std::string>().find("line 3") != std::string::npos);
    }
    SUBCASE("exhausted node budget exits 3") {
        const std::string aut = dir.file("t4.aut");
        CHECK(run("gen ternary --m 4 -o " + aut).exit_code == 0);
        CHECK(run("shortest-word " + aut + " --subset 1 9 --method oracle "
                  "--budget-nodes 2").exit_code == 3);
    }
    SUBCASE("usage errors exit 2") {
        CHECK(run("shortest-word").exit_code == 2);
        CHECK(run("gen nosuchfamily").exit_code == 2);
    }
}

TEST_CASE("json reports keep the frozen key set") {
    TempDir dir;
    const std::string aut = dir.file("t1.aut");
    CHECK(run("gen ternary --m 1 -o " + aut).exit_code == 0);
    const auto result = run("shortest-word " + aut + " --subset 1 3 --json");
    const auto parsed = nlohmann::json::parse(result.output);
    for (const char* key : {"command", "status", "witness", "result", "elapsed_ms", "budget"})
        CHECK(parsed.contains(key));
    CHECK(parsed["witness"]["letters"] == nlohmann::json::array({0, 2}));
    CHECK(parsed["witness"]["rendered"] == "0 2");
    CHECK(parsed["budget"].contains("nodes_used"));
    CHECK(parsed["budget"].contains("nodes_limit"));
}

TEST_CASE("identical invocations give identical reports modulo timing") {
    TempDir dir;
    const std::string aut = dir.file("t2.aut");
    CHECK(run("gen ternary --m 2 -o " + aut).exit_code == 0);
    auto strip_time = [](std::string json_text) {
        auto parsed = nlohmann::json::parse(json_text);
        parsed.erase("elapsed_ms");
        return parsed.dump();
    };
    const auto first = run("shortest-word " + aut + " --subset 1 5 --json");
    const auto second = run("shortest-word " + aut + " --subset 1 5 --json");
    CHECK(strip_time(first.output) == strip_time(second.output));

    // generator output is byte-identical across runs
    const std::string again = dir.file("t2b.aut");
    CHECK(run("gen ternary --m 2 -o " + again).exit_code == 0);
    std::ifstream a(aut), b(again);
    std::string text_a((std::istreambuf_iterator<char>(a)), {});
    std::string text_b((std::istreambuf_iterator<char>(b)), {});
    CHECK(text_a == text_b);
}

TEST_SUITE_END();
