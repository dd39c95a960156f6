#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace monosync {

/// CNF formula; literals are signed 1-based variable indices (+i for x_i,
/// -i for its negation). Tautological clauses are allowed, empty clauses are
/// rejected on construction/parse.
struct Cnf {
    int nvars = 0;
    std::vector<std::vector<int>> clauses;

    int clause_count() const { return static_cast<int>(clauses.size()); }

    void validate() const;
};

/// DIMACS CNF: 'c' comment lines, a 'p cnf <nvars> <nclauses>' header, then
/// zero-terminated clauses.
Cnf parse_dimacs(std::string_view text);

std::string serialize_dimacs(const Cnf& cnf);

bool clause_satisfied(const std::vector<int>& clause, const std::vector<bool>& assignment);

bool satisfies(const Cnf& cnf, const std::vector<bool>& assignment);

int count_unsat(const Cnf& cnf, const std::vector<bool>& assignment);

}  // namespace monosync
