#include "monosync/cnf.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "monosync/errors.hpp"

namespace monosync {

void Cnf::validate() const {
    if (nvars < 0) throw std::invalid_argument("cnf: negative variable count");
    for (const auto& clause : clauses) {
        if (clause.empty())
            throw std::invalid_argument("cnf: empty clause");
        for (int lit : clause) {
            int var = std::abs(lit);
            if (lit == 0 || var > nvars)
                throw std::invalid_argument("cnf: literal " + std::to_string(lit) +
                                            " out of range for " +
                                            std::to_string(nvars) + " variables");
        }
    }
}

Cnf parse_dimacs(std::string_view text) {
    Cnf cnf;
    int declared_clauses = -1;
    std::vector<int> current;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line(text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos));
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        std::istringstream in(line);
        std::string tok;
        if (!(in >> tok)) continue;
        if (tok == "c" || tok[0] == 'c') continue;
        if (tok == "%") break;  // SATLIB-style trailer
        if (tok == "p") {
            if (declared_clauses >= 0) throw ParseError(line_no, "duplicate p header");
            std::string fmt;
            if (!(in >> fmt >> cnf.nvars >> declared_clauses) || fmt != "cnf")
                throw ParseError(line_no, "expected 'p cnf <nvars> <nclauses>'");
            if (cnf.nvars < 0 || declared_clauses < 0)
                throw ParseError(line_no, "negative counts in p header");
            continue;
        }
        if (declared_clauses < 0)
            throw ParseError(line_no, "clause before 'p cnf' header");

        // literal tokens; 0 terminates a clause
        in.clear();
        in.str(line);
        int lit;
        while (in >> lit) {
            if (lit == 0) {
                if (current.empty())
                    throw ParseError(line_no, "empty clause");
                cnf.clauses.push_back(current);
                current.clear();
            } else {
                if (std::abs(lit) > cnf.nvars)
                    throw ParseError(line_no, "literal " + std::to_string(lit) +
                                                  " exceeds declared variable count");
                current.push_back(lit);
            }
        }
        if (!in.eof()) throw ParseError(line_no, "malformed literal");
    }

    if (!current.empty())
        throw ParseError(line_no, "clause not terminated by 0");
    if (declared_clauses < 0) throw ParseError(line_no, "missing p header");
    if (cnf.clause_count() != declared_clauses)
        throw ParseError(line_no, "found " + std::to_string(cnf.clause_count()) +
                                      " clauses, header declared " +
                                      std::to_string(declared_clauses));
    cnf.validate();
    return cnf;
}

std::string serialize_dimacs(const Cnf& cnf) {
    std::ostringstream out;
    out << "p cnf " << cnf.nvars << ' ' << cnf.clause_count() << '\n';
    for (const auto& clause : cnf.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

bool clause_satisfied(const std::vector<int>& clause, const std::vector<bool>& assignment) {
    for (int lit : clause) {
        int var = std::abs(lit);
        if (var < 1 || var > static_cast<int>(assignment.size()))
            throw std::out_of_range("clause_satisfied: variable out of range");
        if (assignment[var - 1] == (lit > 0)) return true;
    }
    return false;
}

bool satisfies(const Cnf& cnf, const std::vector<bool>& assignment) {
    return count_unsat(cnf, assignment) == 0;
}

int count_unsat(const Cnf& cnf, const std::vector<bool>& assignment) {
    int unsat = 0;
    for (const auto& clause : cnf.clauses)
        if (!clause_satisfied(clause, assignment)) ++unsat;
    return unsat;
}

}  // namespace monosync
