#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qdesk {

// Conjunctive normal form over num_vars variables. Literals are signed
// 1-based variable indices; every clause is non-empty.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

struct DimacsError : std::runtime_error {
    DimacsError(int line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}

    int line;
};

// Strict DIMACS CNF: `c` comments, one `p cnf V C` header, 0-terminated
// clauses. Errors carry the offending line number.
CnfFormula parse_dimacs(std::string_view text);

// Assignments pack variable 1 into the most significant of num_vars bits,
// matching the register convention of the compiled circuits.
inline bool assignment_bit(const CnfFormula& f, std::uint64_t assignment, int var) {
    return (assignment >> (f.num_vars - var)) & 1;
}

bool assignment_satisfies(const CnfFormula& f, std::uint64_t assignment);

// Exhaustive enumeration of satisfying assignments, ascending. The test
// oracle for the compiler, and the finder for single-solution instances.
std::vector<std::uint64_t> brute_force_sat(const CnfFormula& f);

} // namespace qdesk
