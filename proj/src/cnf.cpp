#include "qdesk/cnf.hpp"

#include <charconv>
#include <cstdlib>

namespace qdesk {

namespace {

struct Token {
    std::string_view text;
    int line;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    int line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == 'c' && (i == 0 || text[i - 1] == '\n')) {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' &&
               text[i] != '\n')
            ++i;
        tokens.push_back({text.substr(start, i - start), line});
    }
    return tokens;
}

int parse_int(const Token& t) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
        throw DimacsError(t.line, "expected an integer, got '" + std::string(t.text) + "'");
    return value;
}

} // namespace

CnfFormula parse_dimacs(std::string_view text) {
    const auto tokens = tokenize(text);
    std::size_t pos = 0;

    if (pos >= tokens.size() || tokens[pos].text != "p")
        throw DimacsError(pos < tokens.size() ? tokens[pos].line : 1, "missing 'p cnf V C' header");
    const int header_line = tokens[pos].line;
    ++pos;
    if (pos >= tokens.size() || tokens[pos].text != "cnf")
        throw DimacsError(header_line, "header format is not 'p cnf V C'");
    ++pos;
    if (pos + 1 >= tokens.size()) throw DimacsError(header_line, "header is missing V or C");
    const int num_vars = parse_int(tokens[pos++]);
    const int num_clauses = parse_int(tokens[pos++]);
    if (num_vars < 0 || num_clauses < 0)
        throw DimacsError(header_line, "header counts must be non-negative");

    CnfFormula formula;
    formula.num_vars = num_vars;

    std::vector<int> clause;
    int clause_start_line = 0;
    while (pos < tokens.size()) {
        const Token& t = tokens[pos++];
        const int lit = parse_int(t);
        if (lit == 0) {
            if (clause.empty()) throw DimacsError(t.line, "empty clause");
            formula.clauses.push_back(clause);
            clause.clear();
            continue;
        }
        if (clause.empty()) clause_start_line = t.line;
        const int var = std::abs(lit);
        if (var > num_vars)
            throw DimacsError(t.line, "literal " + std::to_string(lit) +
                                          " references a variable beyond the header count");
        clause.push_back(lit);
    }
    if (!clause.empty())
        throw DimacsError(clause_start_line, "unterminated clause (missing trailing 0)");
    if (static_cast<int>(formula.clauses.size()) != num_clauses)
        throw DimacsError(header_line,
                          "header declares " + std::to_string(num_clauses) + " clauses, file has " +
                              std::to_string(formula.clauses.size()));
    return formula;
}

bool assignment_satisfies(const CnfFormula& f, std::uint64_t assignment) {
    for (const auto& clause : f.clauses) {
        bool sat = false;
        for (int lit : clause) {
            const bool v = assignment_bit(f, assignment, std::abs(lit));
            if ((lit > 0) == v) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

std::vector<std::uint64_t> brute_force_sat(const CnfFormula& f) {
    if (f.num_vars > 24) throw std::invalid_argument("brute_force_sat is capped at 24 variables");
    std::vector<std::uint64_t> solutions;
    const std::uint64_t total = std::uint64_t{1} << f.num_vars;
    for (std::uint64_t a = 0; a < total; ++a)
        if (assignment_satisfies(f, a)) solutions.push_back(a);
    return solutions;
}

} // namespace qdesk
