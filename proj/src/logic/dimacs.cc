#include "stripslearn/logic/dimacs.h"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>

namespace logic {

namespace {

[[noreturn]] void parse_error(int line, const std::string& message) {
    throw util::Error("ParseError", "line " + std::to_string(line) + ": " + message);
}

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;

    void skip_space() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '\n') ++line;
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
                ++pos;
            else
                break;
        }
    }

    void skip_line() {
        while (pos < text.size() && text[pos] != '\n') ++pos;
    }

    bool eof() {
        for (;;) {
            skip_space();
            if (pos >= text.size()) return true;
            if (text[pos] == 'c') {
                skip_line();
                continue;
            }
            return false;
        }
    }

    std::string_view token() {
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        return text.substr(start, pos - start);
    }

    template <typename T>
    T number(const char* what) {
        std::string_view tok = token();
        T value{};
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            parse_error(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
        return value;
    }
};

// top = 1 + sum of soft weights, the conventional hard-clause marker.
std::uint64_t wcnf_top(const Cnf& cnf) {
    std::uint64_t top = 1;
    for (std::size_t i = 0; i < cnf.clauses.size(); ++i)
        if (!cnf.is_hard(i)) top += cnf.weights[i];
    return top;
}

} // namespace

std::string write_dimacs(const Cnf& cnf) {
    std::ostringstream out;
    if (!cnf.weighted()) {
        out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
        for (const auto& clause : cnf.clauses) {
            for (int lit : clause) out << lit << ' ';
            out << "0\n";
        }
    } else {
        std::uint64_t top = wcnf_top(cnf);
        out << "p wcnf " << cnf.num_vars << ' ' << cnf.clauses.size() << ' ' << top << '\n';
        for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
            out << (cnf.is_hard(i) ? top : cnf.weights[i]) << ' ';
            for (int lit : cnf.clauses[i]) out << lit << ' ';
            out << "0\n";
        }
    }
    return out.str();
}

Cnf read_dimacs(std::string_view text) {
    Scanner in{text};
    if (in.eof()) parse_error(in.line, "missing problem line");
    if (text[in.pos] != 'p') parse_error(in.line, "expected problem line 'p cnf' or 'p wcnf'");
    ++in.pos;
    in.skip_space();
    std::string_view format = in.token();
    bool weighted = format == "wcnf";
    if (!weighted && format != "cnf")
        parse_error(in.line, "unknown format '" + std::string(format) + "'");
    in.skip_space();
    int num_vars = in.number<int>("variable count");
    in.skip_space();
    std::size_t num_clauses = in.number<std::size_t>("clause count");
    std::uint64_t top = 0;
    if (weighted) {
        in.skip_space();
        top = in.number<std::uint64_t>("top weight");
    }

    Cnf cnf;
    cnf.num_vars = num_vars;
    if (weighted) cnf.weights.reserve(num_clauses);
    while (!in.eof()) {
        std::uint64_t weight = kHardWeight;
        if (weighted) {
            weight = in.number<std::uint64_t>("clause weight");
            if (weight == 0) parse_error(in.line, "zero clause weight");
        }
        Clause clause;
        for (;;) {
            if (in.eof()) parse_error(in.line, "clause not terminated by 0");
            int lit = in.number<int>("literal");
            if (lit == 0) break;
            if (std::abs(lit) > num_vars)
                parse_error(in.line, "literal " + std::to_string(lit) + " out of range");
            clause.push_back(lit);
        }
        if (!weighted || weight == top)
            cnf.add_clause(std::move(clause), /*allow_empty=*/true);
        else
            cnf.add_soft(std::move(clause), weight, /*allow_empty=*/true);
    }
    if (weighted && cnf.weights.empty()) cnf.weights.assign(cnf.clauses.size(), kHardWeight);
    if (cnf.clauses.size() != num_clauses)
        parse_error(in.line, "clause count mismatch: header says " + std::to_string(num_clauses) +
                                 ", found " + std::to_string(cnf.clauses.size()));
    return cnf;
}

} // namespace logic
