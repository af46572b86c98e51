#ifndef STRIPSLEARN_LOGIC_CNF_H
#define STRIPSLEARN_LOGIC_CNF_H

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "stripslearn/util/error.h"

namespace logic {

// A literal is a nonzero integer v or -v with v in [1, num_vars], DIMACS
// convention throughout.
using Clause = std::vector<int>;

inline constexpr std::uint64_t kHardWeight = std::numeric_limits<std::uint64_t>::max();

// Clause database with optional per-clause weights. weights empty means
// every clause is hard; otherwise weights[i] == kHardWeight marks clause i
// hard and any other value is its soft weight.
struct Cnf {
    int num_vars = 0;
    std::vector<Clause> clauses;
    std::vector<std::uint64_t> weights;

    int add_var() { return ++num_vars; }

    void add_clause(Clause clause, bool allow_empty = false) {
        check(clause, allow_empty);
        clauses.push_back(std::move(clause));
        if (!weights.empty()) weights.push_back(kHardWeight);
    }

    void add_soft(Clause clause, std::uint64_t weight, bool allow_empty = false) {
        check(clause, allow_empty);
        if (weight == 0 || weight == kHardWeight)
            throw util::Error("InvalidWeight", "soft weight must be positive and finite");
        if (weights.empty()) weights.assign(clauses.size(), kHardWeight);
        clauses.push_back(std::move(clause));
        weights.push_back(weight);
    }

    bool weighted() const { return !weights.empty(); }

    bool is_hard(std::size_t i) const {
        return weights.empty() || weights[i] == kHardWeight;
    }

    std::size_t num_soft() const {
        std::size_t n = 0;
        for (std::size_t i = 0; i < clauses.size(); ++i)
            if (!is_hard(i)) ++n;
        return n;
    }

private:
    void check(const Clause& clause, bool allow_empty) const {
        if (clause.empty() && !allow_empty)
            throw util::Error("EmptyClause", "empty clause added without explicit flag");
        for (int lit : clause) {
            int var = std::abs(lit);
            if (lit == 0 || var > num_vars)
                throw util::Error("InvalidLiteral",
                                  "literal " + std::to_string(lit) + " out of range for " +
                                      std::to_string(num_vars) + " variables");
        }
    }
};

// Evaluates a clause under a total assignment (model[v] for v in 1..n).
inline bool clause_satisfied(const Clause& clause, const std::vector<bool>& model) {
    for (int lit : clause) {
        bool value = model[static_cast<std::size_t>(std::abs(lit))];
        if (lit > 0 ? value : !value) return true;
    }
    return false;
}

} // namespace logic

#endif
