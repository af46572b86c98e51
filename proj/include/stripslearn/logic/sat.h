#ifndef STRIPSLEARN_LOGIC_SAT_H
#define STRIPSLEARN_LOGIC_SAT_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stripslearn/logic/cnf.h"

namespace logic {

// CDCL solver: two-watched-literal propagation, first-UIP clause learning,
// VSIDS-style activities with phase saving, Luby restarts. No randomness, so
// runs are reproducible by construction.
class SatSolver {
public:
    explicit SatSolver(int num_vars);

    // Returns false if the clause made the database trivially unsatisfiable.
    bool add_clause(std::span<const int> lits);

    bool solve();

    // Valid after solve() returned true; var in [1, num_vars].
    bool value(int var) const { return assigns_[var - 1] == 1; }

    bool ok() const { return ok_; }

private:
    // Internal literal encoding: 2*v + sign with v zero-based.
    static int to_internal(int lit) {
        int v = lit > 0 ? lit : -lit;
        return 2 * (v - 1) + (lit < 0 ? 1 : 0);
    }
    static int negate(int lit) { return lit ^ 1; }
    static int var_of(int lit) { return lit >> 1; }

    struct Watcher {
        int clause;
        int blocker;
    };

    int lit_value(int lit) const; // 1 true, -1 false, 0 unassigned
    void enqueue(int lit, int reason);
    int propagate(); // returns conflicting clause index or -1
    void analyze(int conflict, std::vector<int>& learnt, int& backtrack_level);
    void backtrack(int level);
    void bump_var(int var);
    void decay_activities();
    int pick_branch_var(); // -1 when all assigned
    bool attach_clause(int idx);
    static std::uint64_t luby(std::uint64_t i);

    int num_vars_;
    bool ok_ = true;
    std::vector<std::vector<int>> clauses_;
    std::vector<std::vector<Watcher>> watches_; // indexed by internal literal
    std::vector<signed char> assigns_;          // per var: 1, -1, 0
    std::vector<signed char> phase_;            // saved polarity
    std::vector<int> level_;
    std::vector<int> reason_;
    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    std::size_t propagate_head_ = 0;
    std::vector<double> activity_;
    double activity_inc_ = 1.0;
    std::vector<char> seen_;

    // Binary max-heap over variable activity for branching decisions.
    std::vector<int> heap_;
    std::vector<int> heap_pos_;
    void heap_insert(int var);
    void heap_sift_up(std::size_t i);
    void heap_sift_down(std::size_t i);
    bool heap_less(int a, int b) const;
};

// Decides satisfiability of the clause set (weights, if any, are ignored and
// every clause is treated as a constraint). Returns a model indexed by
// variable (slot 0 unused) or nullopt for UNSAT.
std::optional<std::vector<bool>> solve_sat(const Cnf& cnf);

} // namespace logic

#endif
