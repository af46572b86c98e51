#include "stripslearn/logic/sat.h"

#include <algorithm>
#include <cassert>

namespace logic {

SatSolver::SatSolver(int num_vars)
    : num_vars_(num_vars),
      watches_(2 * static_cast<std::size_t>(num_vars)),
      assigns_(num_vars, 0),
      phase_(num_vars, -1),
      level_(num_vars, 0),
      reason_(num_vars, -1),
      activity_(num_vars, 0.0),
      seen_(num_vars, 0),
      heap_pos_(num_vars, -1) {
    heap_.reserve(num_vars);
    for (int v = 0; v < num_vars; ++v) heap_insert(v);
}

int SatSolver::lit_value(int lit) const {
    signed char a = assigns_[var_of(lit)];
    if (a == 0) return 0;
    return (a == 1) == ((lit & 1) == 0) ? 1 : -1;
}

bool SatSolver::add_clause(std::span<const int> lits) {
    if (!ok_) return false;
    assert(trail_lim_.empty());
    // Normalize: sort, drop duplicates, detect tautologies, strip falsified
    // literals (we only add clauses at level 0).
    std::vector<int> clause;
    clause.reserve(lits.size());
    for (int ext : lits) clause.push_back(to_internal(ext));
    std::sort(clause.begin(), clause.end());
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    for (std::size_t i = 0; i + 1 < clause.size(); ++i)
        if (clause[i] == negate(clause[i + 1])) return true; // tautology
    std::erase_if(clause, [&](int lit) { return lit_value(lit) == -1; });
    if (std::any_of(clause.begin(), clause.end(), [&](int lit) { return lit_value(lit) == 1; }))
        return true;
    if (clause.empty()) return ok_ = false;
    if (clause.size() == 1) {
        enqueue(clause[0], -1);
        return ok_ = (propagate() == -1);
    }
    clauses_.push_back(std::move(clause));
    attach_clause(static_cast<int>(clauses_.size()) - 1);
    return true;
}

bool SatSolver::attach_clause(int idx) {
    const auto& c = clauses_[idx];
    watches_[negate(c[0])].push_back({idx, c[1]});
    watches_[negate(c[1])].push_back({idx, c[0]});
    return true;
}

void SatSolver::enqueue(int lit, int reason) {
    int v = var_of(lit);
    assert(assigns_[v] == 0);
    assigns_[v] = (lit & 1) ? -1 : 1;
    phase_[v] = assigns_[v];
    level_[v] = static_cast<int>(trail_lim_.size());
    reason_[v] = reason;
    trail_.push_back(lit);
}

int SatSolver::propagate() {
    while (propagate_head_ < trail_.size()) {
        int lit = trail_[propagate_head_++];
        auto& watch_list = watches_[lit];
        std::size_t keep = 0;
        for (std::size_t i = 0; i < watch_list.size(); ++i) {
            Watcher w = watch_list[i];
            if (lit_value(w.blocker) == 1) {
                watch_list[keep++] = w;
                continue;
            }
            auto& c = clauses_[w.clause];
            int false_lit = negate(lit);
            if (c[0] == false_lit) std::swap(c[0], c[1]);
            if (lit_value(c[0]) == 1) {
                watch_list[keep++] = {w.clause, c[0]};
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < c.size(); ++k) {
                if (lit_value(c[k]) != -1) {
                    std::swap(c[1], c[k]);
                    watches_[negate(c[1])].push_back({w.clause, c[0]});
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            // Unit or conflicting.
            watch_list[keep++] = {w.clause, c[0]};
            if (lit_value(c[0]) == -1) {
                for (std::size_t j = i + 1; j < watch_list.size(); ++j)
                    watch_list[keep++] = watch_list[j];
                watch_list.resize(keep);
                return w.clause;
            }
            enqueue(c[0], w.clause);
        }
        watch_list.resize(keep);
    }
    return -1;
}

void SatSolver::analyze(int conflict, std::vector<int>& learnt, int& backtrack_level) {
    learnt.clear();
    learnt.push_back(0); // slot for the asserting literal
    int counter = 0;
    int lit = -1;
    std::size_t index = trail_.size();
    int clause = conflict;
    int current_level = static_cast<int>(trail_lim_.size());

    do {
        const auto& c = clauses_[clause];
        for (std::size_t i = (lit == -1 ? 0 : 1); i < c.size(); ++i) {
            int q = c[i];
            int v = var_of(q);
            if (!seen_[v] && level_[v] > 0) {
                seen_[v] = 1;
                bump_var(v);
                if (level_[v] == current_level)
                    ++counter;
                else
                    learnt.push_back(q);
            }
        }
        // Pick next literal to expand from the trail.
        do {
            lit = trail_[--index];
        } while (!seen_[var_of(lit)]);
        seen_[var_of(lit)] = 0;
        clause = reason_[var_of(lit)];
        --counter;
    } while (counter > 0);
    learnt[0] = negate(lit);

    // Cheap self-subsumption: drop literals implied by the rest.
    backtrack_level = 0;
    if (learnt.size() > 1) {
        std::size_t max_i = 1;
        for (std::size_t i = 2; i < learnt.size(); ++i)
            if (level_[var_of(learnt[i])] > level_[var_of(learnt[max_i])]) max_i = i;
        std::swap(learnt[1], learnt[max_i]);
        backtrack_level = level_[var_of(learnt[1])];
    }
    for (std::size_t i = 1; i < learnt.size(); ++i) seen_[var_of(learnt[i])] = 0;
}

void SatSolver::backtrack(int target_level) {
    if (static_cast<int>(trail_lim_.size()) <= target_level) return;
    std::size_t bound = trail_lim_[target_level];
    for (std::size_t i = trail_.size(); i-- > bound;) {
        int v = var_of(trail_[i]);
        assigns_[v] = 0;
        reason_[v] = -1;
        if (heap_pos_[v] < 0) heap_insert(v);
    }
    trail_.resize(bound);
    trail_lim_.resize(target_level);
    propagate_head_ = bound;
}

void SatSolver::bump_var(int var) {
    activity_[var] += activity_inc_;
    if (activity_[var] > 1e100) {
        for (double& a : activity_) a *= 1e-100;
        activity_inc_ *= 1e-100;
    }
    if (heap_pos_[var] >= 0) heap_sift_up(heap_pos_[var]);
}

void SatSolver::decay_activities() { activity_inc_ /= 0.95; }

bool SatSolver::heap_less(int a, int b) const {
    if (activity_[a] != activity_[b]) return activity_[a] > activity_[b];
    return a < b; // stable tie-break keeps runs deterministic
}

void SatSolver::heap_insert(int var) {
    heap_pos_[var] = static_cast<int>(heap_.size());
    heap_.push_back(var);
    heap_sift_up(heap_.size() - 1);
}

void SatSolver::heap_sift_up(std::size_t i) {
    int var = heap_[i];
    while (i > 0) {
        std::size_t parent = (i - 1) / 2;
        if (!heap_less(var, heap_[parent])) break;
        heap_[i] = heap_[parent];
        heap_pos_[heap_[i]] = static_cast<int>(i);
        i = parent;
    }
    heap_[i] = var;
    heap_pos_[var] = static_cast<int>(i);
}

void SatSolver::heap_sift_down(std::size_t i) {
    int var = heap_[i];
    for (;;) {
        std::size_t child = 2 * i + 1;
        if (child >= heap_.size()) break;
        if (child + 1 < heap_.size() && heap_less(heap_[child + 1], heap_[child])) ++child;
        if (!heap_less(heap_[child], var)) break;
        heap_[i] = heap_[child];
        heap_pos_[heap_[i]] = static_cast<int>(i);
        i = child;
    }
    heap_[i] = var;
    heap_pos_[var] = static_cast<int>(i);
}

int SatSolver::pick_branch_var() {
    while (!heap_.empty()) {
        int var = heap_[0];
        heap_[0] = heap_.back();
        heap_pos_[heap_[0]] = 0;
        heap_.pop_back();
        heap_pos_[var] = -1;
        if (!heap_.empty()) heap_sift_down(0);
        if (assigns_[var] == 0) return var;
    }
    return -1;
}

std::uint64_t SatSolver::luby(std::uint64_t x) {
    std::uint64_t size = 1, seq = 0;
    while (size < x + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != x) {
        size = (size - 1) / 2;
        --seq;
        x %= size;
    }
    return 1ull << seq;
}

bool SatSolver::solve() {
    if (!ok_) return false;
    std::uint64_t restart_count = 0;
    std::uint64_t conflicts_until_restart = 100 * luby(restart_count);
    std::uint64_t conflicts = 0;
    std::vector<int> learnt;

    for (;;) {
        int conflict = propagate();
        if (conflict != -1) {
            if (trail_lim_.empty()) return ok_ = false;
            ++conflicts;
            int backtrack_level = 0;
            analyze(conflict, learnt, backtrack_level);
            backtrack(backtrack_level);
            if (learnt.size() == 1) {
                enqueue(learnt[0], -1);
            } else {
                clauses_.push_back(learnt);
                int idx = static_cast<int>(clauses_.size()) - 1;
                attach_clause(idx);
                enqueue(learnt[0], idx);
            }
            decay_activities();
            if (conflicts >= conflicts_until_restart) {
                conflicts = 0;
                ++restart_count;
                conflicts_until_restart = 100 * luby(restart_count);
                backtrack(0);
            }
        } else {
            int var = pick_branch_var();
            if (var == -1) return true;
            trail_lim_.push_back(trail_.size());
            enqueue(2 * var + (phase_[var] == 1 ? 0 : 1), -1);
        }
    }
}

std::optional<std::vector<bool>> solve_sat(const Cnf& cnf) {
    SatSolver solver(cnf.num_vars);
    for (const auto& clause : cnf.clauses)
        if (!solver.add_clause(clause)) return std::nullopt;
    if (!solver.solve()) return std::nullopt;
    std::vector<bool> model(static_cast<std::size_t>(cnf.num_vars) + 1, false);
    for (int v = 1; v <= cnf.num_vars; ++v) model[v] = solver.value(v);
    return model;
}

} // namespace logic
