#include "stripslearn/logic/maxsat.h"

#include <algorithm>
#include <map>

#include "stripslearn/logic/sat.h"

namespace logic {

namespace {

// One layer of a generalized totalizer: a node maps each attainable weight
// sum (saturated at cap) to a variable that must be true whenever the leaves
// below it reach that sum.
using TotalizerNode = std::map<std::uint64_t, int>;

TotalizerNode merge_nodes(const TotalizerNode& left, const TotalizerNode& right,
                          std::uint64_t cap, Cnf& out) {
    TotalizerNode merged;
    auto output_var = [&](std::uint64_t weight) {
        auto it = merged.find(weight);
        if (it == merged.end()) it = merged.emplace(weight, out.add_var()).first;
        return it->second;
    };
    for (const auto& [wl, vl] : left)
        out.add_clause({-vl, output_var(std::min(wl, cap))});
    for (const auto& [wr, vr] : right)
        out.add_clause({-vr, output_var(std::min(wr, cap))});
    for (const auto& [wl, vl] : left)
        for (const auto& [wr, vr] : right)
            out.add_clause({-vl, -vr, output_var(std::min(wl + wr, cap))});
    return merged;
}

// Adds clauses enforcing sum(weight_i where lit_i true) <= bound.
void encode_weight_bound(const std::vector<int>& lits, const std::vector<std::uint64_t>& weights,
                         std::uint64_t bound, Cnf& out) {
    std::uint64_t cap = bound + 1; // every sum above the bound collapses to one bucket
    std::vector<TotalizerNode> layer;
    for (std::size_t i = 0; i < lits.size(); ++i) {
        if (weights[i] > bound) {
            out.add_clause({-lits[i]});
            continue;
        }
        layer.push_back(TotalizerNode{{weights[i], lits[i]}});
    }
    while (layer.size() > 1) {
        std::vector<TotalizerNode> next;
        for (std::size_t i = 0; i + 1 < layer.size(); i += 2)
            next.push_back(merge_nodes(layer[i], layer[i + 1], cap, out));
        if (layer.size() % 2 == 1) next.push_back(std::move(layer.back()));
        layer = std::move(next);
    }
    if (!layer.empty()) {
        auto it = layer[0].find(cap);
        if (it != layer[0].end()) out.add_clause({-it->second});
    }
}

std::uint64_t model_cost(const Cnf& cnf, const std::vector<bool>& model) {
    std::uint64_t cost = 0;
    for (std::size_t i = 0; i < cnf.clauses.size(); ++i)
        if (!cnf.is_hard(i) && !clause_satisfied(cnf.clauses[i], model)) cost += cnf.weights[i];
    return cost;
}

} // namespace

MaxSatResult solve_maxsat(const Cnf& cnf) {
    // Working formula: hard clauses plus relaxed softs (C or r).
    Cnf relaxed;
    relaxed.num_vars = cnf.num_vars;
    std::vector<int> relax_lits;
    std::vector<std::uint64_t> relax_weights;
    for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
        if (cnf.is_hard(i)) {
            relaxed.add_clause(cnf.clauses[i], /*allow_empty=*/true);
        } else {
            int r = relaxed.add_var();
            Clause clause = cnf.clauses[i];
            clause.push_back(r);
            relaxed.add_clause(std::move(clause));
            relax_lits.push_back(r);
            relax_weights.push_back(cnf.weights[i]);
        }
    }

    auto first = solve_sat(relaxed);
    if (!first) throw util::Error("HardUnsat", "hard clauses are unsatisfiable");

    MaxSatResult best;
    best.model.assign(first->begin(), first->begin() + cnf.num_vars + 1);
    best.cost = model_cost(cnf, best.model);

    while (best.cost > 0) {
        Cnf bounded = relaxed;
        encode_weight_bound(relax_lits, relax_weights, best.cost - 1, bounded);
        auto model = solve_sat(bounded);
        if (!model) break; // no cheaper model exists
        std::vector<bool> trimmed(model->begin(), model->begin() + cnf.num_vars + 1);
        std::uint64_t cost = model_cost(cnf, trimmed);
        // The bound is on relaxation variables, so the true cost can only be
        // lower or equal; either way it strictly decreases.
        best.model = std::move(trimmed);
        best.cost = cost;
    }
    return best;
}

} // namespace logic
