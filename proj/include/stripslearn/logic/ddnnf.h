#ifndef STRIPSLEARN_LOGIC_DDNNF_H
#define STRIPSLEARN_LOGIC_DDNNF_H

#include <cstdint>
#include <vector>

#include "stripslearn/logic/cnf.h"

namespace logic {

// Deterministic decomposable NNF produced by exhaustive DPLL with unit
// propagation, connected-component decomposition and formula caching.
// Nodes are stored in topological order (children precede parents), node 0
// is the false constant and node 1 the true constant. Or nodes are decision
// nodes: exactly two children, the first implying the decision variable and
// the second its negation.
struct Ddnnf {
    enum class Kind : std::uint8_t { False, True, Lit, And, Or };

    struct Node {
        Kind kind = Kind::False;
        int literal = 0;      // Lit only
        int decision_var = 0; // Or only
        std::vector<int> children;
    };

    int num_vars = 0;
    std::vector<Node> nodes;
    int root = 0;
    std::vector<int> fixed; // literals applied through condition()
};

// Compiles hard clauses into a Ddnnf. Throws CapExceeded when num_vars is
// above var_cap (the representation tops out at 64 variables).
Ddnnf compile_ddnnf(const Cnf& cnf, int var_cap = 64);

// d AND literal, still in d-DNNF form. Conditioning on an already-fixed
// literal is a no-op; conditioning on its negation yields the false node.
Ddnnf condition(const Ddnnf& d, int literal);

// Model count over the full variable set (free variables included,
// conditioned variables fixed). Saturates at the uint64 maximum.
std::uint64_t count_models(const Ddnnf& d);

// Structural check: topological order, decomposable conjunctions,
// deterministic (decision) disjunctions.
bool validate_structure(const Ddnnf& d);

// Evaluates the circuit under a total assignment (model[v] for v in 1..n);
// conditioned literals are checked against the assignment as well.
bool evaluate(const Ddnnf& d, const std::vector<bool>& model);

} // namespace logic

#endif
