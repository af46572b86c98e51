#ifndef STRIPSLEARN_LOGIC_MAXSAT_H
#define STRIPSLEARN_LOGIC_MAXSAT_H

#include <cstdint>
#include <vector>

#include "stripslearn/logic/cnf.h"

namespace logic {

struct MaxSatResult {
    std::vector<bool> model; // indexed by variable, slot 0 unused
    std::uint64_t cost = 0;  // total weight of falsified soft clauses
};

// Weighted MaxSAT by linear search: relax every soft clause with a fresh
// variable, solve, then repeatedly tighten a totalizer-encoded bound on the
// relaxation weight until the bound is unsatisfiable. The last model is
// optimal. Throws HardUnsat when the hard clauses alone conflict.
MaxSatResult solve_maxsat(const Cnf& cnf);

} // namespace logic

#endif
