#ifndef STRIPSLEARN_LOGIC_DIMACS_H
#define STRIPSLEARN_LOGIC_DIMACS_H

#include <string>
#include <string_view>

#include "stripslearn/logic/cnf.h"

namespace logic {

// DIMACS CNF and old-style WCNF ("p wcnf <vars> <clauses> <top>") text.
// write_dimacs picks the format from the presence of weights; read_dimacs
// detects it from the problem line. Both directions round-trip exactly.
std::string write_dimacs(const Cnf& cnf);
Cnf read_dimacs(std::string_view text);

} // namespace logic

#endif
