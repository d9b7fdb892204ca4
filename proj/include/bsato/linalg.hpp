#pragma once

#include <vector>

#include "bsato/rational.hpp"

namespace bsato {

using Matrix = std::vector<std::vector<Rational>>;

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
    SolveStatus status;
    std::vector<Rational> solution; // valid only when status == unique
};

// Exact Gaussian elimination for A x = b (A is rows x cols, b has rows entries).
SolveResult solve_linear(Matrix a, std::vector<Rational> b);

// Basis of the nullspace of A (each vector has cols entries). Deterministic:
// one vector per free column, in column order, free slot set to 1.
std::vector<std::vector<Rational>> nullspace(Matrix a);

} // namespace bsato
