#pragma once

#include <vector>

#include "weylkit/scalar.hpp"

namespace weylkit {

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
    SolveStatus status;
    std::vector<Scalar> solution; // valid when status == unique
};

// Exact Gauss-Jordan elimination over Q(sqrt2) for A x = b.
SolveResult solve_exact(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b);

} // namespace weylkit
