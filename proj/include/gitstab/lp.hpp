#pragma once

#include "gitstab/field.hpp"

#include <vector>

namespace gitstab {

enum class LpStatus { Infeasible, Optimal, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    std::vector<Rational> x;
};

// maximize c.x subject to A x = b, x >= 0. Exact two-phase simplex with
// Bland's lowest-index rule, so it terminates without tolerances.
LpResult solve_lp(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                  const std::vector<Rational>& c);

}  // namespace gitstab
