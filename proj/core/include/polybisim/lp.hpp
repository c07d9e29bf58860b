#pragma once

#include <span>
#include <vector>

#include "polybisim/linalg.hpp"

namespace polybisim::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Result {
  Status status = Status::kInfeasible;
  Rational value;  // objective at the optimum (kOptimal only)
  Vector point;    // an optimal basic solution (kOptimal only)
};

/// maximize objective . y  subject to  rows[i] . y <= rhs[i],  y free.
///
/// Exact two-phase dictionary simplex with Bland's rule. Free variables are
/// pivoted into the basis up front and never leave it, so only slack
/// variables take part in ratio tests.
Result maximize(std::span<const Vector> rows, std::span<const Rational> rhs,
                std::span<const Rational> objective);

}  // namespace polybisim::lp
