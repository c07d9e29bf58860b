#include "polybisim/lp.hpp"

#include <limits>
#include <optional>

#include "polybisim/error.hpp"

namespace polybisim::lp {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// basic = constant + sum_k coef[k] * nonbasic[k]
struct Row {
  std::size_t basic = kNone;
  Rational constant;
  Vector coef;
};

// Variable ids: [0, dim) free decision variables, [dim, dim + m) slacks,
// dim + m the phase-one auxiliary variable.
class Dictionary {
 public:
  Dictionary(std::span<const Vector> rows, std::span<const Rational> rhs,
             std::span<const Rational> objective)
      : dim_(objective.size()), aux_(objective.size() + rows.size()), blocked_(aux_ + 1, false) {
    for (std::size_t j = 0; j < dim_; ++j) nonbasic_.push_back(j);
    rows_.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Row row{dim_ + i, rhs[i], Vector(dim_)};
      for (std::size_t j = 0; j < dim_; ++j) row.coef[j] = -rows[i][j];
      rows_.push_back(std::move(row));
    }
    objective_.coef.assign(objective.begin(), objective.end());
  }

  Result solve() {
    eliminate_free_variables();
    if (!phase_one()) return {Status::kInfeasible, {}, {}};

    for (std::size_t k = 0; k < nonbasic_.size(); ++k) {
      if (is_free(nonbasic_[k]) && sgn(objective_.coef[k]) != 0) {
        return {Status::kUnbounded, {}, {}};
      }
    }
    if (!run(objective_)) return {Status::kUnbounded, {}, {}};

    Result result{Status::kOptimal, objective_.constant, Vector(dim_)};
    for (const Row& row : rows_) {
      if (is_free(row.basic)) result.point[row.basic] = row.constant;
    }
    return result;
  }

 private:
  bool is_free(std::size_t var) const { return var < dim_; }

  void pivot(std::size_t r, std::size_t k) {
    Row& p = rows_[r];
    const Rational inv = 1 / p.coef[k];
    p.constant = -p.constant * inv;
    for (std::size_t j = 0; j < p.coef.size(); ++j) {
      if (j != k && sgn(p.coef[j]) != 0) p.coef[j] = -p.coef[j] * inv;
    }
    p.coef[k] = inv;
    std::swap(p.basic, nonbasic_[k]);

    auto substitute = [&](Row& q) {
      if (sgn(q.coef[k]) == 0) return;
      const Rational f = q.coef[k];
      q.constant += f * p.constant;
      for (std::size_t j = 0; j < q.coef.size(); ++j) {
        if (j != k && sgn(p.coef[j]) != 0) q.coef[j] += f * p.coef[j];
      }
      q.coef[k] = f * p.coef[k];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) substitute(rows_[i]);
    }
    substitute(objective_);
    if (!aux_objective_.coef.empty()) substitute(aux_objective_);
  }

  // Free variables enter the basis once and stay there; a free variable with
  // no nonzero coefficient in any slack row is unconstrained and stays blocked.
  void eliminate_free_variables() {
    for (std::size_t j = 0; j < dim_; ++j) {
      const std::size_t k = j;  // never moved: only pivoted positions change
      std::optional<std::size_t> chosen;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (!is_free(rows_[r].basic) && sgn(rows_[r].coef[k]) != 0) {
          chosen = r;
          break;
        }
      }
      if (chosen) {
        pivot(*chosen, k);
      } else {
        blocked_[j] = true;
      }
    }
  }

  bool phase_one() {
    std::optional<std::size_t> worst;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (is_free(rows_[r].basic) || sgn(rows_[r].constant) >= 0) continue;
      if (!worst || rows_[r].constant < rows_[*worst].constant) worst = r;
    }
    if (!worst) return true;

    const std::size_t position = nonbasic_.size();
    nonbasic_.push_back(aux_);
    for (Row& row : rows_) row.coef.push_back(is_free(row.basic) ? 0 : 1);
    objective_.coef.push_back(0);
    aux_objective_.constant = 0;
    aux_objective_.coef.assign(nonbasic_.size(), 0);
    aux_objective_.coef[position] = -1;

    pivot(*worst, position);
    run(aux_objective_);  // bounded above by zero
    const bool feasible = sgn(aux_objective_.constant) == 0;

    if (feasible) {
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].basic != aux_) continue;
        std::optional<std::size_t> k_out;
        for (std::size_t k = 0; k < nonbasic_.size(); ++k) {
          if (!blocked_[nonbasic_[k]] && sgn(rows_[r].coef[k]) != 0) {
            k_out = k;
            break;
          }
        }
        if (k_out) {
          pivot(r, *k_out);
        } else {
          rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        }
        break;
      }
    }
    blocked_[aux_] = true;
    aux_objective_.coef.clear();
    return feasible;
  }

  // Bland's rule. Returns false when the objective is unbounded.
  bool run(Row& objective) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t k = 0; k < nonbasic_.size(); ++k) {
        if (blocked_[nonbasic_[k]] || sgn(objective.coef[k]) <= 0) continue;
        if (!entering || nonbasic_[k] < nonbasic_[*entering]) entering = k;
      }
      if (!entering) return true;

      const std::size_t k = *entering;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Row& row = rows_[r];
        if (is_free(row.basic) || sgn(row.coef[k]) >= 0) continue;
        Rational ratio = row.constant / -row.coef[k];
        if (!leaving || ratio < best || (ratio == best && row.basic < rows_[*leaving].basic)) {
          leaving = r;
          best = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, k);
    }
  }

  std::size_t dim_;
  std::size_t aux_;
  std::vector<bool> blocked_;
  std::vector<std::size_t> nonbasic_;
  std::vector<Row> rows_;
  Row objective_;
  Row aux_objective_;
};

}  // namespace

Result maximize(std::span<const Vector> rows, std::span<const Rational> rhs,
                std::span<const Rational> objective) {
  if (rows.size() != rhs.size()) throw Error(ErrorCode::kDimension, "LP row/rhs count mismatch");
  for (const auto& row : rows) {
    if (row.size() != objective.size()) throw Error(ErrorCode::kDimension, "LP row width mismatch");
  }
  return Dictionary(rows, rhs, objective).solve();
}

}  // namespace polybisim::lp
