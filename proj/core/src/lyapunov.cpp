#include "polybisim/lyapunov.hpp"

#include "polybisim/error.hpp"
#include "polybisim/lp.hpp"

namespace polybisim {
namespace {

// max over P_gamma of objective . x
Rational max_over_sublevel(const PolyhedralLF& lf, const Rational& gamma,
                           std::span<const Rational> objective) {
  const Matrix& L = lf.L();
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t j = 0; j < L.rows(); ++j) {
    Vector row(L.row(j).begin(), L.row(j).end());
    Vector neg(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) neg[k] = -row[k];
    rows.push_back(std::move(row));
    rows.push_back(std::move(neg));
    rhs.push_back(gamma);
    rhs.push_back(gamma);
  }
  const lp::Result r = lp::maximize(rows, rhs, objective);
  if (r.status != lp::Status::kOptimal) {
    throw Error(ErrorCode::kRankDeficient, "sublevel set is unbounded or empty");
  }
  return r.value;
}

// Rows of [L; -L] A as objective vectors.
std::vector<Vector> image_rows(const PolyhedralLF& lf, const LinearSystem& sys) {
  if (lf.dimension() != sys.dimension()) {
    throw Error(ErrorCode::kDimension, "Lyapunov function and system dimensions differ");
  }
  std::vector<Vector> out;
  const Matrix LA = lf.L() * sys.A();
  for (std::size_t j = 0; j < LA.rows(); ++j) {
    Vector row(LA.row(j).begin(), LA.row(j).end());
    Vector neg(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) neg[k] = -row[k];
    out.push_back(std::move(row));
    out.push_back(std::move(neg));
  }
  return out;
}

}  // namespace

LinearSystem::LinearSystem(Matrix A) : A_(std::move(A)) {
  if (!A_.is_square() || A_.rows() == 0) {
    throw Error(ErrorCode::kDimension, "system matrix must be square and non-empty");
  }
}

PolyhedralLF::PolyhedralLF(Matrix L, Rational rho) : L_(std::move(L)), rho_(std::move(rho)) {
  if (L_.cols() == 0 || L_.rows() < L_.cols() || L_.rank() != L_.cols()) {
    throw Error(ErrorCode::kRankDeficient, "L must have full column rank");
  }
  if (sgn(rho_) <= 0 || rho_ >= 1) {
    throw Error(ErrorCode::kRhoRange, "rho must lie in (0, 1), got " + to_string(rho_));
  }
}

Rational lf_value(const PolyhedralLF& lf, std::span<const Rational> x) {
  if (x.size() != lf.dimension()) throw Error(ErrorCode::kDimension, "lf_value: bad point size");
  Rational best;
  for (const auto& v : lf.L() * x) {
    const Rational magnitude = abs(v);
    if (magnitude > best) best = magnitude;
  }
  return best;
}

Rational verify_contraction(const PolyhedralLF& lf, const LinearSystem& sys) {
  Rational best;
  for (const auto& objective : image_rows(lf, sys)) {
    Rational v = max_over_sublevel(lf, 1, objective);
    if (v > best) best = std::move(v);
  }
  return best;
}

LevelSequence level_sequence(const Rational& gamma_d, const Rational& gamma_x,
                             const Rational& rho) {
  if (sgn(gamma_d) <= 0 || gamma_d >= gamma_x) {
    throw Error(ErrorCode::kGammaOrder, "need 0 < gamma_D < gamma_X");
  }
  if (sgn(rho) <= 0 || rho >= 1) throw Error(ErrorCode::kRhoRange, "rho must lie in (0, 1)");
  LevelSequence seq;
  seq.gammas.push_back(gamma_d);
  Rational next = gamma_d / rho;
  while (next < gamma_x) {
    seq.gammas.push_back(next);
    next /= rho;
  }
  seq.gammas.push_back(gamma_x);
  return seq;
}

Cell sublevel_cell(const PolyhedralLF& lf, const Rational& gamma) {
  const Matrix& L = lf.L();
  std::vector<Constraint> rows;
  for (std::size_t j = 0; j < L.rows(); ++j) {
    Vector row(L.row(j).begin(), L.row(j).end());
    Vector neg(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) neg[k] = -row[k];
    rows.push_back({std::move(row), gamma, false});
    rows.push_back({std::move(neg), gamma, false});
  }
  return Cell(L.cols(), std::move(rows));
}

std::vector<Region> slices(const PolyhedralLF& lf, const LevelSequence& seq) {
  std::vector<Region> out;
  out.emplace_back(sublevel_cell(lf, seq[0]));
  for (std::size_t i = 1; i <= seq.count(); ++i) {
    out.push_back(difference(Region(sublevel_cell(lf, seq[i])),
                             Region(sublevel_cell(lf, seq[i - 1]))));
  }
  return out;
}

bool slice_descent_check(const PolyhedralLF& lf, const LinearSystem& sys,
                         const LevelSequence& seq) {
  const std::vector<Vector> objectives = image_rows(lf, sys);
  for (std::size_t i = 1; i <= seq.count(); ++i) {
    for (const auto& objective : objectives) {
      if (max_over_sublevel(lf, seq[i], objective) > seq[i - 1]) return false;
    }
  }
  return true;
}

}  // namespace polybisim
