#pragma once

#include <cstddef>
#include <vector>

#include "polybisim/geometry.hpp"

namespace polybisim {

/// x_{k+1} = A x_k. Schur stability is not checked here; it is certified
/// indirectly by verify_contraction().
class LinearSystem {
 public:
  explicit LinearSystem(Matrix A);

  const Matrix& A() const { return A_; }
  std::size_t dimension() const { return A_.rows(); }
  Point step(std::span<const Rational> x) const { return A_ * x; }

 private:
  Matrix A_;
};

/// V(x) = ||L x||_inf with declared contraction rate rho in (0, 1).
class PolyhedralLF {
 public:
  /// Throws kRankDeficient if L lacks full column rank or has fewer rows than
  /// columns, kRhoRange if rho is outside (0, 1).
  PolyhedralLF(Matrix L, Rational rho);

  const Matrix& L() const { return L_; }
  const Rational& rho() const { return rho_; }
  std::size_t dimension() const { return L_.cols(); }

 private:
  Matrix L_;
  Rational rho_;
};

/// Gamma_0 = gamma_D < Gamma_1 < ... < Gamma_N = gamma_X.
struct LevelSequence {
  std::vector<Rational> gammas;

  std::size_t count() const { return gammas.size() - 1; }
  const Rational& operator[](std::size_t i) const { return gammas[i]; }
};

Rational lf_value(const PolyhedralLF& lf, std::span<const Rational> x);

/// Least rho* with ||L A x|| <= rho* ||L x|| for all x, by one LP per row of
/// [L; -L] A over the unit sublevel set.
Rational verify_contraction(const PolyhedralLF& lf, const LinearSystem& sys);

/// Gamma_{i+1} = Gamma_i / rho, truncated at gamma_X; N is the least count
/// with gamma_D / rho^N >= gamma_X.
LevelSequence level_sequence(const Rational& gamma_d, const Rational& gamma_x,
                             const Rational& rho);

/// {x : -gamma <= (L x)_j <= gamma for all j}.
Cell sublevel_cell(const PolyhedralLF& lf, const Rational& gamma);

/// S_0 = P_{Gamma_0}; S_i = P_{Gamma_i} \ P_{Gamma_{i-1}} (outer closed,
/// inner open).
std::vector<Region> slices(const PolyhedralLF& lf, const LevelSequence& seq);

/// True iff A P_{Gamma_i} is inside P_{Gamma_{i-1}} for every i >= 1.
bool slice_descent_check(const PolyhedralLF& lf, const LinearSystem& sys,
                         const LevelSequence& seq);

}  // namespace polybisim
