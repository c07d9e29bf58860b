#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polybisim/abstraction.hpp"
#include "polybisim/verify.hpp"

namespace polybisim {

struct ProblemOptions {
  std::size_t sample_count = 0;
  std::string out_dir = "out";
  bool svg = false;
  std::uint64_t seed = 1;
};

/// A problem file: dynamics, Lyapunov function, levels, regions, formula.
struct ProblemSpec {
  Matrix A;
  Matrix L;
  Rational rho;
  Rational gamma_d;
  Rational gamma_x;
  std::vector<ObservedRegion> regions;
  std::string formula;  // may be empty when only the abstraction is wanted
  ProblemOptions options;

  Workspace workspace() const;
};

/// JSON document with keys A, L, rho, gamma_D, gamma_X, regions [{name, H, h}],
/// formula and options {sample_count, out_dir, svg, seed}. Numbers are
/// decimal strings (JSON integers are also accepted). Validates everything a
/// Workspace checks, plus the formula's atoms.
ProblemSpec parse_problem(std::string_view json_text);
ProblemSpec load_problem(const std::filesystem::path& path);

/// Plain-text quotient: a header line, then
///   state <id> slice=<i> obs=<label|EMPTY|PI_D> -> <succ>
/// per state in (slice, id) order, then
///   cell <id>: <a_1> ... <a_n> <=|< <b> ; ...
/// per state with rationals written as p/q.
void write_quotient(std::ostream& out, const Abstraction& abs,
                    const std::vector<ObservedRegion>& regions);

struct QuotientFile {
  struct Entry {
    BlockId id = 0;
    std::size_t slice_index = 0;
    std::string observation;
    BlockId successor = 0;
    Cell cell = Cell(1);
  };
  std::size_t dimension = 0;
  std::vector<Entry> states;
};

/// Reads the format above back. Throws kParse on malformed input.
QuotientFile read_quotient(std::istream& in);

/// The satisfying states' cells in the quotient format, then
///   satisfying: <k> of <m> states
void write_satisfying(std::ostream& out, const SatisfyingSet& sat, const Abstraction& abs,
                      const std::vector<ObservedRegion>& regions);

}  // namespace polybisim
