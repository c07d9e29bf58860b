#pragma once

#include <filesystem>
#include <string>

#include "polybisim/io.hpp"
#include "polybisim/rational.hpp"

namespace polybisim::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(POLYBISIM_FIXTURES_DIR) / name;
}

inline Rational q(const char* text) { return parse_rational(text); }

inline const ProblemSpec& planar_spec() {
  static const ProblemSpec spec = load_problem(fixture("planar.json"));
  return spec;
}

inline const Workspace& planar_workspace() {
  static const Workspace ws = planar_spec().workspace();
  return ws;
}

// Built once per test binary; takes a few seconds.
inline const Abstraction& planar_abstraction() {
  static const Abstraction abs = build_quotient(planar_workspace());
  return abs;
}

inline const ProblemSpec& toy_spec() {
  static const ProblemSpec spec = load_problem(fixture("toy_1d.json"));
  return spec;
}

}  // namespace polybisim::testing
