#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "polybisim/io.hpp"
#include "polybisim/simulate.hpp"

namespace polybisim {

struct ContractionReport {
  Rational rho_star;
  Rational rho;
  bool within_rho = false;
  bool descent_ok = false;  // only evaluated when rho_star > rho

  bool certified() const { return within_rho || descent_ok; }
};

ContractionReport check_contraction(const Workspace& ws);

enum class PipelineStage { kAbstract, kVerify };

struct PipelineReport {
  ContractionReport contraction;
  std::size_t levels = 0;
  std::size_t states = 0;
  std::optional<std::size_t> satisfying;
  std::optional<CrossValidation> cross_validation;
  std::vector<std::filesystem::path> outputs;
};

/// Certify, abstract, and for kVerify also translate the formula, build the
/// product and extract the satisfying set, then cross-validate when samples
/// are requested. Writes quotient.txt, satisfying.txt, samples.txt and (2-D,
/// svg option) partition.svg / satisfying.svg into options.out_dir. Progress
/// and timings go to log.
PipelineReport run_pipeline(const ProblemSpec& spec, PipelineStage stage, std::ostream& log);

}  // namespace polybisim
