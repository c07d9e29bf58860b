#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polybisim/error.hpp"
#include "polybisim/pipeline.hpp"

using namespace polybisim;

namespace {

enum Exit { kOk = 0, kInputError = 1, kInvariantViolation = 2, kInternalError = 3 };

struct Overrides {
  std::optional<std::string> out_dir;
  std::optional<std::size_t> samples;
  bool svg = false;
  std::optional<std::uint64_t> seed;
};

ProblemSpec load(const std::string& path, const Overrides& o) {
  ProblemSpec spec = load_problem(path);
  if (o.out_dir) spec.options.out_dir = *o.out_dir;
  if (o.samples) spec.options.sample_count = *o.samples;
  if (o.svg) spec.options.svg = true;
  if (o.seed) spec.options.seed = *o.seed;
  return spec;
}

Point parse_point(const std::string& text) {
  Point x;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) x.push_back(parse_rational(item));
  return x;
}

std::string format_point(const Point& x) {
  std::string s = "(";
  for (std::size_t j = 0; j < x.size(); ++j) s += (j ? ", " : "") + to_string(x[j]);
  return s + ")";
}

int run_check_lf(const ProblemSpec& spec) {
  const Workspace ws = spec.workspace();
  const ContractionReport r = check_contraction(ws);
  std::cout << "rho*: " << to_string(r.rho_star) << " (~" << to_double(r.rho_star) << ")\n"
            << "declared rho: " << to_string(r.rho) << '\n'
            << "levels: N=" << ws.levels().count() << '\n';
  if (!r.within_rho) std::cout << "slice descent: " << (r.descent_ok ? "holds" : "fails") << '\n';
  std::cout << (r.certified() ? "certified\n" : "NOT certified\n");
  return r.certified() ? kOk : kInputError;
}

int run_simulate(const ProblemSpec& spec, const std::string& x0_text) {
  const Workspace ws = spec.workspace();
  const Trajectory t = simulate(ws, parse_point(x0_text));
  for (std::size_t k = 0; k < t.points.size(); ++k) {
    const Observation o = k < t.word.size() ? t.word[k] : Observation::target();
    std::cout << "x" << k << " = " << format_point(t.points[k]) << "  V=" << to_double(lf_value(ws.lf(), t.points[k]))
              << "  obs=" << observation_name(o, ws.regions()) << '\n';
  }
  std::cout << "word:";
  for (const auto& o : t.word) std::cout << ' ' << observation_name(o, ws.regions());
  std::cout << " (PI_D)^omega\n";
  return kOk;
}

int run_pipeline_command(const ProblemSpec& spec, PipelineStage stage) {
  const PipelineReport r = run_pipeline(spec, stage, std::cout);
  if (r.cross_validation && !r.cross_validation->ok()) {
    std::cerr << "error: cross-validation found mismatches\n";
    return kInvariantViolation;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bisimulation quotients of stable linear systems from polyhedral Lyapunov functions"};
  app.require_subcommand(1);

  Overrides overrides;
  std::string problem;
  std::string x0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("problem", problem, "problem file (JSON)")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out-dir", overrides.out_dir, "directory for exports");
    cmd->add_option("--samples", overrides.samples, "cross-validation sample count");
    cmd->add_flag("--svg", overrides.svg, "write 2-D SVG plots");
    cmd->add_option("--seed", overrides.seed, "sampling seed");
  };
  auto* abstract = app.add_subcommand("abstract", "build and export the quotient");
  auto* verify = app.add_subcommand("verify", "full pipeline: quotient, formula, satisfying set");
  auto* check_lf = app.add_subcommand("check-lf", "certify the Lyapunov function only");
  auto* sim = app.add_subcommand("simulate", "simulate one trajectory exactly");
  for (auto* cmd : {abstract, verify, check_lf, sim}) add_common(cmd);
  sim->add_option("--x0", x0, "initial state, comma separated (e.g. 7,-1/2)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const ProblemSpec spec = load(problem, overrides);
    if (*abstract) return run_pipeline_command(spec, PipelineStage::kAbstract);
    if (*verify) return run_pipeline_command(spec, PipelineStage::kVerify);
    if (*check_lf) return run_check_lf(spec);
    return run_simulate(spec, x0);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::kInvariant) return kInvariantViolation;
    if (e.code() == ErrorCode::kPrecondition) return kInternalError;
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}
