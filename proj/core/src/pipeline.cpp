#include "polybisim/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <ostream>

#include "polybisim/error.hpp"
#include "polybisim/svg.hpp"

namespace polybisim {
namespace {

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kMalformed, "cannot write " + path.string());
  return out;
}

}  // namespace

ContractionReport check_contraction(const Workspace& ws) {
  ContractionReport r;
  r.rho = ws.lf().rho();
  r.rho_star = verify_contraction(ws.lf(), ws.system());
  r.within_rho = r.rho_star <= r.rho;
  if (!r.within_rho) r.descent_ok = slice_descent_check(ws.lf(), ws.system(), ws.levels());
  return r;
}

PipelineReport run_pipeline(const ProblemSpec& spec, PipelineStage stage, std::ostream& log) {
  PipelineReport report;
  Stopwatch clock;
  const Workspace ws = spec.workspace();
  const auto& regions = ws.regions();

  report.contraction = check_contraction(ws);
  report.levels = ws.levels().count();
  log << "contraction: rho*=" << to_string(report.contraction.rho_star) << " (~"
      << to_double(report.contraction.rho_star) << "), declared rho=" << to_string(report.contraction.rho)
      << (report.contraction.within_rho ? ", certified" : report.contraction.descent_ok ? ", slice descent holds" : ", NOT certified")
      << " [" << clock.lap() << " s]\n";
  if (!report.contraction.certified()) {
    throw Error(ErrorCode::kContraction, "the Lyapunov function is not certified for the declared rho");
  }
  log << "levels: N=" << report.levels << '\n';

  const Abstraction abs = build_quotient(ws);
  report.states = abs.quotient.size();
  log << "quotient: " << report.states << " states [" << clock.lap() << " s]\n";

  const std::filesystem::path dir = spec.options.out_dir;
  std::filesystem::create_directories(dir);
  {
    const auto path = dir / "quotient.txt";
    auto out = open_output(path);
    write_quotient(out, abs, regions);
    report.outputs.push_back(path);
  }

  Region highlight(ws.dimension());
  if (stage == PipelineStage::kVerify) {
    if (spec.formula.empty()) throw Error(ErrorCode::kMalformed, "verification needs a formula");
    std::vector<std::string> alphabet{kTargetAtom};
    for (const auto& r : regions) alphabet.push_back(r.label);
    const Formula f = parse_ltl(spec.formula, alphabet);
    const BuchiAutomaton buchi = to_buchi(f);
    const ProductAutomaton prod = product(abs.quotient, buchi, regions);
    const std::vector<bool> fstar = f_star_scc(prod.graph);
    const SatisfyingSet sat = satisfying_states(prod, fstar, abs.quotient, abs.partition);
    report.satisfying = sat.states.size();
    highlight = sat.region;
    log << "formula: " << to_string(f) << '\n'
        << "automaton: " << buchi.size() << " states, product: " << prod.graph.size() << " nodes\n"
        << "satisfying: " << sat.states.size() << " of " << report.states << " states [" << clock.lap()
        << " s]\n";

    const auto path = dir / "satisfying.txt";
    auto out = open_output(path);
    write_satisfying(out, sat, abs, regions);
    report.outputs.push_back(path);

    if (spec.options.sample_count > 0) {
      CrossValidation cv = cross_validate(ws, abs, f, sat, spec.options.sample_count, spec.options.seed);
      log << "cross-validation: " << cv.samples.size() << " samples, " << cv.word_mismatches
          << " word mismatches, " << cv.verdict_mismatches << " verdict mismatches [" << clock.lap()
          << " s]\n";
      const auto samples_path = dir / "samples.txt";
      auto samples = open_output(samples_path);
      write_report(samples, cv);
      report.outputs.push_back(samples_path);
      report.cross_validation = std::move(cv);
    }
  }

  if (spec.options.svg) {
    if (ws.dimension() != 2) {
      log << "svg: skipped, plots need a 2-D state space\n";
    } else {
      const auto path = dir / "partition.svg";
      auto out = open_output(path);
      write_svg(out, ws, abs.partition, Region(ws.dimension()));
      report.outputs.push_back(path);
      if (stage == PipelineStage::kVerify) {
        const auto sat_path = dir / "satisfying.svg";
        auto sat_out = open_output(sat_path);
        write_svg(sat_out, ws, abs.partition, highlight);
        report.outputs.push_back(sat_path);
      }
    }
  }
  for (const auto& p : report.outputs) log << "wrote " << p.string() << '\n';
  return report;
}

}  // namespace polybisim
