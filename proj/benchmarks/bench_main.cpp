#include <benchmark/benchmark.h>

#include <random>

#include "polybisim/buchi.hpp"
#include "polybisim/io.hpp"
#include "polybisim/lp.hpp"

using namespace polybisim;

namespace {

const ProblemSpec& planar() {
  static const ProblemSpec spec = load_problem(std::string(POLYBISIM_FIXTURES_DIR) + "/planar.json");
  return spec;
}

// Random bounded cells in the plane with `extra` rows beyond a box.
std::vector<Cell> random_cells(std::size_t count, int extra) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> coef(-9, 9), off(-20, 20);
  std::vector<Cell> cells;
  for (std::size_t k = 0; k < count; ++k) {
    const Vector lo{Rational(-10), Rational(-10)}, hi{Rational(10), Rational(10)};
    std::vector<Constraint> rows = Cell::box(lo, hi).constraints();
    for (int e = 0; e < extra; ++e) rows.push_back({{Rational(coef(rng)), Rational(coef(rng), 7)}, Rational(off(rng), 3), e % 2 == 0});
    cells.emplace_back(2, std::move(rows));
  }
  return cells;
}

}  // namespace

static void BM_IsEmpty(benchmark::State& state) {
  const auto cells = random_cells(64, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_empty(cells[i++ % cells.size()]));
}
BENCHMARK(BM_IsEmpty)->Arg(2)->Arg(8)->Arg(24);

static void BM_Difference(benchmark::State& state) {
  const auto a = random_cells(32, 4);
  const auto b = random_cells(33, 4);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(difference(Region(a[i % a.size()]), Region(b[(i + 1) % b.size()])));
    ++i;
  }
}
BENCHMARK(BM_Difference);

static void BM_VerifyContraction(benchmark::State& state) {
  const PolyhedralLF lf(planar().L, planar().rho);
  const LinearSystem sys(planar().A);
  for (auto _ : state) benchmark::DoNotOptimize(verify_contraction(lf, sys));
}
BENCHMARK(BM_VerifyContraction)->Unit(benchmark::kMillisecond);

static void BM_ToBuchi(benchmark::State& state) {
  const Formula f = parse_ltl(planar().formula);
  for (auto _ : state) benchmark::DoNotOptimize(to_buchi(f));
}
BENCHMARK(BM_ToBuchi)->Unit(benchmark::kMicrosecond);

static void BM_BuildQuotient(benchmark::State& state) {
  const Workspace ws = planar().workspace();
  for (auto _ : state) benchmark::DoNotOptimize(build_quotient(ws));
}
BENCHMARK(BM_BuildQuotient)->Unit(benchmark::kSecond)->Iterations(1);

BENCHMARK_MAIN();
