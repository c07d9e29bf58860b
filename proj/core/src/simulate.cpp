#include "polybisim/simulate.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include "polybisim/error.hpp"
#include "polybisim/lp.hpp"

namespace polybisim {

Trajectory simulate(const Workspace& ws, const Point& x0) {
  if (x0.size() != ws.dimension()) {
    throw Error(ErrorCode::kDimension, "initial state has the wrong dimension");
  }
  if (!ws.in_working_set(x0)) throw Error(ErrorCode::kOutsideDomain, "initial state lies outside X");

  const std::size_t limit = ws.levels().count();
  Trajectory t;
  Point x = x0;
  while (!ws.in_target(x)) {
    if (t.word.size() == limit) {
      throw Error(ErrorCode::kInvariant, "trajectory did not reach D within N steps");
    }
    t.word.push_back(observation_of(x, ws.regions(), ws.working_set(), ws.target_set()));
    t.points.push_back(x);
    x = ws.system().step(x);
  }
  t.points.push_back(std::move(x));
  return t;
}

LassoWord to_lasso(const Trajectory& t, const std::vector<ObservedRegion>& regions) {
  std::vector<Letter> prefix;
  prefix.reserve(t.word.size());
  for (const auto& o : t.word) prefix.push_back(letter_of(o, regions));
  return LassoWord(std::move(prefix), {Letter::of(kTargetAtom)});
}

namespace {

Rational random_fraction(std::mt19937_64& rng, unsigned long denominator) {
  std::uniform_int_distribution<unsigned long> pick(0, denominator - 1);
  Rational r(static_cast<long>(pick(rng)), static_cast<long>(denominator));
  r.canonicalize();
  return r;
}

}  // namespace

Point sample_in_cell(const Cell& c, std::mt19937_64& rng) {
  const Point center = sample_point(c);
  if (c.constraints().empty()) return center;

  std::vector<Vector> rows;
  std::vector<Rational> rhs;
  for (const auto& con : c.constraints()) {
    rows.push_back(con.normal);
    rhs.push_back(con.offset);
  }
  std::uniform_int_distribution<int> coef(-8, 8);
  Vector objective(c.dimension());
  for (auto& v : objective) v = coef(rng);
  const lp::Result vertex = lp::maximize(rows, rhs, objective);
  if (vertex.status != lp::Status::kOptimal) return center;

  // (1 - t) center + t vertex with t < 1 keeps every strict row strict.
  const Rational t = random_fraction(rng, 64);
  Point x(c.dimension());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = center[j] + t * (vertex.point[j] - center[j]);
  return x;
}

Point sample_in_working_set(const Workspace& ws, std::mt19937_64& rng) {
  const auto box = bounding_box(ws.working_set());
  if (!box) throw Error(ErrorCode::kInvariant, "working set is unbounded");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Point x(ws.dimension());
    for (std::size_t j = 0; j < x.size(); ++j) {
      x[j] = box->lo[j] + (box->hi[j] - box->lo[j]) * random_fraction(rng, 1024);
    }
    if (ws.in_working_set(x)) return x;
  }
  throw Error(ErrorCode::kInvariant, "rejection sampling over X failed");
}

CrossValidation cross_validate(const Workspace& ws, const Abstraction& abs, const Formula& f,
                               const SatisfyingSet& sat, std::size_t sample_count,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& blocks = abs.partition.blocks();
  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  const std::unordered_set<BlockId> satisfying(sat.states.begin(), sat.states.end());

  CrossValidation cv;
  std::size_t next_block = 0;
  for (std::size_t k = 0; k < sample_count; ++k) {
    SampleCheck check;
    check.index = k;
    if (k % 4 != 3 && !order.empty()) {
      check.x = sample_in_cell(blocks[order[next_block]].cell, rng);
      next_block = (next_block + 1) % order.size();
    } else {
      check.x = sample_in_working_set(ws, rng);
    }
    check.block = cell_of(abs.partition, check.x);

    const LassoWord concrete = to_lasso(simulate(ws, check.x), ws.regions());
    const LassoWord abstract = word_of(abs.quotient, check.block, ws.regions());
    check.word_ok = concrete.prefix == abstract.prefix && concrete.cycle == abstract.cycle;
    check.verdict_ok = eval_ltl_lasso(f, concrete) == satisfying.contains(check.block);

    cv.word_mismatches += check.word_ok ? 0 : 1;
    cv.verdict_mismatches += check.verdict_ok ? 0 : 1;
    cv.samples.push_back(std::move(check));
  }
  return cv;
}

void write_report(std::ostream& out, const CrossValidation& cv) {
  out << "cross-validation: " << cv.samples.size() << " samples, " << cv.word_mismatches
      << " word mismatches, " << cv.verdict_mismatches << " verdict mismatches\n";
  for (const auto& s : cv.samples) {
    out << "sample " << s.index << " x=(";
    for (std::size_t j = 0; j < s.x.size(); ++j) out << (j ? "," : "") << to_string(s.x[j]);
    out << ") word_ok=" << (s.word_ok ? "true" : "false")
        << " verdict_ok=" << (s.verdict_ok ? "true" : "false") << '\n';
  }
}

}  // namespace polybisim
