// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Seeds, sample counts and time limits are fixed below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "symcert/cyclic_cover.hpp"
#include "symcert/exact_linalg.hpp"
#include "symcert/lefschetz.hpp"
#include "symcert/spread.hpp"
#include "symcert/symplectic.hpp"

using namespace symcert;
using symcert::testing::planted_fixed_block;
using symcert::testing::random_matrix;
using symcert::testing::random_sl;
using symcert::testing::random_vector;

namespace {

constexpr std::uint64_t kSeedDetTrace = 1001;
constexpr std::uint64_t kSeedWitness = 1002;
constexpr std::uint64_t kSeedLowerBound = 1003;
constexpr std::uint64_t kSeedTwistWords = 1010;

constexpr double kLimitDetTrace = 10.0;
constexpr double kLimitWitness = 30.0;
constexpr double kLimitCover = 10.0;
constexpr double kLimitSpread = 5.0;

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string timing(double secs, double limit) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s (limit %.0f s)", secs, limit);
  return buf;
}

Outcome det_trace_identity() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(kSeedDetTrace);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t m = 1 + i % 6;
    const IntMatrix a = random_matrix(rng, m, m, -5, 5);
    if (det_from_traces(a) != det_bareiss(a)) ++mismatches;
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < kLimitDetTrace,
          "1000 matrices, sizes 1..6, " + std::to_string(mismatches) + " mismatches, " +
              timing(secs, kLimitDetTrace)};
}

Outcome witness_existence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(kSeedWitness);
  const std::size_t sizes[] = {1, 3, 5, 7};
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t m = sizes[i % 4];
    const IntMatrix a = random_sl(rng, m);
    const TraceWitness w = trace_witness(a);
    if (w.j < 1 || w.j > m || w.trace < 1 || trace(mat_pow(a, w.j)) != w.trace) ++failures;
  }
  const double secs = seconds_since(t0);
  return {failures == 0 && secs < kLimitWitness,
          "1000 SL(m, Z) matrices, m in {1,3,5,7}, " + std::to_string(failures) +
              " failures, " + timing(secs, kLimitWitness)};
}

Outcome lower_bound_certificates() {
  std::mt19937_64 rng(kSeedLowerBound);
  std::uniform_int_distribution<std::size_t> genus_dist(2, 8);
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t g = genus_dist(rng);
    std::uniform_int_distribution<std::size_t> k_dist(3, 2 * g);
    const std::size_t k = k_dist(rng);
    const IntMatrix m = planted_fixed_block(rng, g, k);
    const LowerBoundCert cert = lower_bound_certificate(m, k);
    const bool ok = cert.witness_j <= 2 * g - k + 1 && cert.lefschetz_at_j < 0 &&
                    cert.invariant_failure().empty() &&
                    lefschetz_number(m, cert.witness_j) == cert.lefschetz_at_j;
    if (!ok) ++bad;
  }
  return {bad == 0, "200 planted blocks, g <= 8, 3 <= k <= 2g, " + std::to_string(bad) +
                        " violations"};
}

Outcome cover_construction() {
  const auto t0 = Clock::now();
  int bad = 0;
  for (std::size_t d = 2; d <= 64; ++d) {
    const CoverModel cover = build_cover_space(d);
    if (m_value(build_paper_map(d), cover.form) != 2 * d + 1) ++bad;
  }
  const double secs = seconds_since(t0);
  return {bad == 0 && secs < kLimitCover,
          "m = 2d+1 for d = 2..64, " + std::to_string(bad) + " mismatches, " +
              timing(secs, kLimitCover)};
}

Outcome torelli_variant() {
  int bad = 0;
  for (std::size_t d = 2; d <= 64; ++d) {
    const IntMatrix t = build_torelli_variant(d);
    const CoverModel cover = build_cover_space(d);
    if (!t.is_identity() || m_value(t, cover.form) != 2 * d + 2) ++bad;
  }
  return {bad == 0, "identity with m = 2d+2 for d = 2..64, " + std::to_string(bad) + " mismatches"};
}

Outcome normal_generation() {
  int bad = 0;
  for (std::size_t d = 2; d <= 64; ++d) {
    const IntMatrix map = build_paper_map(d);
    const CoverModel cover = build_cover_space(d);
    const ObstructionOutcome ob = normal_generation_obstruction(map, d, cover.form);
    if (!reduce_mod(map, Integer(static_cast<unsigned long>(d))).is_identity() || !ob.cert ||
        !ob.cert->matrix_mod_d_is_identity) {
      ++bad;
    }
  }
  return {bad == 0, "identity mod d with certificate for d = 2..64, " + std::to_string(bad) +
                        " failures"};
}

Outcome numeric_chain() {
  const char* argv[] = {"symcert", "paper-example"};
  std::ostringstream out, err;
  const int rc = cli::run_cli(2, argv, out, err);
  const std::string text = out.str();
  const char* required[] = {
      "\ni(lambda, beta) = 36\n",   "\ni(lambda, alpha) = 12\n",
      "\ni(phi.alpha, alpha) = 144\n", "\ni(phi.beta, alpha) = 432\n",
      " = 576\n",                   "\nbound(g) = 1152/(g-579) for g > 579\n",
  };
  int missing = 0;
  for (const char* line : required) {
    if (text.find(line) == std::string::npos) ++missing;
  }
  const bool q_ok = quantitative_restriction(1731) == 1;
  return {rc == 0 && missing == 0 && q_ok,
          "36, 12, 144, 432, 576, 1152/(g-579): " + std::to_string(missing) +
              " missing; bound(1731) = " + quantitative_restriction(1731).get_str()};
}

Outcome spread_vs_automaton() {
  const auto t0 = Clock::now();
  constexpr std::uint64_t kIntSum = 576;
  int bad = 0;
  for (std::uint64_t g = 580; g <= 10000; ++g) {
    const auto b = upper_bound_eq2(g, kIntSum, 3);
    if (!b) {
      ++bad;
      continue;
    }
    Rational expected(2, static_cast<unsigned long>(b->n_star));
    expected.canonicalize();
    SpreadState s = spread_initial(g);
    for (std::uint64_t n = 0; n < b->n_star; ++n) s = spread_step(s, half_growth_for(kIntSum));
    const bool ok = s.misses_block() && b->automaton_misses_block &&
                    b->bound == expected &&
                    (g <= 3 + kIntSum || b->bound <= linearized_bound(g, kIntSum, 3));
    if (!ok) ++bad;
  }
  const double secs = seconds_since(t0);
  return {bad == 0 && secs < kLimitSpread,
          "g = 580..10000, S = 576, offset 3, " + std::to_string(bad) + " failures, " +
              timing(secs, kLimitSpread)};
}

Outcome orbit_sums() {
  int bad = 0;
  int cases = 0;
  for (unsigned n = 1; n <= 10; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    const IntMatrix shift = IntMatrix::cyclic_shift(dim);
    const IntVector c = unit_vector(dim, 0);
    for (unsigned k = 0; k < n; ++k) {
      ++cases;
      const OrbitSumResult r = orbit_sum_subspace(shift, c, n, k);
      if (r.dimension != (std::size_t{1} << k) || !r.invariant) ++bad;
    }
  }
  return {bad == 0, std::to_string(cases) + " shift cases, 0 <= k < n <= 10, " +
                        std::to_string(bad) + " failures"};
}

Outcome symplectic_closure() {
  std::mt19937_64 rng(kSeedTwistWords);
  std::uniform_int_distribution<std::size_t> genus_dist(1, 10);
  std::uniform_int_distribution<int> len_dist(0, 8);
  std::uniform_int_distribution<int> curve_dist(0, 5);
  std::uniform_int_distribution<long> expo_dist(-3, 3);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t g = genus_dist(rng);
    const SymplecticSpace s = standard_space(g);
    CurveTable curves;
    for (int c = 0; c < 6; ++c) {
      curves.add({"c" + std::to_string(c), random_vector(rng, 2 * g, -3, 3), false, {}});
    }
    TwistWord w;
    const int len = len_dist(rng);
    for (int l = 0; l < len; ++l) {
      long e = expo_dist(rng);
      if (e == 0) e = 1;
      w.letters.push_back({"c" + std::to_string(curve_dist(rng)), e});
    }
    const IntMatrix m = evaluate_twist_word(w, curves, s);
    if (m.transpose() * s.form * m != s.form) ++bad;
  }
  return {bad == 0, "1000 twist words, genus <= 10, length <= 8, " + std::to_string(bad) +
                        " non-symplectic"};
}

Outcome surjectivity() {
  const SurjectivityReport r = sp2_mod2_surjectivity_sanity();
  return {r.surjective && r.classes_found == 6,
          std::to_string(r.classes_found) + " residue classes, surjective = " +
              (r.surjective ? "true" : "false")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"determinant-trace identity", det_trace_identity},
      {"trace witness existence", witness_existence},
      {"lower-bound certificates", lower_bound_certificates},
      {"cover construction m = 2d+1", cover_construction},
      {"Torelli variant m = 2d+2", torelli_variant},
      {"normal-generation obstruction", normal_generation},
      {"worked numeric chain", numeric_chain},
      {"spread bound vs automaton", spread_vs_automaton},
      {"orbit-sum subspaces", orbit_sums},
      {"symplectic closure of twist words", symplectic_closure},
      {"Sp(2) mod 2 surjectivity", surjectivity},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::printf("%s %2zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
