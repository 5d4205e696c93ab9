#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symcert/errors.hpp"
#include "symcert/exact_linalg.hpp"
#include "symcert/symplectic.hpp"

using namespace symcert;
using symcert::testing::random_vector;

TEST_CASE("standard_space") {
  CHECK(standard_space(1).form == IntMatrix{{0, 1}, {-1, 0}});
  CHECK(standard_space(2).form ==
        IntMatrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  for (std::size_t g = 1; g <= 8; ++g) {
    const auto s = standard_space(g);
    CHECK(det_bareiss(s.form) == 1);
    CHECK(s.form.transpose() == Integer(-1) * s.form);
  }
  CHECK_THROWS_AS(standard_space(0), PreconditionError);
}

TEST_CASE("is_symplectic") {
  const auto s = standard_space(2);
  CHECK(is_symplectic(IntMatrix::identity(4), s));
  CHECK_FALSE(is_symplectic(Integer(2) * IntMatrix::identity(4), s));
  CHECK(is_symplectic(transvection(IntVector{1, 2, -1, 0}, Integer(3), s), s));
  CHECK_THROWS_AS(is_symplectic(IntMatrix::identity(2), s), ShapeError);
}

TEST_CASE("transvection on a single handle") {
  const auto s = standard_space(1);
  // e_a -> a + i(a, a) a = a; e_b -> b + i(b, a) a = b - a.
  const IntMatrix t = transvection(class_a(1, 1), Integer(1), s);
  CHECK(t == IntMatrix{{1, -1}, {0, 1}});
  CHECK(trace(t) == 2);
  CHECK(transvection(IntVector{0, 0}, Integer(5), s) == IntMatrix::identity(2));
}

TEST_CASE("transvection reproduces x - g i(x, c) c at exponent -g") {
  const auto s = standard_space(2);
  const IntVector eta = class_b(2, 1), alpha = class_a(2, 1);
  for (long g = 1; g <= 6; ++g) {
    const IntVector image = transvection(alpha, Integer(-g), s).apply(eta);
    const Integer pairing = algebraic_intersection(eta, alpha, s.form);
    IntVector expected = eta;
    for (std::size_t i = 0; i < 4; ++i) expected[i] -= g * pairing * alpha[i];
    CHECK(image == expected);
  }
}

TEST_CASE("transvection properties") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> expo(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t g = 1 + trial % 5;
    const auto s = standard_space(g);
    const IntVector c = random_vector(rng, 2 * g, -3, 3);
    const long j = expo(rng), k = expo(rng);
    const IntMatrix tj = transvection(c, Integer(j), s);
    const IntMatrix tk = transvection(c, Integer(k), s);
    const IntMatrix id = IntMatrix::identity(2 * g);

    REQUIRE(tj == symcert::testing::transvection_reference(c, j, s.form));
    REQUIRE(is_symplectic(tj, s));
    REQUIRE(((tj - id) * (tj - id)).is_zero());
    REQUIRE(det_bareiss(tj) == 1);
    REQUIRE(trace(tj) == Integer(static_cast<long>(2 * g)));
    REQUIRE(tj * tk == transvection(c, Integer(j + k), s));

    // A class orthogonal to c: project a random vector.
    const IntVector d = random_vector(rng, 2 * g, -3, 3);
    const Integer dc = algebraic_intersection(d, c, s.form);
    if (dc == 0) {
      const IntMatrix td = transvection(d, Integer(1), s);
      REQUIRE(tj * td == td * tj);
    }
  }
}

TEST_CASE("commuting transvections along disjoint handles") {
  const auto s = standard_space(3);
  const IntMatrix t1 = transvection(class_a(3, 1), Integer(2), s);
  const IntMatrix t2 = transvection(class_b(3, 2), Integer(-1), s);
  const IntMatrix t3 = transvection(IntVector{1, 0, 1, 0, 0, 0}, Integer(1), s);
  CHECK(t1 * t2 == t2 * t1);
  CHECK(t1 * t3 == t3 * t1);
}

namespace {

CurveTable genus_two_curves() {
  CurveTable curves;
  curves.add({"alpha", class_a(2, 1), false, {{"beta", 0}}});
  curves.add({"phi_alpha", class_a(2, 1), false, {}});
  curves.add({"beta", IntVector(4), true, {{"alpha", 0}}});
  curves.add({"phi_beta", IntVector(4), true, {}});
  return curves;
}

}  // namespace

TEST_CASE("evaluate_twist_word") {
  const auto s = standard_space(2);
  const CurveTable curves = genus_two_curves();

  CHECK(evaluate_twist_word(TwistWord{}, curves, s) == IntMatrix::identity(4));
  CHECK(evaluate_twist_word({{{"beta", 1}, {"phi_beta", -1}}}, curves, s) ==
        IntMatrix::identity(4));
  CHECK(evaluate_twist_word({{{"beta", 1}, {"phi_beta", -1}, {"phi_alpha", -1}}}, curves, s) ==
        transvection(class_a(2, 1), Integer(-1), s));

  CHECK_THROWS_AS(evaluate_twist_word({{{"gamma", 1}}}, curves, s), PreconditionError);
  CHECK_THROWS_AS(evaluate_twist_word({{{"alpha", 0}}}, curves, s), PreconditionError);
}

TEST_CASE("word composition applies the rightmost letter first") {
  const auto s = standard_space(1);
  CurveTable curves;
  curves.add({"a", class_a(1, 1), false, {}});
  curves.add({"b", class_b(1, 1), false, {}});
  const IntMatrix ta = transvection(class_a(1, 1), Integer(1), s);
  const IntMatrix tb = transvection(class_b(1, 1), Integer(1), s);
  const IntMatrix w = evaluate_twist_word({{{"a", 1}, {"b", 1}}}, curves, s);
  const IntVector x{1, 2};
  CHECK(w.apply(x) == ta.apply(tb.apply(x)));
  CHECK(w != tb * ta);
}

TEST_CASE("CurveTable validation") {
  CurveTable t;
  CHECK_THROWS_AS(t.add({"sep", IntVector{1, 0}, true, {}}), PreconditionError);
  CHECK_THROWS_AS(t.add({"self", IntVector{1, 0}, false, {{"self", 2}}}), PreconditionError);
  t.add({"a", IntVector{1, 0}, false, {{"b", 1}}});
  CHECK_THROWS_AS(t.add({"b", IntVector{0, 1}, false, {{"a", 2}}}), PreconditionError);
  t.add({"b", IntVector{0, 1}, false, {{"a", 1}}});
  CHECK_THROWS_AS(t.add({"a", IntVector{0, 0}, false, {}}), PreconditionError);
  CHECK(t.size() == 2);
}

TEST_CASE("random twist words stay symplectic") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_int_distribution<long> expo(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t g = 1 + trial % 10;
    const auto s = standard_space(g);
    CurveTable curves;
    for (int i = 0; i < 4; ++i) {
      curves.add({"c" + std::to_string(i), random_vector(rng, 2 * g, -3, 3), false, {}});
    }
    TwistWord w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      long e = expo(rng);
      if (e == 0) e = -1;
      w.letters.push_back({"c" + std::to_string(i % 4), e});
    }
    REQUIRE(is_symplectic(evaluate_twist_word(w, curves, s), s));
  }
}

TEST_CASE("m_value") {
  const auto s = standard_space(2);
  CHECK(m_value(IntMatrix::identity(4), s) == 4);
  CHECK(m_value(transvection(class_a(2, 1), Integer(-1), s), s) == 3);
  CHECK(m_value(transvection(class_a(2, 1), Integer(1), s) *
                    transvection(class_a(2, 2), Integer(1), s),
                s) == 2);
  CHECK_THROWS_AS(m_value(Integer(2) * IntMatrix::identity(4), s), PreconditionError);
}

TEST_CASE("m_value is basis independent") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t g = 1 + trial % 4;
    const auto s = standard_space(g);
    const IntMatrix m = symcert::testing::planted_fixed_block(rng, g, trial % (2 * g + 1));
    const IntMatrix p = symcert::testing::random_symplectic(rng, g);
    const IntMatrix conj = p * m * inverse_unimodular(p);
    REQUIRE(m_value(conj, s) == m_value(m, s));
  }
}

TEST_CASE("is_torelli") {
  const auto s = standard_space(2);
  CHECK(is_torelli(IntMatrix::identity(4)));
  CHECK_FALSE(is_torelli(transvection(class_b(2, 2), Integer(1), s)));
  CHECK(is_torelli(transvection(IntVector(4), Integer(1), s) *
                   transvection(IntVector(4), Integer(-3), s)));
  CHECK_THROWS_AS(is_torelli(IntMatrix(2, 3)), ShapeError);
}

TEST_CASE("orbit_sum_subspace examples") {
  const IntMatrix shift = IntMatrix::cyclic_shift(16);
  for (unsigned k = 0; k < 4; ++k) {
    const auto r = orbit_sum_subspace(shift, unit_vector(16, 0), 4, k);
    CHECK(r.dimension == (1U << k));
    CHECK(r.invariant);
  }
  const IntVector c{2, -1, 0, 5};
  for (unsigned k = 0; k < 3; ++k) {
    const auto r = orbit_sum_subspace(IntMatrix::identity(4), c, 3, k);
    CHECK(r.dimension == 1);
    CHECK(r.invariant);
  }
  const auto ones = orbit_sum_subspace(IntMatrix::cyclic_shift(8), IntVector(8, 1), 3, 2);
  CHECK(ones.dimension == 1);
  CHECK(ones.invariant);
}

TEST_CASE("orbit_sum_subspace reports an unfixed orbit sum distinctly") {
  // Shift on 3 coordinates has period 3, so the 4-term orbit sum of e_0 is
  // (2, 1, 1), which the shift moves.
  CHECK_THROWS_AS(orbit_sum_subspace(IntMatrix::cyclic_shift(3), unit_vector(3, 0), 2, 1),
                  OrbitSumNotFixed);
  CHECK_THROWS_AS(orbit_sum_subspace(IntMatrix::identity(2), IntVector{1, 0}, 2, 2),
                  PreconditionError);
}
