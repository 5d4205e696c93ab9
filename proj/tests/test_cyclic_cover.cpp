#include <doctest.h>

#include "symcert/cyclic_cover.hpp"
#include "symcert/errors.hpp"
#include "symcert/exact_linalg.hpp"

using namespace symcert;

TEST_CASE("build_cover_space for d = 2") {
  const CoverModel c = build_cover_space(2);
  // gamma_0, gamma_1, delta_0, delta_1, eta, alpha
  const IntMatrix expected{{0, 0, 1, 0, 0, 0},  {0, 0, 0, 1, 0, 0}, {-1, 0, 0, 0, 0, 0},
                           {0, -1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, -1, 0}};
  CHECK(c.form == expected);
  CHECK(c.basis_labels ==
        std::vector<std::string>{"gamma_0", "gamma_1", "delta_0", "delta_1", "eta", "alpha"});
  CHECK(c.cover_genus() == 3);
  CHECK(c.dimension() == 6);
}

TEST_CASE("cover form and deck transformation") {
  for (std::size_t d = 2; d <= 12; ++d) {
    const CoverModel c = build_cover_space(d);
    CHECK(c.form.transpose() == Integer(-1) * c.form);
    CHECK(det_bareiss(c.form) == 1);
    CHECK(is_symplectic(c.deck, c.form));
    CHECK(mat_pow(c.deck, d).is_identity());
    for (std::size_t j = 1; j < d; ++j) CHECK_FALSE(mat_pow(c.deck, j).is_identity());
    CHECK(c.deck.apply(unit_vector(c.dimension(), c.eta())) == unit_vector(c.dimension(), c.eta()));
  }
  CHECK_THROWS_AS(build_cover_space(1), PreconditionError);
  CHECK_THROWS_AS(build_cover_space(0), PreconditionError);
}

TEST_CASE("lift_separating_twist") {
  CHECK(lift_separating_twist(3, 1) == IntMatrix::identity(8));
  CHECK(lift_separating_twist(5, -1) == IntMatrix::identity(12));
  const IntMatrix m{{1, 2, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                    {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}};
  CHECK(lift_separating_twist(2, 4) * m == m);

  const BaseCurve beta{"beta", IntVector(4), true, {}};
  const BaseCurve alpha{"alpha", IntVector{1, 0, 0, 0}, false, {}};
  CHECK(lift_separating_twist(beta, 3, 1) == IntMatrix::identity(8));
  CHECK_THROWS_AS(lift_separating_twist(alpha, 3, 1), PreconditionError);
  CHECK_THROWS_AS(lift_separating_twist(3, 0), PreconditionError);
}

TEST_CASE("lift_multicurve_transvection") {
  for (std::size_t d = 2; d <= 6; ++d) {
    const CoverModel c = build_cover_space(d);
    const IntMatrix lifted = lift_multicurve_transvection(alpha_preimage_twist(c, -1), c);
    // d homologous components act as one transvection of exponent -d.
    const IntVector alpha = unit_vector(c.dimension(), c.alpha());
    CHECK(lifted == transvection(alpha, Integer(-static_cast<long>(d)), c.form));
  }

  const CoverModel c = build_cover_space(3);
  const LiftedMultiTwist zero({{IntVector(8), IntVector(8)}}, 2);
  CHECK(lift_multicurve_transvection(zero, c) == IntMatrix::identity(8));

  CHECK_THROWS_AS(LiftedMultiTwist({}, 0), PreconditionError);

  // A pairing row that disagrees with the form is rejected.
  IntVector bad_pairing(8);
  bad_pairing[c.gamma(0)] = 1;
  const LiftedMultiTwist bad({{unit_vector(8, c.alpha()), bad_pairing}}, 1);
  CHECK_THROWS_AS(lift_multicurve_transvection(bad, c), PreconditionError);
}

TEST_CASE("build_paper_map") {
  // Hand-written d = 2 matrix: identity except column eta has -2 in row alpha.
  IntMatrix expected = IntMatrix::identity(6);
  expected(5, 4) = -2;
  CHECK(build_paper_map(2) == expected);

  for (std::size_t d = 2; d <= 16; ++d) {
    const CoverModel c = build_cover_space(d);
    const IntMatrix m = build_paper_map(d);
    IntMatrix hand = IntMatrix::identity(c.dimension());
    hand(c.alpha(), c.eta()) = -static_cast<long>(d);
    CHECK(m == hand);
    CHECK(m_value(m, c.form) == 2 * d + 1);
    CHECK_FALSE(is_torelli(m));
    CHECK(c.deck * m == m * c.deck);
  }
  CHECK_THROWS_AS(build_paper_map(1), PreconditionError);
}

TEST_CASE("build_torelli_variant") {
  CHECK(build_torelli_variant(2) == IntMatrix::identity(6));
  CHECK(m_value(build_torelli_variant(2), build_cover_space(2).form) == 6);
  CHECK(build_torelli_variant(7) == IntMatrix::identity(16));
  CHECK(m_value(build_torelli_variant(7), build_cover_space(7).form) == 16);
  CHECK(is_torelli(build_torelli_variant(4)));
}

TEST_CASE("normal_generation_obstruction") {
  for (std::size_t d = 2; d <= 10; ++d) {
    const CoverModel c = build_cover_space(d);
    const auto out = normal_generation_obstruction(build_paper_map(d), d, c.form);
    REQUIRE(out.cert.has_value());
    CHECK_FALSE(out.offending.has_value());
    CHECK(out.cert->degree == d);
    CHECK(out.cert->matrix_mod_d_is_identity);
    CHECK(out.cert->depends_on == std::vector<std::string>{"Sp reduction surjectivity (cited)"});
  }

  const CoverModel c = build_cover_space(2);
  const IntMatrix t = transvection(unit_vector(6, c.alpha()), Integer(1), c.form);
  const auto refused = normal_generation_obstruction(t, 2, c.form);
  CHECK_FALSE(refused.cert.has_value());
  REQUIRE(refused.offending.has_value());
  CHECK(refused.offending->row == c.alpha());
  CHECK(refused.offending->col == c.eta());
  CHECK(refused.offending->value == 1);
  CHECK(refused.offending->residue == 1);

  const auto degenerate = normal_generation_obstruction(IntMatrix::identity(8), 3,
                                                        build_cover_space(3).form);
  CHECK(degenerate.cert.has_value());

  CHECK_THROWS_AS(normal_generation_obstruction(Integer(2) * IntMatrix::identity(6), 2, c.form),
                  PreconditionError);
  CHECK_THROWS_AS(normal_generation_obstruction(IntMatrix::identity(6), 1, c.form),
                  PreconditionError);
}

TEST_CASE("sp2_mod2_surjectivity_sanity") {
  const SurjectivityReport r = sp2_mod2_surjectivity_sanity();
  CHECK(r.surjective);
  CHECK(r.classes_found == 6);
  CHECK(r.group_order == 6);
  CHECK(r.identity_word_length == 0);
}
