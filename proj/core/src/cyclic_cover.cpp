#include "symcert/cyclic_cover.hpp"

#include <array>
#include <map>
#include <set>

#include "symcert/errors.hpp"
#include "symcert/exact_linalg.hpp"

namespace symcert {
namespace {

void require_degree(std::size_t degree) {
  if (degree < 2) {
    throw PreconditionError("cover degree must be at least 2, got " + std::to_string(degree));
  }
}

void require_nonzero(long exponent) {
  if (exponent == 0) throw PreconditionError("twist exponent must be nonzero");
}

}  // namespace

CoverModel build_cover_space(std::size_t degree) {
  require_degree(degree);
  CoverModel cover;
  cover.degree = degree;
  const std::size_t n = cover.dimension();

  for (std::size_t j = 0; j < degree; ++j) cover.basis_labels.push_back("gamma_" + std::to_string(j));
  for (std::size_t j = 0; j < degree; ++j) cover.basis_labels.push_back("delta_" + std::to_string(j));
  cover.basis_labels.emplace_back("eta");
  cover.basis_labels.emplace_back("alpha");

  cover.form = IntMatrix(n, n);
  for (std::size_t j = 0; j < degree; ++j) {
    cover.form(cover.gamma(j), cover.delta(j)) = 1;
    cover.form(cover.delta(j), cover.gamma(j)) = -1;
  }
  cover.form(cover.eta(), cover.alpha()) = 1;
  cover.form(cover.alpha(), cover.eta()) = -1;

  cover.deck = IntMatrix(n, n);
  for (std::size_t j = 0; j < degree; ++j) {
    cover.deck(cover.gamma(j + 1), cover.gamma(j)) = 1;
    cover.deck(cover.delta(j + 1), cover.delta(j)) = 1;
  }
  cover.deck(cover.eta(), cover.eta()) = 1;
  cover.deck(cover.alpha(), cover.alpha()) = 1;
  return cover;
}

IntMatrix lift_separating_twist(std::size_t degree, long exponent) {
  require_degree(degree);
  require_nonzero(exponent);
  return IntMatrix::identity(2 * degree + 2);
}

IntMatrix lift_separating_twist(const BaseCurve& curve, std::size_t degree, long exponent) {
  if (!curve.separating) {
    throw PreconditionError("curve '" + curve.id + "' is not separating");
  }
  return lift_separating_twist(degree, exponent);
}

LiftedMultiTwist::LiftedMultiTwist(std::vector<LiftedComponent> components, long exponent)
    : components_(std::move(components)), exponent_(exponent) {
  require_nonzero(exponent_);
  for (const auto& c : components_) {
    if (c.cls.size() != c.pairing.size()) {
      throw ShapeError("lifted component class and pairing row differ in length");
    }
  }
}

IntMatrix lift_multicurve_transvection(const LiftedMultiTwist& twist, const CoverModel& cover) {
  const std::size_t n = cover.dimension();
  IntMatrix result = IntMatrix::identity(n);
  const Integer e = twist.exponent();
  for (const auto& comp : twist.components()) {
    if (comp.cls.size() != n) throw ShapeError("lifted component has the wrong dimension");
    // pairing[i] = i(basis_i, comp) must agree with the form applied to the class.
    if (cover.form.apply(comp.cls) != comp.pairing) {
      throw PreconditionError("lifted component pairing row disagrees with the cover form");
    }
    if (algebraic_intersection(comp.cls, comp.cls, cover.form) != 0) {
      throw PreconditionError("lifted component class is not isotropic");
    }
    IntMatrix t = IntMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      if (sgn(comp.pairing[col]) == 0) continue;
      for (std::size_t row = 0; row < n; ++row) {
        if (sgn(comp.cls[row]) != 0) t(row, col) += e * comp.pairing[col] * comp.cls[row];
      }
    }
    result = result * t;
  }
  if (!is_symplectic(result, cover.form)) {
    throw InvariantViolation("lifted multitwist does not preserve the cover form");
  }
  return result;
}

LiftedMultiTwist alpha_preimage_twist(const CoverModel& cover, long exponent) {
  const IntVector alpha = unit_vector(cover.dimension(), cover.alpha());
  const IntVector pairing = cover.form.apply(alpha);
  std::vector<LiftedComponent> comps(cover.degree, LiftedComponent{alpha, pairing});
  return LiftedMultiTwist(std::move(comps), exponent);
}

IntMatrix build_paper_map(std::size_t degree) {
  const CoverModel cover = build_cover_space(degree);
  const IntMatrix beta_lift = lift_separating_twist(degree, 1);
  const IntMatrix phi_beta_lift = lift_separating_twist(degree, -1);
  const IntMatrix phi_alpha_lift =
      lift_multicurve_transvection(alpha_preimage_twist(cover, -1), cover);
  return beta_lift * phi_beta_lift * phi_alpha_lift;
}

IntMatrix build_torelli_variant(std::size_t degree) {
  return lift_separating_twist(degree, 1) * lift_separating_twist(degree, -1);
}

ObstructionOutcome normal_generation_obstruction(const IntMatrix& m, std::size_t degree,
                                                 const IntMatrix& form) {
  require_degree(degree);
  if (!is_symplectic(m, form)) {
    throw PreconditionError("normal_generation_obstruction: matrix does not preserve the form");
  }
  const Integer modulus = static_cast<unsigned long>(degree);
  const IntMatrix reduced = reduce_mod(m, modulus);

  ObstructionOutcome out;
  for (std::size_t r = 0; r < reduced.rows() && !out.offending; ++r) {
    for (std::size_t c = 0; c < reduced.cols(); ++c) {
      if (reduced(r, c) != (r == c ? 1 : 0)) {
        out.offending = OffendingEntry{r, c, m(r, c), reduced(r, c)};
        break;
      }
    }
  }
  if (out.offending) return out;

  const std::string d = std::to_string(degree);
  ObstructionCert cert;
  cert.degree = degree;
  cert.matrix_mod_d_is_identity = true;
  cert.statement =
      "The homology action is the identity mod " + d +
      ", so the map lies in the kernel of Mod -> Sp(2g, Z/" + d +
      "Z). That composition is surjective (cited, not verified), hence the "
      "kernel is a proper normal subgroup and the map is not a normal generator.";
  cert.depends_on = {"Sp reduction surjectivity (cited)"};
  out.cert = std::move(cert);
  return out;
}

SurjectivityReport sp2_mod2_surjectivity_sanity() {
  using Residue = std::array<int, 4>;
  auto key = [](const IntMatrix& m) {
    const IntMatrix r = reduce_mod(m, Integer(2));
    return Residue{static_cast<int>(r(0, 0).get_si()), static_cast<int>(r(0, 1).get_si()),
                   static_cast<int>(r(1, 0).get_si()), static_cast<int>(r(1, 1).get_si())};
  };

  std::set<Residue> group;
  for (int bits = 0; bits < 16; ++bits) {
    const int a = bits & 1, b = (bits >> 1) & 1, c = (bits >> 2) & 1, d = (bits >> 3) & 1;
    if (((a * d - b * c) % 2 + 2) % 2 == 1) group.insert({a, b, c, d});
  }

  const IntMatrix s{{0, -1}, {1, 0}};
  const IntMatrix t{{1, 1}, {0, 1}};
  std::map<Residue, std::size_t> first_length;
  std::vector<IntMatrix> frontier{IntMatrix::identity(2)};
  first_length.emplace(key(frontier.front()), 0);
  for (std::size_t length = 1; length <= 6; ++length) {
    std::vector<IntMatrix> next;
    next.reserve(frontier.size() * 2);
    for (const auto& w : frontier) {
      for (const IntMatrix* g : {&s, &t}) {
        IntMatrix p = w * *g;
        first_length.emplace(key(p), length);
        next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }

  SurjectivityReport report;
  report.group_order = group.size();
  report.classes_found = first_length.size();
  report.identity_word_length = first_length.at(Residue{1, 0, 0, 1});
  bool all_hit = true;
  for (const auto& g : group) all_hit = all_hit && first_length.count(g) != 0;
  report.surjective = all_hit && report.classes_found == report.group_order;
  return report;
}

}  // namespace symcert
