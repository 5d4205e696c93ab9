#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symcert/int_matrix.hpp"
#include "symcert/symplectic.hpp"

namespace symcert {

/// Homology of the degree-d cyclic cover of a genus-2 surface, cut along a
/// non-separating curve alpha and glued cyclically from d copies X_0..X_{d-1}.
///
/// Basis order: gamma_0..gamma_{d-1}, delta_0..delta_{d-1}, eta, alpha.
/// gamma_j/delta_j live in block j, eta is the single connected preimage of a
/// curve crossing alpha once, alpha is the gluing circle between X_0 and X_1.
/// Block indices are 0-based and taken mod d.
struct CoverModel {
  std::size_t degree = 0;
  std::vector<std::string> basis_labels;
  IntMatrix form;
  IntMatrix deck;  // gamma_j -> gamma_{j+1}, delta_j -> delta_{j+1}; eta, alpha fixed

  std::size_t dimension() const noexcept { return 2 * degree + 2; }
  std::size_t cover_genus() const noexcept { return degree + 1; }
  std::size_t gamma(std::size_t j) const noexcept { return j % degree; }
  std::size_t delta(std::size_t j) const noexcept { return degree + j % degree; }
  std::size_t eta() const noexcept { return 2 * degree; }
  std::size_t alpha() const noexcept { return 2 * degree + 1; }
};

CoverModel build_cover_space(std::size_t degree);

/// Lift of a twist along a separating curve disjoint from alpha: every
/// component is separating, so the action is the identity.
IntMatrix lift_separating_twist(std::size_t degree, long exponent);
/// Same, but rejects a curve that is not flagged separating.
IntMatrix lift_separating_twist(const BaseCurve& curve, std::size_t degree, long exponent);

struct LiftedComponent {
  IntVector cls;      // class in the cover basis
  IntVector pairing;  // pairing[i] = i(basis_i, component)
};

/// Simultaneous twist along all components of a lifted multicurve.
class LiftedMultiTwist {
 public:
  LiftedMultiTwist(std::vector<LiftedComponent> components, long exponent);

  const std::vector<LiftedComponent>& components() const noexcept { return components_; }
  long exponent() const noexcept { return exponent_; }

 private:
  std::vector<LiftedComponent> components_;
  long exponent_;
};

/// Product over components of x -> x + e * <pairing, x> * class.
IntMatrix lift_multicurve_transvection(const LiftedMultiTwist& twist, const CoverModel& cover);

/// The full preimage of alpha: d components, all homologous to alpha.
LiftedMultiTwist alpha_preimage_twist(const CoverModel& cover, long exponent);

/// Lift of T_beta T_{phi beta}^-1 T_{phi alpha}^-1 in the phi-translated basis:
/// identity except eta -> eta - d * alpha.
IntMatrix build_paper_map(std::size_t degree);

/// Lift of T_beta T_{phi beta}^-1 alone (both separating): the identity.
IntMatrix build_torelli_variant(std::size_t degree);

struct ObstructionCert {
  std::size_t degree = 0;
  bool matrix_mod_d_is_identity = false;
  std::string statement;
  std::vector<std::string> depends_on;
};

struct OffendingEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Integer value;
  Integer residue;
};

struct ObstructionOutcome {
  std::optional<ObstructionCert> cert;
  std::optional<OffendingEntry> offending;  // set exactly when cert is empty
};

/// Emits a certificate iff M = I mod d. M must preserve `form`.
ObstructionOutcome normal_generation_obstruction(const IntMatrix& m, std::size_t degree,
                                                 const IntMatrix& form);

struct SurjectivityReport {
  bool surjective = false;
  std::size_t classes_found = 0;
  std::size_t group_order = 0;            // |SL(2, F_2)| by enumeration
  std::size_t identity_word_length = 0;   // shortest word hitting I mod 2
};

/// Words of length <= 6 in S = [[0,-1],[1,0]] and T = [[1,1],[0,1]], reduced
/// mod 2, against a brute-force enumeration of SL(2, F_2).
SurjectivityReport sp2_mod2_surjectivity_sanity();

}  // namespace symcert
