#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symcert/int_matrix.hpp"

namespace symcert {

/// H_1(S_g; Z) with its intersection form in the ordered basis
/// (a_1, b_1, ..., a_g, b_g): J(a_i, b_i) = 1, J(b_i, a_i) = -1.
struct SymplecticSpace {
  std::size_t genus = 0;
  IntMatrix form;

  std::size_t dimension() const noexcept { return 2 * genus; }
};

SymplecticSpace standard_space(std::size_t genus);

// Coordinates of a_i / b_i (1-based i, as in the usual notation).
IntVector class_a(std::size_t genus, std::size_t i);
IntVector class_b(std::size_t genus, std::size_t i);

/// x^T * form * y.
Integer algebraic_intersection(const IntVector& x, const IntVector& y,
                               const IntMatrix& form);

/// M^T J M == J.
bool is_symplectic(const IntMatrix& m, const IntMatrix& form);
bool is_symplectic(const IntMatrix& m, const SymplecticSpace& space);

/// Homology action of the k-th power of a Dehn twist along a curve of class c:
/// x -> x + k * i(x, c) * c, with i(x, c) = x^T * form * c. A zero class
/// (separating curve) gives the identity.
IntMatrix transvection(const IntVector& c, const Integer& k, const IntMatrix& form);
IntMatrix transvection(const IntVector& c, const Integer& k,
                       const SymplecticSpace& space);

struct BaseCurve {
  std::string id;
  IntVector homology;
  bool separating = false;
  // Geometric intersection numbers with other named curves, as supplied.
  std::map<std::string, std::uint64_t> geom;
};

/// Named curves. Validates the per-curve and cross-curve invariants on
/// insertion: separating curves have zero class, geom is symmetric where
/// both sides are present, and i(c, c) = 0.
class CurveTable {
 public:
  void add(BaseCurve curve);

  const BaseCurve& at(const std::string& id) const;
  bool contains(const std::string& id) const { return curves_.count(id) != 0; }
  std::size_t size() const noexcept { return curves_.size(); }

  auto begin() const { return curves_.begin(); }
  auto end() const { return curves_.end(); }

 private:
  std::map<std::string, BaseCurve> curves_;
};

struct TwistLetter {
  std::string curve;
  long exponent = 1;  // nonzero
};

/// T_{c_1}^{e_1} T_{c_2}^{e_2} ... read as composition: the rightmost
/// letter acts first.
struct TwistWord {
  std::vector<TwistLetter> letters;
};

IntMatrix evaluate_twist_word(const TwistWord& word, const CurveTable& curves,
                              const SymplecticSpace& space);

/// Dimension over Q of the subspace fixed by M. M must preserve `form`.
std::size_t m_value(const IntMatrix& m, const IntMatrix& form);
std::size_t m_value(const IntMatrix& m, const SymplecticSpace& space);

/// True iff M is exactly the identity.
bool is_torelli(const IntMatrix& m);

struct OrbitSumResult {
  std::size_t dimension = 0;
  bool invariant = false;
};

/// With c_k = sum_{i < 2^(n-k)} A^(i 2^k) c, returns the Q-dimension of
/// span{A^j c_k : 0 <= j < 2^k} and whether A^(2^k) maps that span into
/// itself. Requires that the full orbit sum sum_{i < 2^n} A^i c is fixed
/// by A (throws OrbitSumNotFixed otherwise).
OrbitSumResult orbit_sum_subspace(const IntMatrix& a, const IntVector& c,
                                  unsigned n, unsigned k);

}  // namespace symcert
