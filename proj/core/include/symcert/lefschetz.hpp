#pragma once

#include <cstddef>
#include <string>

#include "symcert/int_matrix.hpp"

namespace symcert {

/// A basis change putting a saturated rank-k sublattice of the fixed
/// lattice first.
struct FixedBlockBasis {
  IntMatrix change;          // P, unimodular
  IntMatrix change_inverse;  // P^-1; its columns are the new basis
  IntMatrix block_form;      // P M P^-1 = [[I_k, *], [0, M_comp]]
};

/// Saturates ker(M - I) over Z through the Smith form of M - I and uses the
/// column transform of that form as the unimodular completion. Throws
/// RankShortfall when the fixed rank is below k.
FixedBlockBasis fixed_block_basis(const IntMatrix& m, std::size_t k);

struct ComplementBlock {
  IntMatrix block;    // odd-size lower-right block, det 1
  std::size_t size;   // m
};

/// For odd k the lower-right (2g-k) block; for even k one fixed direction is
/// absorbed and the block is (2g-k+1) square. Either way the size is odd.
ComplementBlock complement_block(const IntMatrix& block_form, std::size_t k,
                                 std::size_t genus);

struct TraceWitness {
  std::size_t j = 0;
  Integer trace;
};

/// Smallest j in 1..m with Tr(M^j) >= 1. M must be odd-sized with det 1;
/// then such a j always exists because the trace-partition identity would
/// otherwise give det M = -1.
TraceWitness trace_witness(const IntMatrix& block);

/// 2 - Tr(M^j).
Integer lefschetz_number(const IntMatrix& m, std::size_t j);

/// Symbolic bound C / (g * j); the constant C is never instantiated.
struct BoundExpression {
  std::size_t genus = 0;
  std::size_t j = 0;

  static constexpr const char* kTemplate = "C/(g*j)";
  std::string instantiated() const {
    return "C/(" + std::to_string(genus) + "*" + std::to_string(j) + ")";
  }
};

struct LowerBoundCert {
  std::size_t genus = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t witness_j = 0;
  Integer trace_at_j;       // Tr(M_comp^j)
  Integer lefschetz_at_j;   // 2 - Tr(M^j) on the full matrix
  BoundExpression bound;

  // Checks every field constraint; returns an empty string when all hold,
  // otherwise a description of the first failure.
  std::string invariant_failure() const;
};

/// Full pipeline on a symplectic 2g x 2g matrix with fixed rank >= k >= 3.
/// Throws FallbackRegime for k < 3 and RankShortfall when m(M) < k.
LowerBoundCert lower_bound_certificate(const IntMatrix& m, std::size_t k);

}  // namespace symcert
