#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symcert/int_matrix.hpp"

namespace symcert {

/// Tr(M^1), ..., Tr(M^jmax) for a square integer matrix M.
struct TraceSequence {
  std::vector<Integer> values;  // values[j - 1] = Tr(M^j)

  std::size_t jmax() const noexcept { return values.size(); }
  // 1-based, matching the power.
  const Integer& at(std::size_t j) const { return values.at(j - 1); }
};

// Largest size for which the literal partition-sum determinant is used.
// The number of terms is the partition number p(m); p(12) = 77.
inline constexpr std::size_t kMaxPartitionSumSize = 12;

IntMatrix mat_pow(const IntMatrix& m, std::uint64_t j);

TraceSequence trace_powers(const IntMatrix& m, std::size_t jmax);

/// Fraction-free (Bareiss) elimination with row pivoting.
Integer det_bareiss(const IntMatrix& m);

/// Determinant from the power traces alone:
///
///   (-1)^m det A = sum over c_1 + 2 c_2 + ... + m c_m = m of
///                  prod_i (1 / c_i!) (-Tr(A^i) / i)^{c_i}
///
/// evaluated term by term in exact rationals for m <= kMaxPartitionSumSize.
/// Larger matrices go through the Newton recurrence instead.
Integer det_from_traces(const IntMatrix& m);

/// The partition sum above, evaluated on a given trace sequence of length m.
/// Returns (-1)^m times the sum, i.e. the determinant. Throws
/// InvariantViolation when the result is not an integer.
Integer det_from_trace_partitions(const TraceSequence& traces);

/// Elementary symmetric functions e_1..e_m of the eigenvalues, recovered
/// from power sums p_j = Tr(A^j) via Newton's identities
///
///   k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i.
///
/// With det(xI - A) = sum_i (-1)^i e_i x^{m-i}, e_1 is the trace and e_m is
/// det A itself (no extra sign).
std::vector<Integer> newton_elementary(const TraceSequence& traces);

std::size_t rank_rational(const IntMatrix& m);

/// Dimension over Q of {x : M x = 0}.
std::size_t kernel_rank_rational(const IntMatrix& m);

struct SmithForm {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal, d_1 | d_2 | ..., d_i >= 0
  IntMatrix V;  // cols x cols, unimodular
};

/// U * M * V = D. Pivot is the smallest nonzero |entry| of the active
/// block, ties going to the lowest (row, col) in row-major order.
SmithForm smith_normal_form(const IntMatrix& m);

/// Least non-negative residues mod n. n >= 2.
IntMatrix reduce_mod(const IntMatrix& m, const Integer& n);

/// Exact inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Q-span of a growing set of integer vectors, held as a primitive echelon
/// basis. Zero coordinates are skipped during reduction, so spans of sparse
/// vectors (indicator vectors, unit vectors) stay cheap at large dimension.
class RationalSpan {
 public:
  explicit RationalSpan(std::size_t ambient_dim) : dim_(ambient_dim) {}

  // Adds v; returns true when the dimension grew.
  bool insert(IntVector v);
  bool contains(IntVector v) const;

  std::size_t dimension() const noexcept { return basis_.size(); }
  std::size_t ambient_dimension() const noexcept { return dim_; }

 private:
  void reduce(IntVector& v) const;

  std::size_t dim_;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace symcert
