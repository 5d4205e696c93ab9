#include "symcert/lefschetz.hpp"

#include "symcert/errors.hpp"
#include "symcert/exact_linalg.hpp"
#include "symcert/symplectic.hpp"

namespace symcert {
namespace {

// The first `count` columns of m are e_0, ..., e_{count-1}.
bool leading_columns_are_units(const IntMatrix& m, std::size_t count) {
  for (std::size_t c = 0; c < count; ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m(r, c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace

FixedBlockBasis fixed_block_basis(const IntMatrix& m, std::size_t k) {
  if (!m.is_square()) throw ShapeError("fixed_block_basis: expected a square matrix");
  const std::size_t n = m.rows();
  if (k > n) throw PreconditionError("fixed_block_basis: k exceeds the dimension");

  const IntMatrix shifted = m - IntMatrix::identity(n);
  const std::size_t fixed_rank = kernel_rank_rational(shifted);
  if (fixed_rank < k) throw RankShortfall(k, fixed_rank);

  // U (M - I) V = D with the nonzero diagonal first, so the trailing
  // columns of V are a Z-basis of the saturated fixed lattice.
  const SmithForm snf = smith_normal_form(shifted);
  const std::size_t nonzero = n - fixed_rank;

  IntMatrix basis(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t src = c < fixed_rank ? nonzero + c : c - fixed_rank;
    for (std::size_t r = 0; r < n; ++r) basis(r, c) = snf.V(r, src);
  }

  FixedBlockBasis out;
  out.change_inverse = basis;
  out.change = inverse_unimodular(basis);
  out.block_form = out.change * m * out.change_inverse;
  if (!leading_columns_are_units(out.block_form, k)) {
    throw InvariantViolation("fixed_block_basis: conjugated matrix is not in block form");
  }
  return out;
}

ComplementBlock complement_block(const IntMatrix& block_form, std::size_t k,
                                 std::size_t genus) {
  const std::size_t n = 2 * genus;
  if (block_form.rows() != n || block_form.cols() != n) {
    throw ShapeError("complement_block: expected a " + std::to_string(n) + "x" +
                     std::to_string(n) + " matrix");
  }
  if (k == 0) {
    throw PreconditionError("complement_block: k = 0 has no interpolation block");
  }
  if (k > n) throw PreconditionError("complement_block: k exceeds 2g");

  const std::size_t identity_size = (k % 2 == 1) ? k : k - 1;
  if (!leading_columns_are_units(block_form, identity_size)) {
    throw PreconditionError("complement_block: input is not in fixed-block form");
  }
  ComplementBlock out{block_form.submatrix(identity_size, identity_size, n - identity_size,
                                           n - identity_size),
                      n - identity_size};
  if (det_bareiss(out.block) != 1) {
    throw InvariantViolation("complement_block: complement has determinant " +
                             det_bareiss(out.block).get_str() + ", expected 1");
  }
  return out;
}

TraceWitness trace_witness(const IntMatrix& block) {
  if (!block.is_square()) throw ShapeError("trace_witness: expected a square matrix");
  const std::size_t m = block.rows();
  if (m % 2 == 0) throw PreconditionError("trace_witness: block size must be odd");
  if (det_bareiss(block) != 1) throw PreconditionError("trace_witness: determinant must be 1");

  IntMatrix power = block;
  for (std::size_t j = 1; j <= m; ++j) {
    Integer t = trace(power);
    if (t >= 1) return {j, std::move(t)};
    if (j < m) power = power * block;
  }
  throw InvariantViolation("trace_witness: no power up to m has positive trace");
}

Integer lefschetz_number(const IntMatrix& m, std::size_t j) {
  if (j < 1) throw PreconditionError("lefschetz_number: j must be at least 1");
  return 2 - trace(mat_pow(m, j));
}

std::string LowerBoundCert::invariant_failure() const {
  if (m % 2 == 0) return "m is even";
  if (m > 2 * genus - k + 1) return "m exceeds 2g - k + 1";
  if (witness_j < 1 || witness_j > m) return "witness j outside 1..m";
  if (trace_at_j < 1) return "trace at witness is not positive";
  if (k >= 3 && lefschetz_at_j >= 0) return "Lefschetz number is not negative";
  if (bound.genus != genus || bound.j != witness_j) return "bound expression mismatch";
  return {};
}

LowerBoundCert lower_bound_certificate(const IntMatrix& m, std::size_t k) {
  if (!m.is_square() || m.rows() % 2 != 0 || m.rows() == 0) {
    throw ShapeError("lower_bound_certificate: expected a 2g x 2g matrix");
  }
  const std::size_t genus = m.rows() / 2;
  const SymplecticSpace space = standard_space(genus);
  if (!is_symplectic(m, space)) {
    throw PreconditionError("lower_bound_certificate: matrix does not preserve the form");
  }
  if (k < 3) {
    throw FallbackRegime("k = " + std::to_string(k) +
                         " < 3: Lefschetz negativity is not guaranteed; the bound holds "
                         "with C replaced by min{C, C0, C1, C2}");
  }
  if (k > 2 * genus) throw PreconditionError("lower_bound_certificate: k exceeds 2g");
  const std::size_t fixed = m_value(m, space);
  if (fixed < k) throw RankShortfall(k, fixed);

  const FixedBlockBasis basis = fixed_block_basis(m, k);
  const ComplementBlock comp = complement_block(basis.block_form, k, genus);
  TraceWitness witness = trace_witness(comp.block);

  LowerBoundCert cert;
  cert.genus = genus;
  cert.k = k;
  cert.m = comp.size;
  cert.witness_j = witness.j;
  cert.trace_at_j = std::move(witness.trace);
  cert.lefschetz_at_j = lefschetz_number(m, witness.j);
  cert.bound = {genus, witness.j};

  // Block-triangular form: Tr(M^j) = (2g - m) + Tr(M_comp^j).
  const Integer expected_trace =
      Integer(static_cast<unsigned long>(2 * genus - comp.size)) + cert.trace_at_j;
  if (2 - cert.lefschetz_at_j != expected_trace) {
    throw InvariantViolation("lower_bound_certificate: trace split does not add up");
  }
  if (auto failure = cert.invariant_failure(); !failure.empty()) {
    throw InvariantViolation("lower_bound_certificate: " + failure);
  }
  return cert;
}

}  // namespace symcert
