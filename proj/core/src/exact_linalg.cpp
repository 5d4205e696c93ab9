#include "symcert/exact_linalg.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "symcert/errors.hpp"

namespace symcert {
namespace {

void require_square(const IntMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw ShapeError(std::string(what) + ": expected a square matrix, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// Divides v by the gcd of its entries and makes the leading entry positive.
void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g == 0) return;
  auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; });
  if (sgn(*lead) < 0) g = -g;
  if (g == 1) return;
  for (auto& x : v) {
    if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

Rational power(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row_dst += factor * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (sgn(m(src, c)) != 0) m(dst, c) += factor * m(src, c);
  }
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

// col_dst += factor * col_src
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (sgn(m(r, src)) != 0) m(r, dst) += factor * m(r, src);
  }
}

}  // namespace

IntMatrix mat_pow(const IntMatrix& m, std::uint64_t j) {
  require_square(m, "mat_pow");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (j > 0) {
    if (j & 1U) result = result * base;
    j >>= 1U;
    if (j > 0) base = base * base;
  }
  return result;
}

TraceSequence trace_powers(const IntMatrix& m, std::size_t jmax) {
  require_square(m, "trace_powers");
  if (jmax < 1) throw PreconditionError("trace_powers: jmax must be at least 1");
  TraceSequence seq;
  seq.values.reserve(jmax);
  IntMatrix p = m;
  for (std::size_t j = 1; j <= jmax; ++j) {
    seq.values.push_back(trace(p));
    if (j < jmax) p = p * m;
  }
  return seq;
}

Integer det_bareiss(const IntMatrix& m) {
  require_square(m, "det_bareiss");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && sgn(a(swap_with, k)) == 0) ++swap_with;
      if (swap_with == n) return 0;
      swap_rows(a, k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Integer det = a(n - 1, n - 1);
  return sign < 0 ? Integer(-det) : det;
}

Integer det_from_trace_partitions(const TraceSequence& traces) {
  const std::size_t m = traces.jmax();
  if (m == 0) throw PreconditionError("det_from_trace_partitions: empty trace sequence");

  // -Tr(A^i) / i, indexed by i.
  std::vector<Rational> weight(m + 1);
  for (std::size_t i = 1; i <= m; ++i) {
    weight[i] = Rational(-traces.at(i), Integer(static_cast<unsigned long>(i)));
    weight[i].canonicalize();
  }

  Rational sum = 0;
  std::vector<unsigned> mult(m + 1, 0);
  // Choose c_i for part sizes i = largest..1 with the remaining weight.
  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t part,
                                                            std::size_t remaining) {
    if (part == 1) {
      mult[1] = static_cast<unsigned>(remaining);
      Rational term = 1;
      for (std::size_t i = 1; i <= m; ++i) {
        if (mult[i] == 0) continue;
        term *= power(weight[i], mult[i]);
        term /= factorial(mult[i]);
      }
      sum += term;
      return;
    }
    for (std::size_t c = 0; c * part <= remaining; ++c) {
      mult[part] = static_cast<unsigned>(c);
      visit(part - 1, remaining - c * part);
    }
    mult[part] = 0;
  };
  visit(m, m);

  if (m % 2 == 1) sum = -sum;
  if (sum.get_den() != 1) {
    throw InvariantViolation("trace partition sum is not an integer: " + sum.get_str());
  }
  return sum.get_num();
}

Integer det_from_traces(const IntMatrix& m) {
  require_square(m, "det_from_traces");
  if (m.rows() == 0) throw ShapeError("det_from_traces: empty matrix");
  const TraceSequence traces = trace_powers(m, m.rows());
  if (m.rows() <= kMaxPartitionSumSize) return det_from_trace_partitions(traces);
  return newton_elementary(traces).back();
}

std::vector<Integer> newton_elementary(const TraceSequence& traces) {
  const std::size_t m = traces.jmax();
  std::vector<Integer> e(m + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      Integer term = e[k - i] * traces.at(i);
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    Integer kk = static_cast<unsigned long>(k);
    if (!mpz_divisible_p(acc.get_mpz_t(), kk.get_mpz_t())) {
      throw PreconditionError("newton_elementary: e_" + std::to_string(k) +
                              " is not an integer; trace data is inconsistent");
    }
    mpz_divexact(e[k].get_mpz_t(), acc.get_mpz_t(), kk.get_mpz_t());
  }
  e.erase(e.begin());
  return e;
}

void RationalSpan::reduce(IntVector& v) const {
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const std::size_t p = pivots_[b];
    if (sgn(v[p]) == 0) continue;
    const IntVector& row = basis_[b];
    const Integer scale = row[p];
    const Integer factor = v[p];
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(v[i]) != 0 && scale != 1) v[i] *= scale;
      if (sgn(row[i]) != 0) v[i] -= factor * row[i];
    }
    make_primitive(v);
  }
}

bool RationalSpan::insert(IntVector v) {
  if (v.size() != dim_) throw ShapeError("RationalSpan: vector length mismatch");
  reduce(v);
  auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; });
  if (lead == v.end()) return false;
  make_primitive(v);
  pivots_.push_back(static_cast<std::size_t>(lead - v.begin()));
  basis_.push_back(std::move(v));
  return true;
}

bool RationalSpan::contains(IntVector v) const {
  if (v.size() != dim_) throw ShapeError("RationalSpan: vector length mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

std::size_t rank_rational(const IntMatrix& m) {
  RationalSpan span(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    span.insert(IntVector(row.begin(), row.end()));
  }
  return span.dimension();
}

std::size_t kernel_rank_rational(const IntMatrix& m) {
  return m.cols() - rank_rational(m);
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest |entry| in the active block; first one wins ties.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(d(i, j)) == 0) continue;
          if (pr == rows || mpz_cmpabs(d(i, j).get_mpz_t(), d(pr, pc).get_mpz_t()) < 0) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) return {std::move(u), std::move(d), std::move(v)};

      swap_rows(d, t, pr);
      swap_rows(u, t, pr);
      swap_cols(d, t, pc);
      swap_cols(v, t, pc);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        const Integer neg = -q;
        add_row(d, i, t, neg);
        add_row(u, i, t, neg);
        if (sgn(d(i, t)) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        const Integer neg = -q;
        add_col(d, j, t, neg);
        add_col(v, j, t, neg);
        if (sgn(d(t, j)) != 0) dirty = true;
      }
      if (dirty) continue;

      // Enforce d_t | every remaining entry by folding an offending row in.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      add_row(d, t, bad_row, 1);
      add_row(u, t, bad_row, 1);
    }
    if (sgn(d(t, t)) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

IntMatrix reduce_mod(const IntMatrix& m, const Integer& n) {
  if (n < 2) throw PreconditionError("reduce_mod: modulus must be at least 2, got " + n.get_str());
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_fdiv_r(out(r, c).get_mpz_t(), m(r, c).get_mpz_t(), n.get_mpz_t());
    }
  }
  return out;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  require_square(m, "inverse_unimodular");
  const std::size_t n = m.rows();
  std::vector<Rational> a(n * 2 * n);
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * 2 * n + c]; };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) at(r, c) = m(r, c);
    at(r, n + r) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(at(piv, col)) == 0) ++piv;
    if (piv == n) throw PreconditionError("inverse_unimodular: matrix is singular");
    if (piv != col) {
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(at(piv, c), at(col, c));
    }
    const Rational inv = 1 / at(col, col);
    for (std::size_t c = 0; c < 2 * n; ++c) at(col, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(at(r, col)) == 0) continue;
      const Rational f = at(r, col);
      for (std::size_t c = 0; c < 2 * n; ++c) at(r, c) -= f * at(col, c);
    }
  }
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& x = at(r, n + c);
      if (x.get_den() != 1) {
        throw PreconditionError("inverse_unimodular: determinant is not +-1");
      }
      out(r, c) = x.get_num();
    }
  }
  return out;
}

}  // namespace symcert
