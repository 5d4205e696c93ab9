#include "symcert/symplectic.hpp"

#include <algorithm>

#include "symcert/errors.hpp"
#include "symcert/exact_linalg.hpp"

namespace symcert {
namespace {

bool is_zero_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

}  // namespace

SymplecticSpace standard_space(std::size_t genus) {
  if (genus == 0) throw PreconditionError("standard_space: genus must be at least 1");
  SymplecticSpace s{genus, IntMatrix(2 * genus, 2 * genus)};
  for (std::size_t i = 0; i < genus; ++i) {
    s.form(2 * i, 2 * i + 1) = 1;
    s.form(2 * i + 1, 2 * i) = -1;
  }
  return s;
}

IntVector class_a(std::size_t genus, std::size_t i) {
  if (i == 0 || i > genus) throw PreconditionError("class_a: index out of range");
  return unit_vector(2 * genus, 2 * (i - 1));
}

IntVector class_b(std::size_t genus, std::size_t i) {
  if (i == 0 || i > genus) throw PreconditionError("class_b: index out of range");
  return unit_vector(2 * genus, 2 * (i - 1) + 1);
}

Integer algebraic_intersection(const IntVector& x, const IntVector& y,
                               const IntMatrix& form) {
  if (x.size() != form.rows() || y.size() != form.cols()) {
    throw ShapeError("algebraic_intersection: vector length does not match the form");
  }
  const IntVector fy = form.apply(y);
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * fy[i];
  return s;
}

bool is_symplectic(const IntMatrix& m, const IntMatrix& form) {
  if (!m.is_square() || m.rows() != form.rows()) {
    throw ShapeError("is_symplectic: matrix is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", form is " +
                     std::to_string(form.rows()) + "x" + std::to_string(form.cols()));
  }
  return m.transpose() * form * m == form;
}

bool is_symplectic(const IntMatrix& m, const SymplecticSpace& space) {
  return is_symplectic(m, space.form);
}

IntMatrix transvection(const IntVector& c, const Integer& k, const IntMatrix& form) {
  const std::size_t n = form.rows();
  if (c.size() != n) throw ShapeError("transvection: class length does not match the form");
  // Column x of the result is e_x + k * i(e_x, c) * c, and i(e_x, c) = (form c)_x.
  const IntVector pairing = form.apply(c);
  IntMatrix t = IntMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    if (sgn(pairing[col]) == 0) continue;
    const Integer coeff = k * pairing[col];
    for (std::size_t row = 0; row < n; ++row) {
      if (sgn(c[row]) != 0) t(row, col) += coeff * c[row];
    }
  }
  return t;
}

IntMatrix transvection(const IntVector& c, const Integer& k, const SymplecticSpace& space) {
  return transvection(c, k, space.form);
}

void CurveTable::add(BaseCurve curve) {
  if (curve.id.empty()) throw PreconditionError("curve id must be non-empty");
  if (curves_.count(curve.id)) throw PreconditionError("duplicate curve id '" + curve.id + "'");
  if (curve.separating && !is_zero_vector(curve.homology)) {
    throw PreconditionError("curve '" + curve.id + "' is separating but has a nonzero class");
  }
  if (auto self = curve.geom.find(curve.id); self != curve.geom.end() && self->second != 0) {
    throw PreconditionError("curve '" + curve.id + "' has nonzero self-intersection");
  }
  for (const auto& [other, value] : curve.geom) {
    auto it = curves_.find(other);
    if (it == curves_.end()) continue;
    auto back = it->second.geom.find(curve.id);
    if (back != it->second.geom.end() && back->second != value) {
      throw PreconditionError("geometric intersection of '" + curve.id + "' and '" + other +
                              "' is not symmetric");
    }
  }
  std::string id = curve.id;
  curves_.emplace(std::move(id), std::move(curve));
}

const BaseCurve& CurveTable::at(const std::string& id) const {
  auto it = curves_.find(id);
  if (it == curves_.end()) throw PreconditionError("unknown curve id '" + id + "'");
  return it->second;
}

IntMatrix evaluate_twist_word(const TwistWord& word, const CurveTable& curves,
                              const SymplecticSpace& space) {
  IntMatrix result = IntMatrix::identity(space.dimension());
  for (const auto& letter : word.letters) {
    const BaseCurve& curve = curves.at(letter.curve);
    if (letter.exponent == 0) {
      throw PreconditionError("twist exponent for '" + letter.curve + "' must be nonzero");
    }
    if (curve.homology.size() != space.dimension()) {
      throw ShapeError("curve '" + curve.id + "' has a class of length " +
                       std::to_string(curve.homology.size()) + ", expected " +
                       std::to_string(space.dimension()));
    }
    if (curve.separating) continue;
    result = result * transvection(curve.homology, Integer(letter.exponent), space);
  }
  return result;
}

std::size_t m_value(const IntMatrix& m, const IntMatrix& form) {
  if (!is_symplectic(m, form)) throw PreconditionError("m_value: matrix does not preserve the form");
  return kernel_rank_rational(m - IntMatrix::identity(m.rows()));
}

std::size_t m_value(const IntMatrix& m, const SymplecticSpace& space) {
  return m_value(m, space.form);
}

bool is_torelli(const IntMatrix& m) {
  if (!m.is_square()) throw ShapeError("is_torelli: expected a square matrix");
  return m.is_identity();
}

OrbitSumResult orbit_sum_subspace(const IntMatrix& a, const IntVector& c, unsigned n,
                                  unsigned k) {
  if (!a.is_square()) throw ShapeError("orbit_sum_subspace: expected a square matrix");
  if (c.size() != a.rows()) throw ShapeError("orbit_sum_subspace: vector length mismatch");
  if (k >= n) throw PreconditionError("orbit_sum_subspace: need k < n");
  if (n >= 31) throw PreconditionError("orbit_sum_subspace: n is too large");

  const std::size_t period = std::size_t{1} << n;
  const std::size_t step = std::size_t{1} << k;
  const std::size_t dim = a.rows();

  // orbit[i] = A^i c for i < 2^n + 2^k; the tail feeds A^(2^k) applied to
  // the spanning vectors.
  std::vector<IntVector> orbit;
  orbit.reserve(period + step);
  orbit.push_back(c);
  while (orbit.size() < period + step) orbit.push_back(a.apply(orbit.back()));

  IntVector full(dim);
  for (std::size_t i = 0; i < period; ++i) {
    for (std::size_t x = 0; x < dim; ++x) {
      if (sgn(orbit[i][x]) != 0) full[x] += orbit[i][x];
    }
  }
  if (a.apply(full) != full) {
    throw OrbitSumNotFixed("orbit_sum_subspace: the full orbit sum is not fixed by A");
  }

  // A^shift c_k = sum_i A^(shift + i 2^k) c.
  auto shifted_sum = [&](std::size_t shift) {
    IntVector v(dim);
    for (std::size_t i = 0; i < (period >> k); ++i) {
      const IntVector& o = orbit[shift + i * step];
      for (std::size_t x = 0; x < dim; ++x) {
        if (sgn(o[x]) != 0) v[x] += o[x];
      }
    }
    return v;
  };

  RationalSpan span(dim);
  for (std::size_t j = 0; j < step; ++j) span.insert(shifted_sum(j));

  OrbitSumResult result;
  result.dimension = span.dimension();
  result.invariant = true;
  for (std::size_t j = 0; j < step && result.invariant; ++j) {
    result.invariant = span.contains(shifted_sum(j + step));
  }
  return result;
}

}  // namespace symcert
