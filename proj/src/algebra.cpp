#include "hopfkit/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hopfkit/error.hpp"

namespace hopfkit {

Algebra::Algebra(Field f, std::vector<std::string> basis_names, const std::vector<Entry3>& mult, Vector unit)
    : field_(f), names_(std::move(basis_names)), products_(names_.size() * names_.size()), unit_(std::move(unit)) {
  const std::size_t d = dim();
  if (unit_.size() != d) throw DimensionMismatch("algebra: unit has " + std::to_string(unit_.size()) + " coordinates, expected " + std::to_string(d));
  std::vector<std::map<std::size_t, Scalar>> acc(d * d);
  for (const auto& e : mult) {
    if (e.i >= d || e.j >= d || e.k >= d) {
      throw DimensionMismatch("algebra: structure constant index out of range (" + std::to_string(e.i) + "," +
                              std::to_string(e.j) + "," + std::to_string(e.k) + ")");
    }
    auto [it, inserted] = acc[e.i * d + e.j].try_emplace(e.k, e.c);
    if (!inserted) it->second += e.c;
  }
  for (std::size_t p = 0; p < d * d; ++p) {
    for (auto& [k, c] : acc[p]) {
      if (!c.is_zero()) products_[p].emplace_back(k, c);
    }
  }
}

Scalar Algebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [kk, c] : product_terms(i, j)) {
    if (kk == k) return c;
  }
  return field_.zero();
}

std::vector<Entry3> Algebra::entries() const {
  std::vector<Entry3> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      for (const auto& [k, c] : product_terms(i, j)) out.push_back({i, j, k, c});
    }
  }
  return out;
}

Vector Algebra::product(std::size_t i, std::size_t j) const {
  Vector out = zero_vector(field_, dim());
  for (const auto& [k, c] : product_terms(i, j)) out[k] = c;
  return out;
}

Vector Algebra::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("multiply: element length differs from algebra dimension");
  Vector out = zero_vector(field_, dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (const auto& [k, c] : product_terms(i, j)) out[k] += xy * c;
    }
  }
  return out;
}

Matrix Algebra::left_multiplication(std::span<const Scalar> a) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(a, unit_vector(field_, dim(), j)));
  return m;
}

Matrix Algebra::right_multiplication(std::span<const Scalar> a) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(unit_vector(field_, dim(), j), a));
  return m;
}

Matrix Algebra::multiplication_map() const {
  Matrix m(field_, dim(), dim() * dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      for (const auto& [k, c] : product_terms(i, j)) m(k, i * dim() + j) = c;
    }
  }
  return m;
}

bool Algebra::same_structure(const Algebra& o) const {
  if (field_ != o.field_ || dim() != o.dim() || unit_ != o.unit_) return false;
  for (std::size_t p = 0; p < products_.size(); ++p) {
    if (products_[p] != o.products_[p]) return false;
  }
  return true;
}

Vector tensor_multiply(const Algebra& a, const Algebra& b, std::span<const Scalar> x, std::span<const Scalar> y) {
  const std::size_t da = a.dim(), db = b.dim();
  if (x.size() != da * db || y.size() != da * db) throw DimensionMismatch("tensor_multiply: element length mismatch");
  Vector out = zero_vector(a.field(), da * db);
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p].is_zero()) continue;
    const std::size_t i = p / db, j = p % db;
    for (std::size_t q = 0; q < y.size(); ++q) {
      if (y[q].is_zero()) continue;
      const std::size_t k = q / db, l = q % db;
      const auto& left = a.product_terms(i, k);
      const auto& right = b.product_terms(j, l);
      if (left.empty() || right.empty()) continue;
      Scalar xy = x[p] * y[q];
      for (const auto& [s, c1] : left) {
        Scalar c = xy * c1;
        for (const auto& [t, c2] : right) out[s * db + t] += c * c2;
      }
    }
  }
  return out;
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<std::string> names;
  for (const auto& x : a.basis_names()) {
    for (const auto& y : b.basis_names()) names.push_back(x + "⊗" + y);
  }
  std::vector<Entry3> mult;
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t k = 0; k < da; ++k) {
      const auto& left = a.product_terms(i, k);
      for (std::size_t j = 0; j < db; ++j) {
        for (std::size_t l = 0; l < db; ++l) {
          for (const auto& [s, c1] : left) {
            for (const auto& [t, c2] : b.product_terms(j, l)) mult.push_back({i * db + j, k * db + l, s * db + t, c1 * c2});
          }
        }
      }
    }
  }
  return Algebra(a.field(), std::move(names), mult, tensor(a.unit(), b.unit()));
}

ValidityReport check_algebra(const Algebra& a) {
  ValidityReport report;
  const std::size_t d = a.dim();
  const Field& f = a.field();
  CheckItem& assoc = report.item("associativity");
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vector ij = a.product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        Vector lhs = a.multiply(ij, unit_vector(f, d, k));
        Vector rhs = a.multiply(unit_vector(f, d, i), a.product(j, k));
        if (lhs != rhs) {
          assoc.record({{i, j, k}, "(" + a.basis_names()[i] + "*" + a.basis_names()[j] + ")*" + a.basis_names()[k] +
                                       " != " + a.basis_names()[i] + "*(" + a.basis_names()[j] + "*" +
                                       a.basis_names()[k] + ")"});
        }
      }
    }
  }
  CheckItem& unit = report.item("unit");
  for (std::size_t i = 0; i < d; ++i) {
    Vector e = unit_vector(f, d, i);
    if (a.multiply(a.unit(), e) != e) unit.record({{i}, "1*" + a.basis_names()[i] + " != " + a.basis_names()[i]});
    if (a.multiply(e, a.unit()) != e) unit.record({{i}, a.basis_names()[i] + "*1 != " + a.basis_names()[i]});
  }
  return report;
}

Witnessed is_two_sided_ideal(const Algebra& a, const Subspace& j) {
  if (j.ambient_dim() != a.dim()) throw DimensionMismatch("is_two_sided_ideal: subspace ambient differs from algebra dimension");
  const Field& f = a.field();
  for (std::size_t r = 0; r < j.dim(); ++r) {
    Vector v = j.vector(r);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vector e = unit_vector(f, a.dim(), i);
      if (!j.contains(a.multiply(e, v))) {
        return Witnessed::no({{i, r, 0}, a.basis_names()[i] + "*(" + format_element(a.basis_names(), v) + ") not in ideal"});
      }
      if (!j.contains(a.multiply(v, e))) {
        return Witnessed::no({{i, r, 1}, "(" + format_element(a.basis_names(), v) + ")*" + a.basis_names()[i] + " not in ideal"});
      }
    }
  }
  return Witnessed::yes();
}

Witnessed is_subalgebra(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw DimensionMismatch("is_subalgebra: subspace ambient differs from algebra dimension");
  if (!s.contains(a.unit())) return Witnessed::no({{}, "unit not contained"});
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (std::size_t t = 0; t < s.dim(); ++t) {
      if (!s.contains(a.multiply(s.basis().row(r), s.basis().row(t)))) {
        return Witnessed::no({{r, t}, "product of basis vectors " + std::to_string(r) + "," + std::to_string(t) + " leaves the subspace"});
      }
    }
  }
  return Witnessed::yes();
}

AlgebraMorphism::AlgebraMorphism(Algebra source, Algebra target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim()) {
    throw DimensionMismatch("algebra morphism: matrix is " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) + ", expected " + std::to_string(target_.dim()) + "x" +
                            std::to_string(source_.dim()));
  }
}

AlgebraMorphism identity_morphism(const Algebra& a) { return AlgebraMorphism(a, a, Matrix::identity(a.field(), a.dim())); }

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
  if (f.target().dim() != g.source().dim()) throw DimensionMismatch("compose: morphisms are not composable");
  return AlgebraMorphism(f.source(), g.target(), g.matrix() * f.matrix());
}

Witnessed is_algebra_morphism(const AlgebraMorphism& f) {
  const Algebra& s = f.source();
  const Algebra& t = f.target();
  if (f(s.unit()) != t.unit()) return Witnessed::no({{}, "unit not preserved"});
  std::vector<Vector> images;
  for (std::size_t i = 0; i < s.dim(); ++i) images.push_back(f.matrix().column(i));
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if (f(s.product(i, j)) != t.multiply(images[i], images[j])) {
        return Witnessed::no({{i, j}, "f(" + s.basis_names()[i] + "*" + s.basis_names()[j] + ") != f(" +
                                          s.basis_names()[i] + ")*f(" + s.basis_names()[j] + ")"});
      }
    }
  }
  return Witnessed::yes();
}

QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal) {
  if (auto w = is_two_sided_ideal(a, ideal); !w) {
    throw PreconditionError("quotient_algebra: not a two-sided ideal: " + w.witness->detail);
  }
  QuotientSpace q = quotient_space(a.dim(), ideal);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < q.quo_dim; ++k) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (q.section(c, k).is_one()) {
        names.push_back(a.basis_names()[c]);
        break;
      }
    }
  }
  std::vector<Entry3> mult;
  std::vector<Vector> lifts;
  for (std::size_t r = 0; r < q.quo_dim; ++r) lifts.push_back(q.section.column(r));
  for (std::size_t r = 0; r < q.quo_dim; ++r) {
    for (std::size_t s = 0; s < q.quo_dim; ++s) {
      Vector prod = q.projection * a.multiply(lifts[r], lifts[s]);
      for (std::size_t k = 0; k < q.quo_dim; ++k) {
        if (!prod[k].is_zero()) mult.push_back({r, s, k, prod[k]});
      }
    }
  }
  Algebra quotient(a.field(), std::move(names), mult, q.projection * a.unit());
  AlgebraMorphism pi(a, quotient, q.projection);
  return QuotientAlgebra{std::move(quotient), std::move(pi), std::move(q.section)};
}

std::string format_element(const std::vector<std::string>& basis_names, std::span<const Scalar> v) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].to_string();
    const bool negative = v[i].rational() != nullptr && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (negative) {
      out << "-";
    } else if (!first) {
      out << "+";
    }
    if (c != "1") out << c << "*";
    out << basis_names[i];
    first = false;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace hopfkit
