#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/check.hpp"
#include "hopfkit/matrix.hpp"
#include "hopfkit/subspace.hpp"

namespace hopfkit {

/// Sparse structure-constant entry (i, j, k, c).
struct Entry3 {
  std::size_t i, j, k;
  Scalar c;
};

/// Sparse matrix entry (row, col, c).
struct Entry2 {
  std::size_t row, col;
  Scalar c;
};

/// Finite-dimensional algebra given by structure constants
/// e_i e_j = sum_k m[i][j][k] e_k and the coordinates of its unit.
///
/// Construction validates shapes only; use check_algebra() for the axioms.
class Algebra {
 public:
  using Term = std::pair<std::size_t, Scalar>;

  Algebra(Field f, std::vector<std::string> basis_names, const std::vector<Entry3>& mult, Vector unit);

  const Field& field() const { return field_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Vector& unit() const { return unit_; }

  /// Nonzero terms of e_i e_j, sorted by k.
  const std::vector<Term>& product_terms(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  std::vector<Entry3> entries() const;

  Vector product(std::size_t i, std::size_t j) const;
  Vector multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;
  /// Matrix of x -> a x.
  Matrix left_multiplication(std::span<const Scalar> a) const;
  /// Matrix of x -> x a.
  Matrix right_multiplication(std::span<const Scalar> a) const;
  /// The multiplication map A (x) A -> A as a dim x dim^2 matrix.
  Matrix multiplication_map() const;

  /// Same dimension and structure constants (basis names ignored).
  bool same_structure(const Algebra& o) const;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<std::vector<Term>> products_;
  Vector unit_;
};

/// Product of two elements of A (x) B in the tensor product algebra, without
/// materializing its structure constants.
Vector tensor_multiply(const Algebra& a, const Algebra& b, std::span<const Scalar> x, std::span<const Scalar> y);

/// The tensor product algebra with basis a_i (x) b_j at index i * dim B + j.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);

/// Associativity and two-sided unit law, one violation per failing basis
/// triple / index.
ValidityReport check_algebra(const Algebra& a);

/// A x J and J x A inside J. The witness is (basis index, generator row, side)
/// with side 0 = left product e_i * v, 1 = right product v * e_i.
Witnessed is_two_sided_ideal(const Algebra& a, const Subspace& j);

/// Contains the unit and is closed under multiplication.
Witnessed is_subalgebra(const Algebra& a, const Subspace& s);

/// Linear map between algebras, matrix of shape target.dim x source.dim.
class AlgebraMorphism {
 public:
  AlgebraMorphism(Algebra source, Algebra target, Matrix matrix);

  const Algebra& source() const { return source_; }
  const Algebra& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  Vector operator()(std::span<const Scalar> x) const { return matrix_ * x; }

 private:
  Algebra source_;
  Algebra target_;
  Matrix matrix_;
};

AlgebraMorphism identity_morphism(const Algebra& a);
/// g o f
AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f);

/// Unit preserved and f(e_i e_j) = f(e_i) f(e_j) for all basis pairs. Unit
/// failure has empty indices; multiplicativity failure reports (i, j).
Witnessed is_algebra_morphism(const AlgebraMorphism& f);

struct QuotientAlgebra {
  Algebra algebra;
  AlgebraMorphism projection;
  /// Lifts quotient basis vectors to the non-pivot coordinates of A.
  Matrix section;
};

/// A / I with basis the non-pivot coordinates of I. Throws PreconditionError
/// when I is not a two-sided ideal.
QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal);

/// Human-readable expression for a coordinate vector, e.g. "1-g" or "2*x+gx".
std::string format_element(const std::vector<std::string>& basis_names, std::span<const Scalar> v);

}  // namespace hopfkit
