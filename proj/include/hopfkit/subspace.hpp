#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hopfkit/matrix.hpp"

namespace hopfkit {

/// A linear subspace of k^n stored by its canonical reduced-row-echelon
/// basis, so two Subspace values are equal as sets iff they compare equal.
class Subspace {
 public:
  /// Span of arbitrary vectors (zero vectors and repeats allowed).
  static Subspace span(const Field& f, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  /// Row space of a matrix with ambient_dim columns.
  static Subspace row_space(const Matrix& m);
  static Subspace column_space(const Matrix& m) { return row_space(m.transpose()); }
  static Subspace zero(const Field& f, std::size_t ambient_dim);
  static Subspace full(const Field& f, std::size_t ambient_dim);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  /// RREF basis, one vector per row.
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector vector(std::size_t i) const;
  std::vector<Vector> vectors() const;

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v (which must lie in the subspace) w.r.t. basis(): these
  /// are simply the entries of v at the pivot columns.
  Vector coordinates(std::span<const Scalar> v) const;
  /// v minus its projection along the basis; zero at every pivot column.
  Vector reduce(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  explicit Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// Null space {x : m x = 0}.
Subspace kernel(const Matrix& m);
/// Image m(u) of a subspace of the domain.
Subspace image(const Matrix& m, const Subspace& u);
/// {x : f x in target}; always contains ker f.
Subspace preimage_subspace(const Matrix& f, const Subspace& target);

/// Quotient k^n / w with the non-pivot coordinates of w as quotient basis.
struct QuotientSpace {
  Matrix projection;  ///< quo_dim x ambient, kernel exactly w
  Matrix section;     ///< ambient x quo_dim, projection * section = id
  std::size_t quo_dim;
};
QuotientSpace quotient_space(std::size_t ambient_dim, const Subspace& w);

/// Row-major flattening of multi-indices into a tensor power of spaces.
class TensorIndex {
 public:
  explicit TensorIndex(std::vector<std::size_t> factor_dims);

  std::size_t total() const { return total_; }
  const std::vector<std::size_t>& factor_dims() const { return dims_; }
  std::size_t flatten(std::span<const std::size_t> multi) const;
  std::vector<std::size_t> unflatten(std::size_t flat) const;

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_;
};

}  // namespace hopfkit
