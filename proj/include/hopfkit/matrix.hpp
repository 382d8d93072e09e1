#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
/// y += c * x
void axpy(Vector& y, const Scalar& c, std::span<const Scalar> x);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scaled(const Scalar& c, const Vector& v);
/// Tensor product of coordinate vectors, row-major (left factor slowest).
Vector tensor(std::span<const Scalar> a, std::span<const Scalar> b);

/// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> v);

  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, std::span<const Scalar> x);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

inline Vector operator*(const Matrix& a, const Vector& x) { return a * std::span<const Scalar>(x); }

/// Kronecker product; realizes f (x) g on row-major tensor coordinates.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, unsigned n);

/// (id_left (x) m (x) id_right) x for x in k^left (x) k^m.cols (x) k^right.
Vector apply_on_factor(const Matrix& m, std::span<const Scalar> x, std::size_t left_dim, std::size_t right_dim);

struct Rref {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination. Deterministic: the
/// pivot is always the first nonzero entry at or below the current row.
Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace hopfkit
