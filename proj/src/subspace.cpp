#include "hopfkit/subspace.hpp"

#include <algorithm>
#include <string>

#include "hopfkit/error.hpp"

namespace hopfkit {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v, const char* op) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw DimensionMismatch(std::string(op) + ": ambient dimensions " + std::to_string(u.ambient_dim()) +
                            " and " + std::to_string(v.ambient_dim()) + " differ");
  }
}

}  // namespace

Subspace Subspace::span(const Field& f, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Matrix m(f, vectors.size(), ambient_dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient_dim) throw DimensionMismatch("span: vector length differs from ambient dimension");
    for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = vectors[r][c];
  }
  return row_space(m);
}

Subspace Subspace::row_space(const Matrix& m) {
  Rref r = rref(m);
  Matrix basis(m.field(), r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c) basis(i, c) = r.reduced(i, c);
  }
  return Subspace(std::move(basis), std::move(r.pivots));
}

Subspace Subspace::zero(const Field& f, std::size_t ambient_dim) { return Subspace(Matrix(f, 0, ambient_dim), {}); }

Subspace Subspace::full(const Field& f, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(f, ambient_dim), std::move(pivots));
}

Vector Subspace::vector(std::size_t i) const {
  auto r = basis_.row(i);
  return Vector(r.begin(), r.end());
}

std::vector<Vector> Subspace::vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(vector(i));
  return out;
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("reduce: vector length differs from ambient dimension");
  Vector out(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar c = out[pivots_[i]];
    if (!c.is_zero()) axpy(out, -c, basis_.row(i));
  }
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const { return hopfkit::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionMismatch("contains: ambient dimensions differ");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("coordinates: vector length differs from ambient dimension");
  Vector out;
  out.reserve(dim());
  for (std::size_t p : pivots_) out.push_back(v[p]);
  return out;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "subspace_sum");
  return Subspace::row_space(vstack(u.basis(), v.basis()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "subspace_intersect");
  // Solve U^T x = V^T y; the intersection is U^T x over the solutions.
  Matrix neg_v(v.field(), v.ambient_dim(), v.dim());
  neg_v -= v.basis().transpose();
  Matrix system = hstack(u.basis().transpose(), neg_v);
  Subspace sol = kernel(system);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < sol.dim(); ++i) {
    Vector x(sol.basis().row(i).begin(), sol.basis().row(i).begin() + static_cast<std::ptrdiff_t>(u.dim()));
    Vector w = zero_vector(u.field(), u.ambient_dim());
    for (std::size_t r = 0; r < u.dim(); ++r) axpy(w, x[r], u.basis().row(r));
    out.push_back(std::move(w));
  }
  return Subspace::span(u.field(), u.ambient_dim(), out);
}

Subspace kernel(const Matrix& m) {
  Rref r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(m.field(), n, free);
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, basis);
}

Subspace image(const Matrix& m, const Subspace& u) {
  if (u.ambient_dim() != m.cols()) throw DimensionMismatch("image: subspace does not live in the domain");
  std::vector<Vector> out;
  out.reserve(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out.push_back(m * u.basis().row(i));
  return Subspace::span(m.field(), m.rows(), out);
}

Subspace preimage_subspace(const Matrix& f, const Subspace& target) {
  if (target.ambient_dim() != f.rows()) throw DimensionMismatch("preimage_subspace: target does not live in the codomain");
  QuotientSpace q = quotient_space(f.rows(), target);
  return kernel(q.projection * f);
}

QuotientSpace quotient_space(std::size_t ambient_dim, const Subspace& w) {
  if (w.ambient_dim() != ambient_dim) throw DimensionMismatch("quotient_space: subspace ambient dimension mismatch");
  const Field& f = w.field();
  std::vector<std::size_t> pivot_row(ambient_dim, ambient_dim);
  for (std::size_t i = 0; i < w.dim(); ++i) pivot_row[w.pivots()[i]] = i;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (pivot_row[c] == ambient_dim) free_cols.push_back(c);
  }
  const std::size_t q = free_cols.size();
  Matrix projection(f, q, ambient_dim);
  Matrix section(f, ambient_dim, q);
  for (std::size_t k = 0; k < q; ++k) {
    section(free_cols[k], k) = f.one();
    projection(k, free_cols[k]) = f.one();
  }
  // A pivot coordinate e_p equals e_p - row_p (mod w), which has support on
  // free columns only.
  for (std::size_t i = 0; i < w.dim(); ++i) {
    const std::size_t p = w.pivots()[i];
    for (std::size_t k = 0; k < q; ++k) projection(k, p) = -w.basis()(i, free_cols[k]);
  }
  return QuotientSpace{std::move(projection), std::move(section), q};
}

TensorIndex::TensorIndex(std::vector<std::size_t> factor_dims) : dims_(std::move(factor_dims)), total_(1) {
  for (std::size_t d : dims_) total_ *= d;
}

std::size_t TensorIndex::flatten(std::span<const std::size_t> multi) const {
  if (multi.size() != dims_.size()) throw DimensionMismatch("flatten: wrong number of indices");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (multi[k] >= dims_[k]) throw DimensionMismatch("flatten: index out of range");
    flat = flat * dims_[k] + multi[k];
  }
  return flat;
}

std::vector<std::size_t> TensorIndex::unflatten(std::size_t flat) const {
  if (flat >= total_) throw DimensionMismatch("unflatten: index out of range");
  std::vector<std::size_t> multi(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    multi[k] = flat % dims_[k];
    flat /= dims_[k];
  }
  return multi;
}

}  // namespace hopfkit
