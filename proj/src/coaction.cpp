#include "hopfkit/coaction.hpp"

#include "hopfkit/error.hpp"

namespace hopfkit {

Coaction::Coaction(Algebra comodule, HopfAlgebra hopf, Matrix map)
    : comodule_(std::move(comodule)), hopf_(std::move(hopf)), map_(std::move(map)) {
  if (comodule_.field() != hopf_.field()) throw DimensionMismatch("coaction: algebra and Hopf algebra live over different fields");
  if (map_.rows() != comodule_.dim() * hopf_.dim() || map_.cols() != comodule_.dim()) {
    throw DimensionMismatch("coaction: map shape does not match dim A * dim H x dim A");
  }
}

Coaction Coaction::from_entries(Algebra comodule, HopfAlgebra hopf, const std::vector<Entry3>& entries) {
  const std::size_t da = comodule.dim(), dh = hopf.dim();
  Matrix m(comodule.field(), da * dh, da);
  for (const auto& e : entries) {
    if (e.i >= da || e.j >= da || e.k >= dh) {
      throw DimensionMismatch("coaction: map index out of range (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                              "," + std::to_string(e.k) + ")");
    }
    m(e.j * dh + e.k, e.i) += e.c;
  }
  return Coaction(std::move(comodule), std::move(hopf), std::move(m));
}

std::vector<Entry3> Coaction::entries() const {
  std::vector<Entry3> out;
  const std::size_t dh = hopf_.dim();
  for (std::size_t i = 0; i < map_.cols(); ++i) {
    for (std::size_t p = 0; p < map_.rows(); ++p) {
      if (!map_(p, i).is_zero()) out.push_back({i, p / dh, p % dh, map_(p, i)});
    }
  }
  return out;
}

Coaction trivial_coaction(const Algebra& a, const HopfAlgebra& h) {
  Matrix m(a.field(), a.dim() * h.dim(), a.dim());
  const Vector& one = h.algebra().unit();
  for (std::size_t i = 0; i < a.dim(); ++i) m.set_column(i, tensor(unit_vector(a.field(), a.dim(), i), one));
  return Coaction(a, h, std::move(m));
}

Coaction regular_coaction(const HopfAlgebra& h) { return Coaction(h.algebra(), h, h.comultiplication()); }

Coaction pushforward_coaction(const Coaction& c, const Matrix& psi, const HopfAlgebra& target) {
  if (psi.cols() != c.hopf().dim() || psi.rows() != target.dim()) throw DimensionMismatch("pushforward_coaction: psi shape mismatch");
  Matrix m = kron(Matrix::identity(c.comodule().field(), c.comodule().dim()), psi) * c.map();
  return Coaction(c.comodule(), target, std::move(m));
}

ValidityReport check_coaction(const Coaction& c) {
  ValidityReport report;
  const Algebra& a = c.comodule();
  const HopfAlgebra& h = c.hopf();
  const std::size_t da = a.dim(), dh = h.dim();
  const Field& f = a.field();
  const Matrix eps = h.counit_map();
  CheckItem& coassoc = report.item("coassociativity");
  CheckItem& counit = report.item("counitality");
  std::vector<Vector> images;
  for (std::size_t i = 0; i < da; ++i) images.push_back(c.image(i));
  for (std::size_t i = 0; i < da; ++i) {
    const auto& name = a.basis_names()[i];
    if (apply_on_factor(c.map(), images[i], 1, dh) != apply_on_factor(h.comultiplication(), images[i], da, 1)) {
      coassoc.record({{i}, "(delta (x) id) delta(" + name + ") != (id (x) Delta) delta(" + name + ")"});
    }
    if (apply_on_factor(eps, images[i], da, 1) != unit_vector(f, da, i)) {
      counit.record({{i}, "(id (x) eps) delta(" + name + ") != " + name});
    }
  }
  CheckItem& mult = report.item("algebra-morphism");
  if (c.apply(a.unit()) != tensor(a.unit(), h.algebra().unit())) mult.record({{}, "delta(1) != 1 (x) 1"});
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      if (c.apply(a.product(i, j)) != tensor_multiply(a, h.algebra(), images[i], images[j])) {
        mult.record({{i, j}, "delta(" + a.basis_names()[i] + "*" + a.basis_names()[j] + ") != delta(" + a.basis_names()[i] + ")delta(" + a.basis_names()[j] + ")"});
      }
    }
  }
  return report;
}

Subspace coefficient_space(const Coaction& c) {
  const std::size_t da = c.comodule().dim(), dh = c.hopf().dim();
  std::vector<Vector> legs;
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      Vector leg(dh, c.hopf().field().zero());
      for (std::size_t k = 0; k < dh; ++k) leg[k] = c.map()(j * dh + k, i);
      if (!is_zero(leg)) legs.push_back(std::move(leg));
    }
  }
  Subspace space = Subspace::span(c.hopf().field(), dh, legs);
  if (!(coalgebra_closure(c.hopf(), space) == space)) {
    throw InvariantViolation("coefficient_space: result is not a subcoalgebra; input is not a coaction");
  }
  return space;
}

Coaction corestrict(const Coaction& c, const HopfSubalgebra& l) {
  const std::size_t da = c.comodule().dim(), dh = c.hopf().dim(), m = l.carrier.dim();
  if (l.carrier.ambient_dim() != dh) throw DimensionMismatch("corestrict: carrier does not live in H");
  const auto& piv = l.carrier.pivots();
  Matrix restricted(c.comodule().field(), da * m, da);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      Vector leg(dh, c.hopf().field().zero());
      for (std::size_t k = 0; k < dh; ++k) leg[k] = c.map()(j * dh + k, i);
      if (!l.carrier.contains(leg)) {
        throw PreconditionError("corestrict: a right leg of delta(" + c.comodule().basis_names()[i] + ") leaves the Hopf subalgebra");
      }
      for (std::size_t r = 0; r < m; ++r) restricted(j * m + r, i) = leg[piv[r]];
    }
  }
  return Coaction(c.comodule(), l.induced, std::move(restricted));
}

HopfImage hopf_image(const Coaction& c) {
  HopfSubalgebra sub = hopf_subalgebra_closure(c.hopf(), coefficient_space(c));
  Coaction im = corestrict(c, sub);
  const Matrix lift = kron(Matrix::identity(c.comodule().field(), c.comodule().dim()), sub.inclusion.matrix());
  if (!(lift * im.map() == c.map())) throw InvariantViolation("hopf_image: (id (x) iota) o delta_im != delta");
  return HopfImage{std::move(sub), std::move(im)};
}

bool is_inner_faithful(const Coaction& c) { return hopf_image(c).sub.carrier.dim() == c.hopf().dim(); }

std::optional<Factorization> factors_through(const Coaction& c, const HopfSubalgebra& l) {
  if (!l.carrier.contains(coefficient_space(c))) return std::nullopt;
  if (!l.carrier.contains(hopf_image(c).sub.carrier)) {
    throw InvariantViolation("factors_through: Hopf image not contained in a factorizing Hopf subalgebra");
  }
  return Factorization{l, corestrict(c, l)};
}

Subspace coinvariants(const Coaction& c) {
  const Algebra& a = c.comodule();
  Matrix diff = c.map() - kron(Matrix::identity(a.field(), a.dim()), Matrix::from_columns(a.field(), c.hopf().dim(), {c.hopf().algebra().unit()}));
  Subspace result = kernel(diff);
  if (!is_subalgebra(a, result)) throw InvariantViolation("coinvariants: result is not a subalgebra; input is not a comodule algebra");
  return result;
}

Coaction tensor_coaction(const Coaction& c1, const Coaction& c2) {
  const Algebra ab = tensor_algebra(c1.comodule(), c2.comodule());
  const HopfAlgebra h = tensor_hopf(c1.hopf(), c2.hopf());
  const std::size_t db = c2.comodule().dim(), dh2 = c2.hopf().dim();
  std::vector<Entry3> entries;
  const auto e1 = c1.entries();
  const auto e2 = c2.entries();
  for (const auto& x : e1) {
    for (const auto& y : e2) entries.push_back({x.i * db + y.i, x.j * db + y.j, x.k * dh2 + y.k, x.c * y.c});
  }
  return Coaction::from_entries(ab, h, entries);
}

Coaction conjugate_coaction(const Coaction& c, const AlgebraMorphism& theta) {
  if (!theta.source().same_structure(c.comodule())) throw PreconditionError("conjugate_coaction: theta does not start at the comodule algebra");
  if (auto w = is_algebra_morphism(theta); !w) throw PreconditionError("conjugate_coaction: theta is not an algebra morphism: " + w.witness->detail);
  auto inv = inverse(theta.matrix());
  if (!inv) throw PreconditionError("conjugate_coaction: theta is not invertible");
  Matrix m = kron(theta.matrix(), Matrix::identity(c.hopf().field(), c.hopf().dim())) * c.map() * *inv;
  Coaction out(theta.target(), c.hopf(), std::move(m));
  if (!(coefficient_space(out) == coefficient_space(c))) throw InvariantViolation("conjugate_coaction: coefficient space changed under conjugation");
  return out;
}

}  // namespace hopfkit
