#include "hopfkit/hopf.hpp"

#include "hopfkit/error.hpp"

namespace hopfkit {

namespace {

Matrix build_comult(const Field& f, std::size_t d, const std::vector<Entry3>& entries) {
  Matrix m(f, d * d, d);
  for (const auto& e : entries) {
    if (e.i >= d || e.j >= d || e.k >= d) {
      throw DimensionMismatch("hopf: comultiplication index out of range (" + std::to_string(e.i) + "," +
                              std::to_string(e.j) + "," + std::to_string(e.k) + ")");
    }
    m(e.j * d + e.k, e.i) += e.c;
  }
  return m;
}

Matrix checked_inverse(const Matrix& s) {
  auto inv = inverse(s);
  if (!inv) throw PreconditionError("hopf: antipode is not invertible");
  return *inv;
}

std::string name_of(const HopfAlgebra& h, std::size_t i) { return h.basis_names()[i]; }

}  // namespace

HopfAlgebra::HopfAlgebra(Algebra alg, const std::vector<Entry3>& comult, Vector counit, Matrix antipode)
    : alg_(std::move(alg)),
      comult_(build_comult(alg_.field(), alg_.dim(), comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)),
      antipode_inverse_(alg_.field(), 0, 0) {
  const std::size_t d = alg_.dim();
  if (counit_.size() != d) throw DimensionMismatch("hopf: counit length differs from dimension");
  if (antipode_.rows() != d || antipode_.cols() != d) throw DimensionMismatch("hopf: antipode shape differs from dimension");
  antipode_inverse_ = checked_inverse(antipode_);
}

std::vector<Entry3> HopfAlgebra::comult_entries() const {
  std::vector<Entry3> out;
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t p = 0; p < d * d; ++p) {
      if (!comult_(p, i).is_zero()) out.push_back({i, p / d, p % d, comult_(p, i)});
    }
  }
  return out;
}

Scalar HopfAlgebra::counit(std::span<const Scalar> x) const {
  if (x.size() != dim()) throw DimensionMismatch("counit: element length differs from dimension");
  Scalar s = field().zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!x[i].is_zero()) s += x[i] * counit_[i];
  }
  return s;
}

Matrix HopfAlgebra::counit_map() const { return Matrix::from_rows(field(), dim(), {counit_}); }

ValidityReport check_hopf(const HopfAlgebra& h) {
  ValidityReport report = check_algebra(h.algebra());
  const std::size_t d = h.dim();
  const Field& f = h.field();
  const Algebra& a = h.algebra();
  const Matrix eps = h.counit_map();
  const Matrix mult = a.multiplication_map();

  CheckItem& coassoc = report.item("coassociativity");
  CheckItem& counit = report.item("counit");
  CheckItem& antipode = report.item("antipode");
  for (std::size_t i = 0; i < d; ++i) {
    Vector delta = h.coproduct(i);
    if (apply_on_factor(h.comultiplication(), delta, 1, d) != apply_on_factor(h.comultiplication(), delta, d, 1)) {
      coassoc.record({{i}, "(Delta (x) id) Delta(" + name_of(h, i) + ") != (id (x) Delta) Delta(" + name_of(h, i) + ")"});
    }
    Vector e = unit_vector(f, d, i);
    if (apply_on_factor(eps, delta, 1, d) != e) counit.record({{i}, "(eps (x) id) Delta(" + name_of(h, i) + ") != " + name_of(h, i)});
    if (apply_on_factor(eps, delta, d, 1) != e) counit.record({{i}, "(id (x) eps) Delta(" + name_of(h, i) + ") != " + name_of(h, i)});
    Vector expected = scaled(h.counit()[i], a.unit());
    if (mult * apply_on_factor(h.antipode(), delta, 1, d) != expected) {
      antipode.record({{i}, "m(S (x) id) Delta(" + name_of(h, i) + ") != eps(" + name_of(h, i) + ") 1"});
    }
    if (mult * apply_on_factor(h.antipode(), delta, d, 1) != expected) {
      antipode.record({{i}, "m(id (x) S) Delta(" + name_of(h, i) + ") != eps(" + name_of(h, i) + ") 1"});
    }
  }

  CheckItem& delta_mult = report.item("comultiplication-multiplicative");
  CheckItem& eps_mult = report.item("counit-multiplicative");
  for (std::size_t i = 0; i < d; ++i) {
    Vector di = h.coproduct(i);
    for (std::size_t j = 0; j < d; ++j) {
      Vector prod = a.product(i, j);
      if (h.comultiply(prod) != tensor_multiply(a, a, di, h.coproduct(j))) {
        delta_mult.record({{i, j}, "Delta(" + name_of(h, i) + "*" + name_of(h, j) + ") != Delta(" + name_of(h, i) + ")Delta(" + name_of(h, j) + ")"});
      }
      if (h.counit(prod) != h.counit()[i] * h.counit()[j]) {
        eps_mult.record({{i, j}, "eps(" + name_of(h, i) + "*" + name_of(h, j) + ") != eps(" + name_of(h, i) + ")eps(" + name_of(h, j) + ")"});
      }
    }
  }
  CheckItem& unital = report.item("bialgebra-unit");
  if (h.comultiply(a.unit()) != tensor(a.unit(), a.unit())) unital.record({{}, "Delta(1) != 1 (x) 1"});
  if (!h.counit(a.unit()).is_one()) unital.record({{}, "eps(1) != 1"});

  CheckItem& invertible = report.item("antipode-invertible");
  if (!inverse(h.antipode())) invertible.record({{}, "antipode matrix is singular"});
  return report;
}

ValidityReport check_hopf_morphism(const Matrix& psi, const HopfAlgebra& src, const HopfAlgebra& dst) {
  if (psi.rows() != dst.dim() || psi.cols() != src.dim()) throw DimensionMismatch("check_hopf_morphism: matrix shape mismatch");
  ValidityReport report;
  const std::size_t d = src.dim();
  const Algebra& sa = src.algebra();
  const Algebra& ta = dst.algebra();
  CheckItem& unit = report.item("morphism-unit");
  if (psi * sa.unit() != ta.unit()) unit.record({{}, "psi(1) != 1"});
  CheckItem& mult = report.item("morphism-multiplicative");
  CheckItem& comult = report.item("morphism-comultiplicative");
  CheckItem& counit = report.item("morphism-counit");
  CheckItem& antipode = report.item("morphism-antipode");
  std::vector<Vector> images;
  for (std::size_t i = 0; i < d; ++i) images.push_back(psi.column(i));
  const Matrix psi2 = kron(psi, psi);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (psi * sa.product(i, j) != ta.multiply(images[i], images[j])) mult.record({{i, j}, "psi(" + name_of(src, i) + "*" + name_of(src, j) + ") != psi(" + name_of(src, i) + ")psi(" + name_of(src, j) + ")"});
    }
    if (dst.comultiply(images[i]) != psi2 * src.coproduct(i)) comult.record({{i}, "Delta psi(" + name_of(src, i) + ") != (psi (x) psi) Delta(" + name_of(src, i) + ")"});
    if (dst.counit(images[i]) != src.counit()[i]) counit.record({{i}, "eps psi(" + name_of(src, i) + ") != eps(" + name_of(src, i) + ")"});
    if (dst.antipode() * images[i] != psi * src.antipode().column(i)) antipode.record({{i}, "S psi(" + name_of(src, i) + ") != psi S(" + name_of(src, i) + ")"});
  }
  return report;
}

Subspace counit_kernel(const HopfAlgebra& h) { return kernel(h.counit_map()); }

Vector adjoint_coaction(const HopfAlgebra& h, std::span<const Scalar> v) {
  const std::size_t d = h.dim();
  const Algebra& a = h.algebra();
  const Field& f = h.field();
  Vector twice = apply_on_factor(h.comultiplication(), h.comultiply(v), 1, d);
  Vector out = zero_vector(f, d * d);
  std::vector<Vector> s_images;
  for (std::size_t j = 0; j < d; ++j) s_images.push_back(h.antipode().column(j));
  for (std::size_t p = 0; p < twice.size(); ++p) {
    if (twice[p].is_zero()) continue;
    const std::size_t j = p / (d * d), k = (p / d) % d, l = p % d;
    // e_j (x) e_k (x) e_l  ->  e_k (x) S(e_j) e_l
    Vector right = a.multiply(s_images[j], unit_vector(f, d, l));
    for (std::size_t t = 0; t < d; ++t) {
      if (!right[t].is_zero()) out[k * d + t] += twice[p] * right[t];
    }
  }
  return out;
}

Matrix adjoint_coaction_map(const HopfAlgebra& h) {
  Matrix m(h.field(), h.dim() * h.dim(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) m.set_column(i, adjoint_coaction(h, unit_vector(h.field(), h.dim(), i)));
  return m;
}

Subspace coalgebra_closure(const HopfAlgebra& h, const Subspace& v) {
  const std::size_t d = h.dim();
  if (v.ambient_dim() != d) throw DimensionMismatch("coalgebra_closure: subspace does not live in H");
  Subspace current = v;
  while (true) {
    std::vector<Vector> legs = current.vectors();
    for (std::size_t r = 0; r < current.dim(); ++r) {
      Vector twice = apply_on_factor(h.comultiplication(), h.comultiply(current.basis().row(r)), 1, d);
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t l = 0; l < d; ++l) {
          Vector middle = zero_vector(h.field(), d);
          for (std::size_t k = 0; k < d; ++k) middle[k] = twice[(j * d + k) * d + l];
          if (!is_zero(middle)) legs.push_back(std::move(middle));
        }
      }
    }
    Subspace next = Subspace::span(h.field(), d, legs);
    if (next.dim() == current.dim()) return next;
    current = std::move(next);
  }
}

HopfSubalgebra hopf_subalgebra(const HopfAlgebra& h, const Subspace& carrier) {
  const std::size_t d = h.dim();
  if (carrier.ambient_dim() != d) throw DimensionMismatch("hopf_subalgebra: carrier does not live in H");
  const Field& f = h.field();
  const Algebra& a = h.algebra();
  const std::size_t m = carrier.dim();
  const auto& piv = carrier.pivots();
  if (!carrier.contains(a.unit())) throw PreconditionError("hopf_subalgebra: carrier does not contain the unit");

  std::vector<std::string> names;
  std::vector<Vector> basis = carrier.vectors();
  for (const auto& b : basis) names.push_back(format_element(h.basis_names(), b));

  std::vector<Entry3> mult;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) {
      Vector prod = a.multiply(basis[r], basis[s]);
      if (!carrier.contains(prod)) throw PreconditionError("hopf_subalgebra: carrier not closed under multiplication (" + names[r] + "*" + names[s] + ")");
      Vector c = carrier.coordinates(prod);
      for (std::size_t t = 0; t < m; ++t) {
        if (!c[t].is_zero()) mult.push_back({r, s, t, c[t]});
      }
    }
  }
  std::vector<Entry3> comult;
  Vector counit(m, f.zero());
  Matrix antipode(f, m, m);
  for (std::size_t r = 0; r < m; ++r) {
    Vector delta = h.comultiply(basis[r]);
    Vector rebuilt = zero_vector(f, d * d);
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t t = 0; t < m; ++t) {
        const Scalar& c = delta[piv[s] * d + piv[t]];
        if (c.is_zero()) continue;
        comult.push_back({r, s, t, c});
        axpy(rebuilt, c, tensor(basis[s], basis[t]));
      }
    }
    if (rebuilt != delta) throw PreconditionError("hopf_subalgebra: carrier not closed under comultiplication (" + names[r] + ")");
    counit[r] = h.counit(basis[r]);
    Vector s_img = h.antipode() * basis[r];
    if (!carrier.contains(s_img)) throw PreconditionError("hopf_subalgebra: carrier not closed under the antipode (" + names[r] + ")");
    antipode.set_column(r, carrier.coordinates(s_img));
  }
  Algebra sub(f, names, mult, carrier.coordinates(a.unit()));
  HopfAlgebra induced(sub, comult, std::move(counit), std::move(antipode));
  AlgebraMorphism inclusion(sub, a, carrier.basis().transpose());
  return HopfSubalgebra{carrier, std::move(induced), std::move(inclusion)};
}

HopfSubalgebra hopf_subalgebra_closure(const HopfAlgebra& h, const Subspace& v) {
  const std::size_t d = h.dim();
  if (v.ambient_dim() != d) throw DimensionMismatch("hopf_subalgebra_closure: subspace does not live in H");
  const Field& f = h.field();
  const Algebra& a = h.algebra();
  Subspace current = coalgebra_closure(h, subspace_sum(v, Subspace::span(f, d, {a.unit()})));
  for (std::size_t iteration = 0; iteration <= d; ++iteration) {
    std::vector<Vector> gens = current.vectors();
    for (std::size_t r = 0; r < current.dim(); ++r) {
      for (std::size_t s = 0; s < current.dim(); ++s) gens.push_back(a.multiply(current.basis().row(r), current.basis().row(s)));
      gens.push_back(h.antipode() * current.basis().row(r));
    }
    Subspace generated = Subspace::span(f, d, gens);
    Subspace closed = coalgebra_closure(h, generated);
    // Products and antipodal images of a subcoalgebra are again subcoalgebras.
    if (!(closed == generated)) throw InvariantViolation("hopf_subalgebra_closure: re-closure enlarged a subcoalgebra; input is not a Hopf algebra");
    if (closed.dim() == current.dim()) return hopf_subalgebra(h, closed);
    current = std::move(closed);
  }
  throw InvariantViolation("hopf_subalgebra_closure: no fixpoint within dim H iterations");
}

HopfAlgebra dual_hopf(const HopfAlgebra& h, const std::string& name_prefix, const std::string& name_suffix) {
  const Field& f = h.field();
  std::vector<std::string> names;
  for (const auto& n : h.basis_names()) names.push_back(name_prefix + n + name_suffix);
  // (e^a e^b)(e_i) = Delta[i][a][b];  Delta*(e^c)(e_a (x) e_b) = m[a][b][c].
  std::vector<Entry3> mult;
  for (const auto& e : h.comult_entries()) mult.push_back({e.j, e.k, e.i, e.c});
  std::vector<Entry3> comult;
  for (const auto& e : h.algebra().entries()) comult.push_back({e.k, e.i, e.j, e.c});
  Algebra alg(f, names, mult, h.counit());
  return HopfAlgebra(std::move(alg), comult, h.algebra().unit(), h.antipode().transpose());
}

std::optional<bool> is_cosemisimple(const HopfAlgebra& h) {
  if (!h.field().is_rational()) return std::nullopt;
  const HopfAlgebra dual = dual_hopf(h);
  const Algebra& a = dual.algebra();
  const std::size_t d = a.dim();
  const Field& f = a.field();
  Vector traces(d, f.zero());
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t k = 0; k < d; ++k) traces[c] += a.structure_constant(c, k, k);
  }
  Matrix gram(f, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [k, c] : a.product_terms(i, j)) gram(i, j) += c * traces[k];
    }
  }
  return rank(gram) == d;
}

HopfAlgebra tensor_hopf(const HopfAlgebra& h1, const HopfAlgebra& h2) {
  const std::size_t d2 = h2.dim();
  Algebra alg = tensor_algebra(h1.algebra(), h2.algebra());
  std::vector<Entry3> comult;
  const auto c1 = h1.comult_entries();
  const auto c2 = h2.comult_entries();
  for (const auto& x : c1) {
    for (const auto& y : c2) comult.push_back({x.i * d2 + y.i, x.j * d2 + y.j, x.k * d2 + y.k, x.c * y.c});
  }
  return HopfAlgebra(std::move(alg), comult, tensor(h1.counit(), h2.counit()), kron(h1.antipode(), h2.antipode()));
}

Algebra transport_algebra(const Algebra& a, const Matrix& t, std::vector<std::string> names) {
  auto t_inv = inverse(t);
  if (!t_inv || t.rows() != a.dim()) throw PreconditionError("transport_algebra: basis change is not invertible");
  const std::size_t d = a.dim();
  const Field& f = a.field();
  std::vector<Vector> pre;
  for (std::size_t i = 0; i < d; ++i) pre.push_back(t_inv->column(i));
  std::vector<Entry3> mult;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vector prod = t * a.multiply(pre[i], pre[j]);
      for (std::size_t k = 0; k < d; ++k) {
        if (!prod[k].is_zero()) mult.push_back({i, j, k, prod[k]});
      }
    }
  }
  return Algebra(f, std::move(names), mult, t * a.unit());
}

HopfAlgebra transport_hopf(const HopfAlgebra& h, const Matrix& t, std::vector<std::string> names) {
  Algebra alg = transport_algebra(h.algebra(), t, std::move(names));
  const Matrix t_inv = *inverse(t);
  const std::size_t d = h.dim();
  const Matrix delta = kron(t, t) * h.comultiplication() * t_inv;
  std::vector<Entry3> comult;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t p = 0; p < d * d; ++p) {
      if (!delta(p, i).is_zero()) comult.push_back({i, p / d, p % d, delta(p, i)});
    }
  }
  const Matrix eps = h.counit_map() * t_inv;
  Vector counit(eps.row(0).begin(), eps.row(0).end());
  return HopfAlgebra(std::move(alg), comult, std::move(counit), t * h.antipode() * t_inv);
}

}  // namespace hopfkit
