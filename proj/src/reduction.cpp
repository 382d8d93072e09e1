#include "hopfkit/reduction.hpp"

#include "hopfkit/error.hpp"

namespace hopfkit {

namespace {

/// v in k^{left} (x) k^{right_dim} lies in n (x) k^{right_dim}.
bool tensor_contains(const Subspace& n, std::span<const Scalar> v, std::size_t right_dim) {
  const std::size_t left = n.ambient_dim();
  Vector slice(left, n.field().zero());
  for (std::size_t s = 0; s < right_dim; ++s) {
    for (std::size_t p = 0; p < left; ++p) slice[p] = v[p * right_dim + s];
    if (!n.contains(slice)) return false;
  }
  return true;
}

Subspace tensor_subspace(const Subspace& u, const Subspace& v) {
  return Subspace::row_space(kron(u.basis(), v.basis()));
}

Matrix unit_column(const Algebra& a) { return Matrix::from_columns(a.field(), a.dim(), {a.unit()}); }

std::string first_failure(const ValidityReport& r) {
  for (const auto& item : r.items()) {
    if (!item.passed()) return item.name + (item.violations.empty() ? "" : ": " + item.violations.front().detail);
  }
  return "";
}

/// delta_(x)(a (x) a') = a_(0) (x) a'_(0) (x) a_(1) a'_(1) as a (dA^2 dH) x dA^2 matrix.
Matrix tensor_square_coaction(const Coaction& c) {
  const Algebra& a = c.comodule();
  const Algebra& h = c.hopf().algebra();
  const std::size_t da = a.dim(), dh = h.dim();
  std::vector<std::vector<Entry3>> legs(da);
  for (const auto& e : c.entries()) legs[e.i].push_back(e);
  Matrix m(a.field(), da * da * dh, da * da);
  for (std::size_t p = 0; p < da; ++p) {
    for (std::size_t q = 0; q < da; ++q) {
      for (const auto& x : legs[p]) {
        for (const auto& y : legs[q]) {
          const Scalar c2 = x.c * y.c;
          for (const auto& [s, t] : h.product_terms(x.k, y.k)) m(((x.j * da + y.j) * dh) + s, p * da + q) += c2 * t;
        }
      }
    }
  }
  return m;
}

std::vector<Vector> balancing_relations(const Algebra& a, const std::vector<Vector>& acting) {
  const std::size_t d = a.dim();
  const Field& f = a.field();
  std::vector<Vector> rel;
  for (const auto& b : acting) {
    for (std::size_t p = 0; p < d; ++p) {
      const Vector ep = unit_vector(f, d, p);
      const Vector pb = a.multiply(ep, b);
      for (std::size_t q = 0; q < d; ++q) {
        const Vector eq = unit_vector(f, d, q);
        Vector r = tensor(pb, eq) - tensor(ep, a.multiply(b, eq));
        if (!is_zero(r)) rel.push_back(std::move(r));
      }
    }
  }
  return rel;
}

BalancedTensor make_balanced(const Algebra& a, Subspace relations) {
  QuotientSpace q = quotient_space(a.dim() * a.dim(), relations);
  return BalancedTensor{std::move(relations), std::move(q), true};
}

void require_bundle_shapes(const BundleMorphism& m, const Bundle& src, const Bundle& dst) {
  const Coaction& c = src.coaction;
  const Coaction& d = dst.coaction;
  if (m.phi.source().dim() != c.comodule().dim() || m.phi.target().dim() != d.comodule().dim()) {
    throw DimensionMismatch("bundle morphism: phi shape does not match the algebras");
  }
  if (m.psi.rows() != d.hopf().dim() || m.psi.cols() != c.hopf().dim()) {
    throw DimensionMismatch("bundle morphism: psi shape does not match the Hopf algebras");
  }
}

}  // namespace

Bundle make_bundle(Coaction coaction, Subspace calculus) {
  const std::size_t d = coaction.comodule().dim();
  if (calculus.ambient_dim() != d * d) throw DimensionMismatch("bundle: calculus does not live in A (x) A");
  return Bundle{std::move(coaction), std::move(calculus)};
}

BundleMorphism identity_bundle_morphism(const Bundle& b) {
  return BundleMorphism{identity_morphism(b.coaction.comodule()),
                        Matrix::identity(b.coaction.hopf().field(), b.coaction.hopf().dim())};
}

BundleMorphism compose(const BundleMorphism& g, const BundleMorphism& f) {
  return BundleMorphism{compose(g.phi, f.phi), g.psi * f.psi};
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Verified: return "verified";
    case ClaimStatus::Refuted: return "refuted on instance";
    case ClaimStatus::Unsupported: return "unsupported";
    case ClaimStatus::HypothesesUnmet: return "hypotheses unmet";
  }
  return "unknown";
}

Subspace augmentation_ideal(const Algebra& a, std::span<const Scalar> eps) {
  if (eps.size() != a.dim()) throw DimensionMismatch("augmentation: length does not match dim A");
  const Field& f = a.field();
  auto value = [&](std::span<const Scalar> x) {
    Scalar s = f.zero();
    for (std::size_t i = 0; i < x.size(); ++i) s += eps[i] * x[i];
    return s;
  };
  if (!value(a.unit()).is_one()) throw PreconditionError("augmentation: eps(1) != 1");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (value(a.product(i, j)) != eps[i] * eps[j]) {
        throw PreconditionError("augmentation: not multiplicative on (" + a.basis_names()[i] + ", " + a.basis_names()[j] + ")");
      }
    }
  }
  return kernel(Matrix::from_rows(f, a.dim(), {Vector(eps.begin(), eps.end())}));
}

Subspace largest_stable_ideal_within(const Coaction& c, const Subspace& seed) {
  const Algebra& a = c.comodule();
  const std::size_t d = a.dim(), dh = c.hopf().dim();
  if (seed.ambient_dim() != d) throw DimensionMismatch("largest_stable_ideal_within: seed does not live in A");
  const Matrix id_h = Matrix::identity(a.field(), dh);
  std::vector<Matrix> left, right;
  for (std::size_t k = 0; k < d; ++k) {
    const Vector ek = unit_vector(a.field(), d, k);
    left.push_back(a.left_multiplication(ek));
    right.push_back(a.right_multiplication(ek));
  }
  Subspace cur = seed;
  for (std::size_t step = 0; step <= d + 1 && !cur.is_zero(); ++step) {
    const Matrix p = quotient_space(d, cur).projection;
    Matrix cond = p;
    for (std::size_t k = 0; k < d; ++k) {
      cond = vstack(cond, p * left[k]);
      cond = vstack(cond, p * right[k]);
    }
    cond = vstack(cond, kron(p, id_h) * c.map());
    Subspace next = kernel(cond);
    if (next == cur) break;
    cur = std::move(next);
  }
  if (!is_two_sided_ideal(a, cur)) throw InvariantViolation("largest_stable_ideal_within: result is not an ideal");
  for (const auto& v : cur.vectors()) {
    if (!tensor_contains(cur, c.apply(v), dh)) throw InvariantViolation("largest_stable_ideal_within: result is not stable");
  }
  return cur;
}

QuotientCoaction quotient_coaction(const Coaction& c, const Subspace& ideal) {
  const Algebra& a = c.comodule();
  const std::size_t dh = c.hopf().dim();
  if (ideal.ambient_dim() != a.dim()) throw DimensionMismatch("quotient_coaction: ideal does not live in A");
  if (ideal.is_full()) throw PreconditionError("quotient_coaction: the ideal is all of A, so the unit collapses");
  if (auto w = is_two_sided_ideal(a, ideal); !w) throw PreconditionError("quotient_coaction: not a two-sided ideal: " + w.witness->detail);
  for (const auto& v : ideal.vectors()) {
    if (!tensor_contains(ideal, c.apply(v), dh)) {
      throw PreconditionError("quotient_coaction: not stable: delta(" + format_element(a.basis_names(), v) + ") leaves I (x) H");
    }
  }
  QuotientAlgebra q = quotient_algebra(a, ideal);
  const Matrix p_h = kron(q.projection.matrix(), Matrix::identity(a.field(), dh));
  Matrix map = p_h * c.map() * q.section;
  Coaction bar(q.algebra, c.hopf(), std::move(map));
  if (!(bar.map() * q.projection.matrix() == p_h * c.map())) {
    throw InvariantViolation("quotient_coaction: descended coaction does not commute with the projection");
  }
  return QuotientCoaction{std::move(q), std::move(bar)};
}

BalancedTensor balanced_tensor(const Algebra& a, const Subspace& b) {
  if (b.ambient_dim() != a.dim()) throw DimensionMismatch("balanced_tensor: B does not live in A");
  if (auto w = is_subalgebra(a, b); !w) throw PreconditionError("balanced_tensor: B is not a subalgebra: " + w.witness->detail);
  return make_balanced(a, Subspace::span(a.field(), a.dim() * a.dim(), balancing_relations(a, b.vectors())));
}

BalancedTensor balanced_tensor(const Algebra& a, const QuotientAlgebra& q, const Subspace& b0) {
  const Algebra& a0 = q.algebra;
  if (b0.ambient_dim() != a0.dim()) throw DimensionMismatch("balanced_tensor: B0 does not live in the quotient");
  if (auto w = is_subalgebra(a0, b0); !w) throw PreconditionError("balanced_tensor: B0 is not a subalgebra: " + w.witness->detail);
  std::vector<Vector> lifts;
  for (const auto& v : b0.vectors()) lifts.push_back(q.section * v);
  BalancedTensor out = make_balanced(a, Subspace::span(a.field(), a.dim() * a.dim(), balancing_relations(a, lifts)));
  const Subspace ker = kernel(q.projection.matrix());
  if (!ker.is_zero()) {
    const Vector shift = ker.vector(0);
    for (auto& l : lifts) l = l + shift;
    out.lift_independent = Subspace::span(a.field(), a.dim() * a.dim(), balancing_relations(a, lifts)) == out.relations;
  }
  return out;
}

Matrix lifted_canonical_map(const Coaction& c) {
  const Algebra& a = c.comodule();
  const std::size_t d = a.dim(), dh = c.hopf().dim();
  Matrix m(a.field(), d * dh, d * d);
  for (std::size_t p = 0; p < d; ++p) {
    const Matrix lp = a.left_multiplication(unit_vector(a.field(), d, p));
    for (std::size_t q = 0; q < d; ++q) m.set_column(p * d + q, apply_on_factor(lp, c.image(q), 1, dh));
  }
  return m;
}

CanonicalMap canonical_map(const Coaction& c, const Subspace& b) {
  const Algebra& a = c.comodule();
  BalancedTensor bt = balanced_tensor(a, b);
  if (!coinvariants(c).contains(b)) throw PreconditionError("canonical_map: B is not inside the coinvariants");
  CanonicalMap out{std::move(bt), Matrix(a.field(), 0, 0)};
  out.matrix = lifted_canonical_map(c) * out.domain.quotient.section;
  out.rank = rank(out.matrix);
  out.injective = out.rank == out.domain.quotient.quo_dim;
  out.surjective = out.rank == a.dim() * c.hopf().dim();
  out.bijective = out.injective && out.surjective;
  return out;
}

IdealIdentities stable_ideal_identities(const Coaction& c, const Subspace& ideal, const Subspace& b0) {
  const Algebra& a = c.comodule();
  const Field& f = a.field();
  const std::size_t d = a.dim(), dh = c.hopf().dim();
  if (ideal.ambient_dim() != d) throw DimensionMismatch("stable_ideal_identities: ideal does not live in A");
  for (const auto& v : ideal.vectors()) {
    if (!tensor_contains(ideal, c.apply(v), dh)) throw PreconditionError("stable_ideal_identities: the ideal is not stable");
  }
  const QuotientAlgebra q = quotient_algebra(a, ideal);
  BalancedTensor bt = balanced_tensor(a, q, b0);
  const Matrix can = lifted_canonical_map(c);

  IdealIdentities out;
  out.can_rank = rank(can);
  if (out.can_rank != d * dh) {
    throw PreconditionError("stable_ideal_identities: the canonical map is not surjective (rank " +
                            std::to_string(out.can_rank) + ", target dim " + std::to_string(d * dh) + ")");
  }
  out.lift_independent = bt.lift_independent;
  out.well_defined = true;
  for (const auto& r : bt.relations.vectors()) {
    if (!is_zero(can * r)) {
      out.well_defined = false;
      break;
    }
  }
  const Subspace full_a = Subspace::full(f, d);
  const Subspace x = subspace_sum(subspace_sum(tensor_subspace(ideal, full_a), tensor_subspace(full_a, ideal)), bt.relations);
  const Subspace target = tensor_subspace(ideal, Subspace::full(f, dh));
  const Subspace img = image(can, x);
  const Subspace pre = preimage_subspace(can, target);
  out.x_dim = x.dim();
  out.target_dim = target.dim();
  out.image_dim = img.dim();
  out.preimage_dim = pre.dim();
  out.image_identity = img == target;
  out.preimage_identity = pre == x;

  CheckItem& wd = out.report.item("canonical-map-well-defined");
  if (!out.well_defined) wd.record({{}, "a balancing relation is not killed by the canonical map"});
  CheckItem& im = out.report.item("image-identity");
  if (!out.image_identity) {
    im.record({{}, "dim can(X) = " + std::to_string(out.image_dim) + ", dim I (x) H = " + std::to_string(out.target_dim)});
  }
  CheckItem& pr = out.report.item("preimage-identity");
  if (!out.preimage_identity) {
    pr.record({{}, "dim can^-1(I (x) H) = " + std::to_string(out.preimage_dim) + ", dim X = " + std::to_string(out.x_dim)});
  }
  return out;
}

UniversalCalculus universal_calculus(const Algebra& a) {
  const Field& f = a.field();
  const std::size_t d = a.dim();
  Matrix diff(f, d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const Vector ei = unit_vector(f, d, i);
    diff.set_column(i, tensor(a.unit(), ei) - tensor(ei, a.unit()));
  }
  return UniversalCalculus{kernel(a.multiplication_map()), std::move(diff)};
}

Vector ver_map(const Coaction& c, std::span<const Scalar> element) {
  const Algebra& a = c.comodule();
  if (element.size() != a.dim() * a.dim()) throw DimensionMismatch("ver_map: element does not live in A (x) A");
  if (!is_zero(a.multiplication_map() * element)) throw PreconditionError("ver_map: element is not in ker(m)");
  Vector out = lifted_canonical_map(c) * element;
  if (!is_zero(apply_on_factor(c.hopf().counit_map(), out, a.dim(), 1))) {
    throw InvariantViolation("ver_map: image leaves A (x) H+");
  }
  return out;
}

ValidityReport check_covariant_calculus(const Bundle& b) {
  const Algebra& a = b.coaction.comodule();
  const std::size_t d = a.dim(), dh = b.coaction.hopf().dim();
  const Subspace& n = b.calculus;
  if (n.ambient_dim() != d * d) throw DimensionMismatch("check_covariant_calculus: calculus does not live in A (x) A");
  ValidityReport report;
  CheckItem& inside = report.item("inside-ker-mult");
  CheckItem& bimodule = report.item("sub-bimodule");
  CheckItem& covariance = report.item("right-covariance");
  const Matrix mult = a.multiplication_map();
  std::vector<Matrix> left, right;
  for (std::size_t k = 0; k < d; ++k) {
    const Vector ek = unit_vector(a.field(), d, k);
    left.push_back(a.left_multiplication(ek));
    right.push_back(a.right_multiplication(ek));
  }
  const Matrix cov = tensor_square_coaction(b.coaction);
  const auto vectors = n.vectors();
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    const Vector& v = vectors[r];
    if (!is_zero(mult * v)) inside.record({{r}, "calculus generator " + std::to_string(r) + " is not in ker(m)"});
    for (std::size_t k = 0; k < d; ++k) {
      if (!n.contains(apply_on_factor(left[k], v, 1, d))) {
        bimodule.record({{r, k, 0}, a.basis_names()[k] + " * generator " + std::to_string(r) + " leaves N"});
      }
      if (!n.contains(apply_on_factor(right[k], v, d, 1))) {
        bimodule.record({{r, k, 1}, "generator " + std::to_string(r) + " * " + a.basis_names()[k] + " leaves N"});
      }
    }
    if (!tensor_contains(n, cov * v, dh)) covariance.record({{r}, "delta of generator " + std::to_string(r) + " leaves N (x) H"});
  }
  return report;
}

QpbCheck check_qpb(const Bundle& b) {
  const Coaction& c = b.coaction;
  const Algebra& a = c.comodule();
  const HopfAlgebra& h = c.hopf();
  const Field& f = a.field();
  const std::size_t d = a.dim(), dh = h.dim();

  ValidityReport report;
  report.merge(check_covariant_calculus(b), "calculus-");
  Subspace base = coinvariants(c);
  CanonicalMap can = canonical_map(c, base);
  CheckItem& galois = report.item("galois-bijective");
  if (!can.bijective) {
    galois.record({{}, "canonical map has rank " + std::to_string(can.rank) + " from dim " +
                           std::to_string(can.domain.quotient.quo_dim) + " to dim " + std::to_string(d * dh)});
  } else if (!coefficient_space(c).is_full()) {
    throw InvariantViolation("check_qpb: bijective canonical map with a proper coefficient space");
  }

  Subspace v = image(lifted_canonical_map(c), b.calculus);
  const Matrix one_tensor = kron(unit_column(a), Matrix::identity(f, dh));
  Subspace ih = subspace_intersect(preimage_subspace(one_tensor, v), counit_kernel(h));
  CheckItem& ver = report.item("ver-equals-A-tensor-I");
  if (!(tensor_subspace(Subspace::full(f, d), ih) == v)) {
    ver.record({{}, "dim ver(N) = " + std::to_string(v.dim()) + ", dim A (x) I = " + std::to_string(d * ih.dim())});
  }
  CheckItem& right_ideal = report.item("right-ideal");
  CheckItem& ad = report.item("adjoint-stable");
  const Matrix ad_map = adjoint_coaction_map(h);
  const auto gens = ih.vectors();
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (std::size_t k = 0; k < dh; ++k) {
      if (!ih.contains(h.algebra().multiply(gens[r], unit_vector(f, dh, k)))) {
        right_ideal.record({{r, k}, format_element(h.basis_names(), gens[r]) + " * " + h.basis_names()[k] + " leaves I"});
      }
    }
    if (!tensor_contains(ih, ad_map * gens[r], dh)) {
      ad.record({{r}, "Ad_R(" + format_element(h.basis_names(), gens[r]) + ") leaves I (x) H"});
    }
  }
  return QpbCheck{std::move(report), std::move(base), std::move(can), std::move(v), std::move(ih)};
}

ReductionResult hopf_image_reduction(const Bundle& b, const Subspace& seed) {
  const Coaction& c = b.coaction;
  const Algebra& a = c.comodule();
  const std::size_t d = a.dim();
  if (seed.ambient_dim() != d) throw DimensionMismatch("hopf_image_reduction: seed does not live in A");
  if (seed.is_full()) {
    throw PreconditionError("hopf_image_reduction: the seed must be a proper subspace; the whole algebra is always a stable ideal");
  }
  std::vector<Claim> claims;
  auto claim = [&](std::string id, ClaimStatus s, std::string detail) { claims.push_back({std::move(id), s, std::move(detail)}); };
  auto dims = [](std::size_t x, std::size_t y) { return std::to_string(x) + " of " + std::to_string(y); };

  HopfImage hi = hopf_image(c);
  const std::size_t m = hi.sub.carrier.dim();
  claim("hopf-image-factorization", ClaimStatus::Verified,
        "delta = (id (x) iota) delta_im exactly; dim H_delta = " + dims(m, c.hopf().dim()));
  const std::size_t im_dim = hopf_image(hi.corestricted).sub.carrier.dim();
  claim("hopf-image-inner-faithful", im_dim == m ? ClaimStatus::Verified : ClaimStatus::Refuted,
        "Hopf image of delta_im has dim " + dims(im_dim, m));

  Subspace ideal = largest_stable_ideal_within(hi.corestricted, seed);
  claim("stable-ideal-within-seed", ClaimStatus::Verified,
        "greatest stable ideal inside a seed of dim " + std::to_string(seed.dim()) + " has dim " +
            std::to_string(ideal.dim()) + "; the whole algebra is always stable, so the seed bounds the search");

  QuotientCoaction qc = quotient_coaction(hi.corestricted, ideal);
  const ValidityReport descended = check_coaction(qc.coaction);
  claim("coaction-descends", descended.ok() ? ClaimStatus::Verified : ClaimStatus::Refuted,
        descended.ok() ? "descended map is a coaction and commutes with the projection" : first_failure(descended));

  Subspace base = coinvariants(qc.coaction);
  try {
    IdealIdentities ids = stable_ideal_identities(hi.corestricted, ideal, base);
    const bool holds = ids.image_identity && ids.preimage_identity;
    claim("canonical-map-identities", holds ? ClaimStatus::Verified : ClaimStatus::Refuted,
          "dim X = " + std::to_string(ids.x_dim) + ", dim can(X) = " + std::to_string(ids.image_dim) +
              ", dim I (x) H_delta = " + std::to_string(ids.target_dim) + ", dim preimage = " +
              std::to_string(ids.preimage_dim) + (ids.well_defined ? "" : "; balancing relations not in ker(can)"));
    claim("lift-independence", ids.lift_independent ? ClaimStatus::Verified : ClaimStatus::Refuted,
          ids.lift_independent ? "two lifts of B0 give the same balancing relations"
                               : "two lifts of B0 give different balancing relations in A (x) A");
  } catch (const PreconditionError& e) {
    claim("canonical-map-identities", ClaimStatus::HypothesesUnmet, e.what());
    const bool li = balanced_tensor(a, qc.quotient, base).lift_independent;
    claim("lift-independence", li ? ClaimStatus::Verified : ClaimStatus::Refuted,
          li ? "two lifts of B0 give the same balancing relations"
             : "two lifts of B0 give different balancing relations in A (x) A");
  }

  const Matrix pp = kron(qc.quotient.projection.matrix(), qc.quotient.projection.matrix());
  Bundle reduced_bundle = make_bundle(qc.coaction, image(pp, b.calculus));
  QpbCheck qpb = check_qpb(reduced_bundle);
  std::optional<bool> cosemi = is_cosemisimple(hi.sub.induced);
  const bool source_qpb = check_qpb(b).ok();
  const std::string outcome = qpb.ok() ? "reduced bundle passes the principal bundle checks"
                                       : "reduced bundle fails " + first_failure(qpb.report);
  if (!source_qpb) {
    claim("reduced-bundle-principal", ClaimStatus::HypothesesUnmet, "input is not a principal bundle over H; " + outcome);
  } else if (!cosemi) {
    claim("reduced-bundle-principal", ClaimStatus::Unsupported, "cosemisimplicity of H_delta undecided over this field; " + outcome);
  } else if (!*cosemi) {
    claim("reduced-bundle-principal", ClaimStatus::HypothesesUnmet, "H_delta is not cosemisimple; " + outcome);
  } else {
    claim("reduced-bundle-principal", qpb.ok() ? ClaimStatus::Verified : ClaimStatus::Refuted, outcome);
  }

  const std::size_t bar_dim = hopf_image(qc.coaction).sub.carrier.dim();
  claim("quotient-inner-faithful", bar_dim == m ? ClaimStatus::Verified : ClaimStatus::Refuted,
        "Hopf image of the descended coaction has dim " + dims(bar_dim, m));

  ReducedBundle reduced{b,
                        seed,
                        std::move(hi.sub),
                        std::move(hi.corestricted),
                        std::move(ideal),
                        std::move(qc.quotient),
                        std::move(reduced_bundle)};
  return ReductionResult{std::move(reduced), std::move(base), cosemi, std::move(qpb), std::move(claims)};
}

RigidityResult rigidity_embedding(const ReducedBundle& r, const Coaction& k) {
  const Coaction& bar = r.bundle.coaction;
  const Algebra& a0 = bar.comodule();
  const HopfAlgebra& hd = bar.hopf();
  const HopfAlgebra& kh = k.hopf();
  const Field& f = a0.field();
  if (!k.comodule().same_structure(a0)) throw PreconditionError("rigidity_embedding: K does not act on the reduced algebra");
  if (!(coinvariants(k) == coinvariants(bar))) throw PreconditionError("rigidity_embedding: K has different coinvariants");
  if (!is_inner_faithful(k)) throw PreconditionError("rigidity_embedding: the K-coaction is not inner faithful");

  const std::size_t d = a0.dim(), m = hd.dim(), dk = kh.dim();
  auto pair = [&](std::span<const Scalar> x, std::span<const Scalar> y) {
    Vector v(x.begin(), x.end());
    v.insert(v.end(), y.begin(), y.end());
    return v;
  };
  std::vector<Vector> rows{pair(hd.algebra().unit(), kh.algebra().unit())};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vector x(m, f.zero()), y(dk, f.zero());
      for (std::size_t s = 0; s < m; ++s) x[s] = bar.map()(j * m + s, i);
      for (std::size_t s = 0; s < dk; ++s) y[s] = k.map()(j * dk + s, i);
      rows.push_back(pair(x, y));
    }
  }
  Subspace pairs = Subspace::span(f, m + dk, rows);
  for (;;) {
    const auto basis = pairs.vectors();
    std::vector<Vector> grown = basis;
    for (const auto& p : basis) {
      const std::span<const Scalar> px(p.data(), m), py(p.data() + m, dk);
      grown.push_back(pair(hd.antipode() * px, kh.antipode() * py));
      for (const auto& q : basis) {
        const std::span<const Scalar> qx(q.data(), m), qy(q.data() + m, dk);
        grown.push_back(pair(hd.algebra().multiply(px, qx), kh.algebra().multiply(py, qy)));
      }
    }
    Subspace next = Subspace::span(f, m + dk, grown);
    if (next == pairs) break;
    pairs = std::move(next);
  }

  RigidityResult out;
  const auto& piv = pairs.pivots();
  std::size_t determined = 0;
  for (std::size_t p : piv) {
    if (p >= m) {
      out.refutation = "intertwining relations force a nonzero element of K to be the image of 0";
      return out;
    }
    ++determined;
  }
  if (determined < m) {
    out.refutation = "intertwining relations determine iota only on a subspace of dim " + std::to_string(determined) +
                     " of " + std::to_string(m);
    return out;
  }
  Matrix iota(f, dk, m);
  for (std::size_t rr = 0; rr < m; ++rr) {
    for (std::size_t s = 0; s < dk; ++s) iota(s, rr) = pairs.basis()(rr, m + s);
  }
  if (!(kron(Matrix::identity(f, d), iota) * bar.map() == k.map())) {
    out.refutation = "solution does not intertwine the coactions";
    return out;
  }
  const ValidityReport hm = check_hopf_morphism(iota, hd, kh);
  if (!hm.ok()) {
    out.refutation = "solution is not a Hopf morphism: " + first_failure(hm);
    return out;
  }
  if (rank(iota) != m) {
    out.refutation = "solution is not injective";
    return out;
  }
  out.iota = std::move(iota);
  return out;
}

ValidityReport check_bundle_morphism(const BundleMorphism& m, const Bundle& src, const Bundle& dst) {
  require_bundle_shapes(m, src, dst);
  const Coaction& c = src.coaction;
  const Coaction& c2 = dst.coaction;
  ValidityReport report;
  report.merge(check_hopf_morphism(m.psi, c.hopf(), c2.hopf()), "psi-");
  CheckItem& alg = report.item("phi-algebra-morphism");
  if (!m.phi.source().same_structure(c.comodule()) || !m.phi.target().same_structure(c2.comodule())) {
    alg.record({{}, "phi does not run between the bundle algebras"});
  } else if (auto w = is_algebra_morphism(m.phi); !w) {
    alg.record(*w.witness);
  }
  CheckItem& eq = report.item("equivariance");
  const Matrix lhs = c2.map() * m.phi.matrix();
  const Matrix rhs = kron(m.phi.matrix(), m.psi) * c.map();
  for (std::size_t i = 0; i < c.comodule().dim(); ++i) {
    if (lhs.column(i) != rhs.column(i)) {
      eq.record({{i}, "delta'(phi(" + c.comodule().basis_names()[i] + ")) != (phi (x) psi) delta(" + c.comodule().basis_names()[i] + ")"});
    }
  }
  CheckItem& calc = report.item("calculus-compatibility");
  const Matrix pp = kron(m.phi.matrix(), m.phi.matrix());
  const auto gens = src.calculus.vectors();
  for (std::size_t r = 0; r < gens.size(); ++r) {
    if (!dst.calculus.contains(pp * gens[r])) calc.record({{r}, "(phi (x) phi) of calculus generator " + std::to_string(r) + " leaves N'"});
  }
  return report;
}

BundleMorphism reduce_morphism(const BundleMorphism& m, const ReducedBundle& src, const ReducedBundle& dst) {
  const ValidityReport valid = check_bundle_morphism(m, src.original, dst.original);
  if (!valid.ok()) throw PreconditionError("reduce_morphism: not a bundle morphism: " + first_failure(valid));
  const auto& names = src.original.coaction.comodule().basis_names();
  for (const auto& v : src.seed.vectors()) {
    if (!dst.seed.contains(m.phi(v))) {
      throw PreconditionError("reduce_morphism: seeds incompatible: phi(" + format_element(names, v) + ") leaves the target seed");
    }
  }
  for (const auto& v : src.ideal.vectors()) {
    if (!dst.ideal.contains(m.phi(v))) {
      throw PreconditionError("reduce_morphism: phi(I) not inside I': phi(" + format_element(names, v) + ") leaves I'");
    }
  }
  const Matrix restricted = m.psi * src.hopf_inclusion.inclusion.matrix();
  const Subspace& target = dst.hopf_inclusion.carrier;
  Matrix psi_d(restricted.field(), target.dim(), restricted.cols());
  for (std::size_t r = 0; r < restricted.cols(); ++r) {
    const Vector col = restricted.column(r);
    if (!target.contains(col)) {
      throw PreconditionError("reduce_morphism: psi maps " + src.hopf_inclusion.induced.basis_names()[r] + " outside H'_delta'");
    }
    psi_d.set_column(r, target.coordinates(col));
  }
  const Matrix phi_bar = dst.quotient.projection.matrix() * m.phi.matrix() * src.quotient.section;
  BundleMorphism out{AlgebraMorphism(src.quotient.algebra, dst.quotient.algebra, phi_bar), std::move(psi_d)};
  const ValidityReport check = check_bundle_morphism(out, src.bundle, dst.bundle);
  if (!check.ok()) throw InvariantViolation("reduce_morphism: induced morphism fails " + first_failure(check));
  return out;
}

Equivalence bundles_equivalent(const ReducedBundle& r1, const ReducedBundle& r2, const BundleMorphism& forward,
                               const BundleMorphism& backward) {
  const Coaction& c1 = r1.bundle.coaction;
  const Coaction& c2 = r2.bundle.coaction;
  if (c1.comodule().dim() != c2.comodule().dim() || c1.hopf().dim() != c2.hopf().dim()) {
    return {false, "dimension obstruction: reduced algebras of dim " + std::to_string(c1.comodule().dim()) + " and " +
                       std::to_string(c2.comodule().dim()) + ", reduced Hopf algebras of dim " +
                       std::to_string(c1.hopf().dim()) + " and " + std::to_string(c2.hopf().dim())};
  }
  auto shaped = [](const BundleMorphism& w, const Coaction& s, const Coaction& t) {
    return w.phi.matrix().rows() == t.comodule().dim() && w.phi.matrix().cols() == s.comodule().dim() &&
           w.psi.rows() == t.hopf().dim() && w.psi.cols() == s.hopf().dim();
  };
  if (!shaped(forward, c1, c2)) return {false, "forward witness has the wrong shape"};
  if (!shaped(backward, c2, c1)) return {false, "backward witness has the wrong shape"};
  const ValidityReport f = check_bundle_morphism(forward, r1.bundle, r2.bundle);
  if (!f.ok()) return {false, "forward witness fails " + first_failure(f)};
  const ValidityReport b = check_bundle_morphism(backward, r2.bundle, r1.bundle);
  if (!b.ok()) return {false, "backward witness fails " + first_failure(b)};
  const Field& fld = c1.comodule().field();
  const Matrix ia = Matrix::identity(fld, c1.comodule().dim());
  const Matrix ih = Matrix::identity(fld, c1.hopf().dim());
  if (!(backward.phi.matrix() * forward.phi.matrix() == ia) || !(forward.phi.matrix() * backward.phi.matrix() == ia)) {
    return {false, "algebra witnesses are not mutually inverse"};
  }
  if (!(backward.psi * forward.psi == ih) || !(forward.psi * backward.psi == ih)) {
    return {false, "Hopf witnesses are not mutually inverse"};
  }
  return {true, "witnesses are mutually inverse bundle morphisms"};
}

}  // namespace hopfkit
