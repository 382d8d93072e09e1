#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/coaction.hpp"

namespace hopfkit {

/// A comodule algebra with a first-order calculus Omega^1(A) = ker(m) / N,
/// N given as a subspace of A (x) A (row-major coordinates).
struct Bundle {
  Coaction coaction;
  Subspace calculus;
};

/// Throws DimensionMismatch unless the calculus lives in A (x) A.
Bundle make_bundle(Coaction coaction, Subspace calculus);

struct BundleMorphism {
  AlgebraMorphism phi;  ///< A -> A'
  Matrix psi;           ///< H -> H', dim H' x dim H
};

BundleMorphism identity_bundle_morphism(const Bundle& b);
/// g o f
BundleMorphism compose(const BundleMorphism& g, const BundleMorphism& f);

/// Claim bookkeeping for reduction runs.
enum class ClaimStatus { Verified, Refuted, Unsupported, HypothesesUnmet };
std::string to_string(ClaimStatus s);

struct Claim {
  std::string id;
  ClaimStatus status;
  std::string detail;
};

/// Kernel of a declared augmentation eps: A -> k. Throws PreconditionError if
/// eps is not a unital multiplicative functional.
Subspace augmentation_ideal(const Algebra& a, std::span<const Scalar> eps);

/// Greatest I inside the seed with A I + I A in I and delta(I) in I (x) H.
Subspace largest_stable_ideal_within(const Coaction& c, const Subspace& seed);

struct QuotientCoaction {
  QuotientAlgebra quotient;
  Coaction coaction;  ///< the descended coaction on A / I
};

/// Descends delta to A / I. Throws PreconditionError when I = A, when I is
/// not a two-sided ideal, or when delta(I) leaves I (x) H (with witness).
QuotientCoaction quotient_coaction(const Coaction& c, const Subspace& ideal);

/// A (x)_B A as the quotient of A (x) A by the balancing relations.
struct BalancedTensor {
  Subspace relations;
  QuotientSpace quotient;
  /// Only meaningful when B acts through lifts; compares the relation spaces
  /// produced by two different lifts.
  bool lift_independent = true;
};

/// B a subalgebra of A.
BalancedTensor balanced_tensor(const Algebra& a, const Subspace& b);
/// B0 a subalgebra of A/I acting on A through the canonical section lift.
BalancedTensor balanced_tensor(const Algebra& a, const QuotientAlgebra& q, const Subspace& b0);

/// a (x) a' -> a delta(a') on all of A (x) A, a (dim A * dim H) x (dim A)^2 matrix.
Matrix lifted_canonical_map(const Coaction& c);

struct CanonicalMap {
  BalancedTensor domain;
  Matrix matrix;  ///< on the quotient basis of A (x)_B A
  std::size_t rank = 0;
  bool injective = false;
  bool surjective = false;
  bool bijective = false;
};

/// Throws PreconditionError if B is not a subalgebra inside the coinvariants.
CanonicalMap canonical_map(const Coaction& c, const Subspace& b);

/// Subspace identities for can on A (x)_{B0} A relative to a stable ideal I.
/// B0 lives in A / I. All subspaces are compared inside A (x) A, with X the
/// preimage of I (x)_{B0} A + A (x)_{B0} I.
struct IdealIdentities {
  bool well_defined = false;  ///< balancing relations lie in ker(can)
  std::size_t can_rank = 0;
  std::size_t x_dim = 0;
  std::size_t target_dim = 0;    ///< dim I (x) H
  std::size_t image_dim = 0;     ///< dim can(X)
  std::size_t preimage_dim = 0;  ///< dim can^{-1}(I (x) H)
  bool image_identity = false;
  bool preimage_identity = false;
  bool lift_independent = true;
  ValidityReport report;
};

/// Throws PreconditionError when can is not surjective.
IdealIdentities stable_ideal_identities(const Coaction& c, const Subspace& ideal, const Subspace& b0);

struct UniversalCalculus {
  Subspace ker_mult;
  Matrix differential;  ///< d_u a = 1 (x) a - a (x) 1, (dim A)^2 x dim A
};

UniversalCalculus universal_calculus(const Algebra& a);

/// ver(sum a (x) a') = sum a a'_(0) (x) a'_(1). Throws PreconditionError when
/// the element is outside ker(m).
Vector ver_map(const Coaction& c, std::span<const Scalar> element);

/// N inside ker(m), N an A-sub-bimodule, delta_(x)(N) inside N (x) H.
ValidityReport check_covariant_calculus(const Bundle& b);

struct QpbCheck {
  ValidityReport report;
  Subspace coinvariants;
  CanonicalMap can;
  Subspace ver_image;  ///< ver(N) in A (x) H
  Subspace right_ideal;  ///< I_H = {h in H+ : 1 (x) h in ver(N)}
  bool ok() const { return report.ok(); }
};

QpbCheck check_qpb(const Bundle& b);

/// The reduced bundle together with the data it was built from.
struct ReducedBundle {
  Bundle original;
  Subspace seed;
  HopfSubalgebra hopf_inclusion;  ///< H_delta in H
  Coaction image_coaction;        ///< delta_im
  Subspace ideal;                 ///< I in A
  QuotientAlgebra quotient;       ///< A0 and pi
  Bundle bundle;                  ///< (A0, N0) over H_delta
};

struct ReductionResult {
  ReducedBundle reduced;
  Subspace base;  ///< B0, coinvariants of the reduced coaction
  std::optional<bool> cosemisimple;
  QpbCheck qpb;
  std::vector<Claim> claims;
};

/// Full Hopf-image reduction with seed-relative stable ideal.
ReductionResult hopf_image_reduction(const Bundle& b, const Subspace& seed);

struct RigidityResult {
  std::optional<Matrix> iota;  ///< dim K x dim H_delta
  std::string refutation;
};

/// Solves delta_K = (id (x) iota) o delta_bar for a Hopf morphism iota and
/// verifies it. Throws PreconditionError when K acts on a different algebra,
/// has different coinvariants, or is not inner faithful.
RigidityResult rigidity_embedding(const ReducedBundle& r, const Coaction& k);

/// Hopf morphism axioms for psi, algebra morphism axioms for phi,
/// equivariance and calculus compatibility.
ValidityReport check_bundle_morphism(const BundleMorphism& m, const Bundle& src, const Bundle& dst);

/// The induced morphism between reductions. Throws PreconditionError if m is
/// not a bundle morphism, or phi(seed) or phi(I) leave the target's seed or ideal.
BundleMorphism reduce_morphism(const BundleMorphism& m, const ReducedBundle& src, const ReducedBundle& dst);

struct Equivalence {
  bool equivalent = false;
  std::string reason;
};

/// Witness check that two reductions are isomorphic bundles.
Equivalence bundles_equivalent(const ReducedBundle& r1, const ReducedBundle& r2, const BundleMorphism& forward,
                               const BundleMorphism& backward);

}  // namespace hopfkit
