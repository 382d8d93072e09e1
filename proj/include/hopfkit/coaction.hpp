#pragma once

#include <optional>
#include <vector>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

/// Right coaction delta: A -> A (x) H, delta(a_i) = sum delta[i][j][k] a_j (x) h_k.
/// Stored as the (dim A * dim H) x dim A matrix whose i-th column is
/// delta(a_i) in row-major A (x) H coordinates.
class Coaction {
 public:
  Coaction(Algebra comodule, HopfAlgebra hopf, Matrix map);
  static Coaction from_entries(Algebra comodule, HopfAlgebra hopf, const std::vector<Entry3>& entries);

  const Algebra& comodule() const { return comodule_; }
  const HopfAlgebra& hopf() const { return hopf_; }
  const Matrix& map() const { return map_; }
  Vector image(std::size_t i) const { return map_.column(i); }
  Vector apply(std::span<const Scalar> a) const { return map_ * a; }
  std::vector<Entry3> entries() const;

 private:
  Algebra comodule_;
  HopfAlgebra hopf_;
  Matrix map_;
};

/// a -> a (x) 1.
Coaction trivial_coaction(const Algebra& a, const HopfAlgebra& h);
/// delta = Delta on H viewed as a comodule algebra over itself.
Coaction regular_coaction(const HopfAlgebra& h);
/// (id (x) psi) o delta for a Hopf morphism psi: c.hopf() -> target.
Coaction pushforward_coaction(const Coaction& c, const Matrix& psi, const HopfAlgebra& target);

/// Coassociativity, counitality and the comodule-algebra property, itemized.
ValidityReport check_coaction(const Coaction& c);

/// Span of all right legs (omega (x) id) delta(a); a subcoalgebra of H.
Subspace coefficient_space(const Coaction& c);

struct Factorization {
  HopfSubalgebra sub;
  Coaction restricted;  ///< delta_L with (id (x) iota_L) delta_L = delta
};

/// The same coaction viewed through a Hopf subalgebra containing all right
/// legs. Throws PreconditionError if some leg leaves the carrier.
Coaction corestrict(const Coaction& c, const HopfSubalgebra& l);

struct HopfImage {
  HopfSubalgebra sub;   ///< H_delta with its inclusion
  Coaction corestricted;  ///< delta_im: A -> A (x) H_delta
};

/// Smallest Hopf subalgebra through which delta factors, computed as the
/// Hopf subalgebra generated by the coefficient space.
HopfImage hopf_image(const Coaction& c);

bool is_inner_faithful(const Coaction& c);

/// The factorization through l when delta(A) lies in A (x) carrier(l).
std::optional<Factorization> factors_through(const Coaction& c, const HopfSubalgebra& l);

/// {a : delta(a) = a (x) 1}.
Subspace coinvariants(const Coaction& c);

/// delta_3 = (id (x) flip (x) id)(delta_1 (x) delta_2) on A (x) B over H1 (x) H2.
Coaction tensor_coaction(const Coaction& c1, const Coaction& c2);

/// (theta (x) id) o delta o theta^{-1} for a bijective algebra morphism
/// theta out of the comodule algebra.
Coaction conjugate_coaction(const Coaction& c, const AlgebraMorphism& theta);

}  // namespace hopfkit
