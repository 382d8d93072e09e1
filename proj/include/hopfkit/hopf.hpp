#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/algebra.hpp"

namespace hopfkit {

/// Finite-dimensional Hopf algebra: an algebra with comultiplication
/// Delta(e_i) = sum Delta[i][j][k] e_j (x) e_k, counit and antipode.
///
/// The constructor checks shapes and that the antipode matrix is invertible;
/// the remaining axioms are the business of check_hopf().
class HopfAlgebra {
 public:
  HopfAlgebra(Algebra alg, const std::vector<Entry3>& comult, Vector counit, Matrix antipode);

  const Algebra& algebra() const { return alg_; }
  const Field& field() const { return alg_.field(); }
  std::size_t dim() const { return alg_.dim(); }
  const std::vector<std::string>& basis_names() const { return alg_.basis_names(); }

  /// dim^2 x dim matrix of Delta on row-major H (x) H coordinates.
  const Matrix& comultiplication() const { return comult_; }
  Vector coproduct(std::size_t i) const { return comult_.column(i); }
  Vector comultiply(std::span<const Scalar> x) const { return comult_ * x; }
  std::vector<Entry3> comult_entries() const;

  const Vector& counit() const { return counit_; }
  Scalar counit(std::span<const Scalar> x) const;
  /// 1 x dim matrix of the counit.
  Matrix counit_map() const;

  const Matrix& antipode() const { return antipode_; }
  const Matrix& antipode_inverse() const { return antipode_inverse_; }

 private:
  Algebra alg_;
  Matrix comult_;
  Vector counit_;
  Matrix antipode_;
  Matrix antipode_inverse_;
};

/// Algebra, coalgebra, bialgebra and antipode axioms plus antipode
/// invertibility, itemized.
ValidityReport check_hopf(const HopfAlgebra& h);

/// Hopf algebra morphism axioms for psi: src -> dst (shape dst.dim x src.dim).
ValidityReport check_hopf_morphism(const Matrix& psi, const HopfAlgebra& src, const HopfAlgebra& dst);

/// H^+ = ker(counit).
Subspace counit_kernel(const HopfAlgebra& h);

/// Ad_R(h) = h_(2) (x) S(h_(1)) h_(3), as an element of H (x) H.
Vector adjoint_coaction(const HopfAlgebra& h, std::span<const Scalar> v);
/// dim^2 x dim matrix of Ad_R.
Matrix adjoint_coaction_map(const HopfAlgebra& h);

/// Smallest subcoalgebra containing v: repeatedly adjoins the middle legs of
/// (Delta (x) id) Delta on a basis until the dimension is stable.
Subspace coalgebra_closure(const HopfAlgebra& h, const Subspace& v);

/// A Hopf subalgebra L of a parent H with its own structure on the canonical
/// carrier basis, and the inclusion L -> H.
struct HopfSubalgebra {
  Subspace carrier;
  HopfAlgebra induced;
  AlgebraMorphism inclusion;
};

/// Builds the induced Hopf structure on a carrier. Throws PreconditionError
/// if the carrier is not closed under unit, product, Delta or S.
HopfSubalgebra hopf_subalgebra(const HopfAlgebra& h, const Subspace& carrier);

/// Smallest Hopf subalgebra containing v.
HopfSubalgebra hopf_subalgebra_closure(const HopfAlgebra& h, const Subspace& v);

/// Linear dual: multiplication is the transpose of Delta and vice versa.
HopfAlgebra dual_hopf(const HopfAlgebra& h, const std::string& name_prefix = "", const std::string& name_suffix = "*");

/// Cosemisimplicity via nondegeneracy of the trace form on the dual algebra
/// (valid in characteristic zero). Returns nullopt ("unsupported") over F_p.
std::optional<bool> is_cosemisimple(const HopfAlgebra& h);

/// H1 (x) H2 with componentwise structure; basis index i * dim H2 + j.
HopfAlgebra tensor_hopf(const HopfAlgebra& h1, const HopfAlgebra& h2);

/// The Hopf structure carried to a new basis by the invertible map t: H -> K
/// so that t becomes a Hopf isomorphism. Throws PreconditionError if t is
/// singular.
HopfAlgebra transport_hopf(const HopfAlgebra& h, const Matrix& t, std::vector<std::string> names);
Algebra transport_algebra(const Algebra& a, const Matrix& t, std::vector<std::string> names);

}  // namespace hopfkit
