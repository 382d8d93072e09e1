#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfkit/coaction.hpp"

namespace hopfkit {

/// Multiplication table of a finite group; validated on construction.
struct FiniteGroupTable {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::size_t> inverse;
  std::size_t identity = 0;
  std::vector<std::string> names;
};

/// Finds the identity and inverses and checks associativity. Throws
/// PreconditionError on an invalid table.
FiniteGroupTable make_group(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names);

FiniteGroupTable trivial_group();
/// Elements "1", "g", "g^2", ...
FiniteGroupTable cyclic_group(std::size_t n);
/// Element (a, b) at index a * |H| + b.
FiniteGroupTable direct_product(const FiniteGroupTable& g, const FiniteGroupTable& h);
/// Group generated by permutations of {0, ..., degree-1}; elements named in
/// cycle notation (1-based), identity "e". Order is breadth-first from e.
FiniteGroupTable permutation_group(std::size_t degree, const std::vector<std::vector<std::size_t>>& generators);
FiniteGroupTable symmetric_group(std::size_t n);
/// Symmetries of the n-gon, order 2n.
FiniteGroupTable dihedral_group(std::size_t n);
FiniteGroupTable alternating_group4();

/// Subgroup generated by a set of elements (breadth-first closure).
std::vector<std::size_t> generated_subgroup(const FiniteGroupTable& g, const std::vector<std::size_t>& generators);

HopfAlgebra group_algebra(const FiniteGroupTable& g, const Field& f);
/// Dual of the group algebra, basis p_g.
HopfAlgebra function_algebra(const FiniteGroupTable& g, const Field& f);
/// Matrix of k[G] -> k[H] induced by a group homomorphism given on elements.
Matrix group_hom_matrix(const FiniteGroupTable& g, const FiniteGroupTable& h, const std::vector<std::size_t>& images,
                        const Field& f);

/// Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx.
HopfAlgebra sweedler_h4(const Field& f);
/// Taft algebra of dim n^2 over F_p, basis g^i x^j at index i + n j.
HopfAlgebra taft(std::size_t n, std::uint64_t p, long long root);

/// k[x]/(x^n), basis 1, x, ..., x^{n-1}.
Algebra truncated_polynomial(const Field& f, std::size_t n);

/// delta(a_i) = a_i (x) g_{deg i} over k[G]. Throws PreconditionError with a
/// witness triple if the grading is not multiplicative.
Coaction grading_coaction(const Algebra& a, const FiniteGroupTable& g, const std::vector<std::size_t>& degrees);

/// (id (x) psi) o Delta_A for a surjective Hopf morphism psi: A -> H.
Coaction surjection_coaction(const HopfAlgebra& a, const Matrix& psi, const HopfAlgebra& h);

/// Named catalog entries: "trivial", "Z<n>", "Z<n>xZ<m>", "K4", "S3", "D<n>",
/// "A4". Throws ParseError for unknown names.
FiniteGroupTable catalog_group(const std::string& name);

/// Named Hopf algebras: a group name, "fun(<group>)", "sweedler",
/// "taft <n> <p> <root>" (always over F_p).
HopfAlgebra catalog_hopf(const std::string& name, const Field& f);

}  // namespace hopfkit
