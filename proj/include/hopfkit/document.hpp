#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "hopfkit/reduction.hpp"

namespace hopfkit {

struct AlgebraObject {
  Algebra algebra;
  std::optional<Vector> augmentation;
};

struct HopfObject {
  HopfAlgebra hopf;
};

struct CoactionObject {
  std::string algebra;  ///< name of an algebra or Hopf object
  std::string hopf;
  Coaction coaction;
};

struct BundleObject {
  std::string coaction;
  std::optional<std::string> seed;
  Bundle bundle;
};

struct SubspaceObject {
  Subspace subspace;
};

/// Linear map between two algebra or Hopf objects.
struct MorphismObject {
  std::string source, target;
  Matrix matrix;
};

struct BundleMorphismObject {
  std::string source, target;
  Matrix phi, psi;
};

struct EquivalenceObject {
  std::string first, second;
  Matrix forward_phi, forward_psi, backward_phi, backward_psi;
};

using Object = std::variant<AlgebraObject, HopfObject, CoactionObject, BundleObject, SubspaceObject, MorphismObject,
                            BundleMorphismObject, EquivalenceObject>;

/// Type tag used in the "type" field.
std::string object_type(const Object& o);

/// A parsed input file. Catalog references are expanded on parse, so
/// serialize() always emits full structure constants.
class Document {
 public:
  explicit Document(Field f) : field_(f) {}

  const Field& field() const { return field_; }
  const std::map<std::string, Object>& objects() const { return objects_; }
  const Object& get(const std::string& name) const;
  bool contains(const std::string& name) const { return objects_.count(name) != 0; }
  void add(const std::string& name, Object o);

  /// The algebra behind an algebra or Hopf object and its augmentation
  /// (the counit for Hopf objects).
  std::pair<Algebra, std::optional<Vector>> algebra_of(const std::string& name) const;
  const HopfAlgebra& hopf_of(const std::string& name) const;
  const CoactionObject& coaction_of(const std::string& name) const;
  const BundleObject& bundle_of(const std::string& name) const;
  const Subspace& subspace_of(const std::string& name) const;

 private:
  Field field_;
  std::map<std::string, Object> objects_;
};

/// Parses JSON text. Throws ParseError naming the JSON path of the problem,
/// DimensionMismatch for inconsistent shapes, PreconditionError for a bad
/// modulus or catalog parameters.
Document parse_document(const std::string& text);

/// Canonical JSON text: sorted keys, sorted sparse entries, lowest-terms
/// scalar strings, two-space indentation, trailing newline.
std::string serialize_document(const Document& doc);

}  // namespace hopfkit
