#pragma once

// JSON helpers shared by the document parser and the command layer.

#include <json.hpp>

#include "hopfkit/document.hpp"

namespace hopfkit::io {

using json = nlohmann::json;

json scalar_json(const Scalar& s);
json vector_json(std::span<const Scalar> v);
/// Dense rows.
json matrix_json(const Matrix& m);
/// RREF basis rows.
json subspace_json(const Subspace& s);
/// Full algebra / Hopf object bodies (without "type").
json algebra_body(const Algebra& a);
json hopf_body(const HopfAlgebra& h);
json coaction_map_json(const Coaction& c);
json field_json(const Field& f);
json document_json(const Document& doc);

/// Basis vectors of a subspace formatted as elements, e.g. ["1", "g^2"].
json element_list(const std::vector<std::string>& names, const Subspace& s);

}  // namespace hopfkit::io
