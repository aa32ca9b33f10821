#pragma once

#include <json.hpp>

#include "gral/analysis.hpp"

namespace gral::io {

using json = nlohmann::json;

json to_json(const CoefficientRing& ring);
CoefficientRing ring_from_json(const json& j);

/// GF(p): integer; Q: "a/b" string; Z: decimal string. Parsing also accepts
/// plain integers for Q and Z.
json to_json(const Scalar& s);
Scalar scalar_from_json(const CoefficientRing& ring, const json& j);

json to_json(const FiniteCategory& c);
/// Accepts the explicit table form or {"quiver": {"vertices", "arrows"}}.
FiniteCategory category_from_json(const json& j);

/// {basis id: scalar} with zero coordinates omitted.
json element_to_json(const Algebra& a, const Element& e);
json vector_to_json(const Algebra& a, const Vector& v);
Element element_from_json(const Algebra& a, const json& j);

/// Ungraded algebra: {"ring", "basis", "structure", "unit"}.
json to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);
/// Same shape, using a ring given by the enclosing document when absent.
Algebra algebra_from_json(const json& j, const CoefficientRing& ring);

json to_json(const GradedAlgebra& a);
GradedAlgebra graded_algebra_from_json(const json& j);

json to_json(const CrossedSystem& cs);
CrossedSystem crossed_system_from_json(const json& j);

json to_json(const Matrix& m);
Matrix matrix_from_json(const CoefficientRing& ring, const json& j, std::size_t rows, std::size_t cols);

/// Subspace given as {"basis": [element, ...]} inside algebra a.
Subspace subspace_from_json(const Algebra& a, const json& j);
json subspace_to_json(const Algebra& a, const Subspace& s);

/// Reads a file; throws InvalidInput on I/O or parse failure.
json read_file(const std::string& path);

}  // namespace gral::io
