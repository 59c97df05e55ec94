#pragma once

#include <string>

#include <json.hpp>

#include "gsa/constructions.hpp"
#include "gsa/decomposition.hpp"
#include "gsa/polynomial.hpp"

namespace gsa {

using json = nlohmann::ordered_json;

json scalar_to_json(const CycloScalar& x);
CycloScalar scalar_from_json(const json& j, int conductor);
// Vectors are written sparse ([[index, scalar], ...]); dense lists of scalars are accepted.
json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j, size_t n, int conductor);
json element_to_json(const GroupElement& g);
GroupElement element_from_json(const json& j, const FiniteAbelianGroup& G);

json algebra_to_json(const GradedStarAlgebra& A);
GradedStarAlgebra algebra_from_json(const json& j);

json cocycle_to_json(const TwoCocycle& z);
TwoCocycle cocycle_from_json(const json& j, const FiniteAbelianGroup& G, int conductor);

json decomposition_to_json(const GradedStarAlgebra& A, const Decomposition& d);
Decomposition decomposition_from_json(const json& j, const GradedStarAlgebra& A);

json polynomial_to_json(const MultilinearPolynomial& f);
json polynomial_to_json(const FormPolynomial& f);
FormPolynomial form_polynomial_from_json(const json& j, const FiniteAbelianGroup& G, int conductor);
// Rejects form factors.
MultilinearPolynomial polynomial_from_json(const json& j, const FiniteAbelianGroup& G, int conductor);

json load_json(const std::string& path);

}  // namespace gsa
