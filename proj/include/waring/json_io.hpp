#pragma once

#include <string>

#include "json.hpp"

#include "waring/decomp.hpp"
#include "waring/flatten.hpp"
#include "waring/numeric.hpp"

namespace waring {

using json = nlohmann::json;

// Scalars. Rationals travel as canonical strings "p/q" (or "p" for
// integers); quadratic irrationals as {"a":"p/q","b":"p/q","d":5}, falling
// back to the plain string when the irrational part is zero; complex
// doubles as [re, im]. Every parser throws std::invalid_argument on
// malformed input.
json scalar_to_json(const Rational& x);
json scalar_to_json(const QuadExt& x);
json scalar_to_json(const ComplexF& x);
Rational rational_from_json(const json& j);
QuadExt quadext_from_json(const json& j);
ComplexF complex_from_json(const json& j);

// {"family":"smz","n":7}
json family_to_json(const FamilyId& id);
FamilyId family_from_json(const json& j);

// {"nvars":N, "terms":[{"mono":[i,j,k], "coeff":"c"}]}
json cubic_to_json(const CubicForm<Rational>& f);
CubicForm<Rational> cubic_from_json(const json& j);

// {"dims":[d0,d1,d2], "entries":[{"index":[i,j,k], "coeff":"c"}]}
json tensor_to_json(const Tensor3<Rational>& t);
Tensor3<Rational> tensor_from_json(const json& j);

// Weighted-cube decompositions:
//   {"target": {"family":"smz","n":7} | inline cubic,
//    "scale": "160",
//    "field": {"d":5},            (only when an irrational entry occurs)
//    "terms": [{"coeff":"1", "form":["2","0","-1", ...]}]}
// Numeric decompositions use the same shape with [re,im] pairs in place of
// the exact scalars, no "field", and always a named family target.
json decomposition_to_json(const WaringDecomposition<Rational>& d);
json decomposition_to_json(const WaringDecomposition<QuadExt>& d);
json decomposition_to_json(const NumericDecomposition& d);
WaringDecomposition<Rational> decomposition_rational_from_json(const json& j);
WaringDecomposition<QuadExt> decomposition_quadext_from_json(const json& j);
NumericDecomposition numeric_decomposition_from_json(const json& j);

// Which loader a decomposition document wants: "field" marks a quadratic
// extension, [re,im] coefficient pairs mark numeric data, anything else is
// rational.
enum class DecompositionKind { Rational, Quadratic, Numeric };
DecompositionKind classify_decomposition(const json& j);

// {"target": {...}, "terms":[{"u":[...], "v":[...], "w":[...]}]}
json tensor_decomposition_to_json(const TensorDecomposition<Rational>& d);
TensorDecomposition<Rational> tensor_decomposition_from_json(const json& j);

json flattening_report_to_json(const FlatteningReport& r);
json localdim_report_to_json(const LocalDimReport& r);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace waring
