#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "tenspec/geometry.hpp"
#include "tenspec/invariants.hpp"
#include "tenspec/spectra.hpp"

namespace tenspec {

using Json = nlohmann::ordered_json;

/// [re, im]; throws NumericalError on non-finite values so no output carries NaN.
Json to_json(Complex z);
Json to_json(const CVector& v);
Json to_json(const std::vector<Complex>& v);

Complex complex_from_json(const Json& j);
CVector vector_from_json(const Json& j);

/// {"order", "dim", "symmetric", "entries": [[re,im], ...]}
Json to_json(const Tensor& t);
Tensor tensor_from_json(const Json& j);

/// {"coeffs": [[re,im], ...]} in ascending degree
Json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);

Json to_json(const EigenClass& c);
/// {"classes", "count", "path_failures", "warnings", ...}
Json to_json(const EigenReport& r);

Json to_json(const CharPoly& c);
Json to_json(const DiscriminantReport& r);
Json to_json(const TraceCrosscheck& r);

Tensor read_tensor_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace tenspec
