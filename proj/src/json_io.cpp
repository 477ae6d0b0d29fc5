#include "tenspec/json_io.hpp"

#include <fstream>

namespace tenspec {

namespace {

double finite(double v)
{
    if (!std::isfinite(v))
        throw NumericalError("refusing to serialise a non-finite number");
    return v;
}

}  // namespace

Json to_json(Complex z) { return Json::array({finite(z.real()), finite(z.imag())}); }

Json to_json(const CVector& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(to_json(v[i]));
    return out;
}

Json to_json(const std::vector<Complex>& v)
{
    Json out = Json::array();
    for (const auto& z : v)
        out.push_back(to_json(z));
    return out;
}

Complex complex_from_json(const Json& j)
{
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("complex numbers are encoded as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

CVector vector_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected an array of [re, im] pairs");
    CVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i]);
    return v;
}

Json to_json(const Tensor& t)
{
    Json j;
    j["order"] = t.order();
    j["dim"] = t.dim();
    j["symmetric"] = t.symmetric_hint();
    Json entries = Json::array();
    for (const auto& z : t.entries())
        entries.push_back(to_json(z));
    j["entries"] = std::move(entries);
    return j;
}

Tensor tensor_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("order") || !j.contains("dim") || !j.contains("entries"))
        throw std::invalid_argument("tensor JSON needs order, dim and entries");
    const int order = j.at("order").get<int>();
    const int dim = j.at("dim").get<int>();
    const bool sym = j.value("symmetric", false);
    const Json& e = j.at("entries");
    if (!e.is_array())
        throw std::invalid_argument("entries must be an array");
    if (order >= 3 && dim >= 2 && e.size() != tensor_size(order, dim))
        throw DimensionError("entries array has the wrong length for (order, dim)");
    std::vector<Complex> entries;
    entries.reserve(e.size());
    for (const auto& z : e)
        entries.push_back(complex_from_json(z));
    return Tensor(order, dim, std::move(entries), sym);
}

Json to_json(const UniPoly& p)
{
    Json j;
    j["coeffs"] = to_json(p.coeffs());
    return j;
}

UniPoly unipoly_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
        throw std::invalid_argument("polynomial JSON needs a coeffs array");
    std::vector<Complex> c;
    for (const auto& z : j.at("coeffs"))
        c.push_back(complex_from_json(z));
    return UniPoly(std::move(c));
}

Json to_json(const EigenClass& c)
{
    Json j;
    j["rep"] = to_json(c.rep);
    j["xtx"] = to_json(c.xtx);
    j["kind"] = to_string(c.kind);
    j["lambdas"] = to_json(c.lambdas);
    j["residual"] = finite(c.residual);
    return j;
}

Json to_json(const EigenReport& r)
{
    Json j;
    Json classes = Json::array();
    for (const auto& c : r.classes)
        classes.push_back(to_json(c));
    j["classes"] = std::move(classes);
    j["count"] = r.classes.size();
    j["path_failures"] = r.path_failures;
    j["paths_tracked"] = r.paths_tracked;
    j["diverged"] = r.diverged;
    j["det"] = to_json(r.det);
    j["singular"] = r.singular;
    j["warnings"] = r.warnings;
    return j;
}

Json to_json(const CharPoly& c)
{
    Json j = to_json(c.poly);
    j["degree"] = c.poly.degree();
    j["degree_expected"] = c.degree_expected;
    j["radius"] = finite(c.radius);
    j["samples"] = c.samples;
    j["warnings"] = c.warnings;
    return j;
}

Json to_json(const DiscriminantReport& r)
{
    Json j;
    j["closed_form"] = to_json(r.closed_form);
    j["lambdas"] = to_json(r.lambdas);
    j["direct"] = to_json(r.direct);
    j["closed"] = to_json(r.closed);
    j["max_rel_deviation"] = finite(r.max_rel_deviation);
    j["measured_constant"] = to_json(r.measured_constant);
    j["constant_spread"] = finite(r.constant_spread);
    j["expected_constant"] = to_json(r.expected_constant);
    return j;
}

Json to_json(const TraceCrosscheck& r)
{
    Json j;
    j["convention"] = to_string(r.convention);
    j["formula"] = to_json(r.formula);
    j["oracle"] = to_json(r.oracle);
    j["deviation"] = finite(r.deviation);
    return j;
}

Tensor read_tensor_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    try {
        return tensor_from_json(j);
    } catch (const Json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j)
{
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace tenspec
