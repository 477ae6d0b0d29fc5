#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tenspec/geometry.hpp"
#include "tenspec/invariants.hpp"
#include "tenspec/spectra.hpp"

namespace py = pybind11;
using namespace tenspec;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

Tensor tensor_from_array(const ComplexArray& a)
{
    if (a.ndim() < 3)
        throw DimensionError("a tensor needs at least 3 axes");
    const auto dim = a.shape(0);
    for (py::ssize_t k = 1; k < a.ndim(); ++k)
        if (a.shape(k) != dim)
            throw DimensionError("all axes must have the same length");
    return Tensor(static_cast<int>(a.ndim()), static_cast<int>(dim), std::vector<Complex>(a.data(), a.data() + a.size()));
}

ComplexArray tensor_to_array(const Tensor& t)
{
    std::vector<py::ssize_t> shape(static_cast<std::size_t>(t.order()), t.dim());
    ComplexArray out(shape);
    std::copy(t.entries().begin(), t.entries().end(), out.mutable_data());
    return out;
}

SpectraConfig make_config(double tol_singular, int samples, std::uint64_t seed)
{
    SpectraConfig cfg;
    cfg.tol_singular = tol_singular;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.tracker.parallel = false;
    return cfg;
}

MatrixPair make_pair(const CMatrix& a, const CMatrix& b) { return MatrixPair(a, b); }

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Eigenvectors, determinant and E-characteristic polynomial of complex tensors";

    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::class_<Tensor>(m, "Tensor")
        .def(py::init(&tensor_from_array), py::arg("array"),
             "Build from an ndarray with `order` axes of equal length.")
        .def_property_readonly("order", &Tensor::order)
        .def_property_readonly("dim", &Tensor::dim)
        .def("to_numpy", &tensor_to_array)
        .def("is_symmetric", [](const Tensor& t, double tol) { return is_symmetric(t, tol); },
             py::arg("rel_tol") = kSymmetryTol)
        .def("contract", &contract, py::arg("x"), "T x^{m-1}")
        .def_static("diagonal",
                    [](int order, const std::vector<Complex>& values) { return Tensor::diagonal(order, values); },
                    py::arg("order"), py::arg("values"))
        .def("__repr__", [](const Tensor& t) {
            return "<Tensor order=" + std::to_string(t.order()) + " dim=" + std::to_string(t.dim()) + ">";
        });

    py::class_<EigenClass>(m, "EigenClass")
        .def_readonly("rep", &EigenClass::rep)
        .def_readonly("xtx", &EigenClass::xtx)
        .def_readonly("lambdas", &EigenClass::lambdas)
        .def_readonly("residual", &EigenClass::residual)
        .def_property_readonly("kind", [](const EigenClass& c) { return std::string(to_string(c.kind)); });

    py::class_<EigenReport>(m, "EigenReport")
        .def_readonly("classes", &EigenReport::classes)
        .def_readonly("paths_tracked", &EigenReport::paths_tracked)
        .def_readonly("path_failures", &EigenReport::path_failures)
        .def_readonly("det", &EigenReport::det)
        .def_readonly("singular", &EigenReport::singular)
        .def_readonly("warnings", &EigenReport::warnings)
        .def("__len__", [](const EigenReport& r) { return r.classes.size(); });

    m.def("random_tensor", &random_tensor, py::arg("order"), py::arg("dim"), py::arg("seed") = 42,
          py::arg("symmetric") = false);
    m.def(
        "singular_tensor",
        [](int order, int dim, std::uint64_t seed) {
            SingularSample s = singular_tensor(order, dim, seed);
            return py::make_tuple(s.tensor, s.kernel_point);
        },
        py::arg("order"), py::arg("dim"), py::arg("seed") = 42, "Returns (tensor, kernel point).");
    m.def("random_orthogonal", &random_orthogonal, py::arg("n"), py::arg("seed") = 42);
    m.def("mode_transform_all", &mode_transform_all, py::arg("tensor"), py::arg("g"));

    m.def("expected_eigen_count", &expected_eigen_count, py::arg("order"), py::arg("dim"));
    m.def("expected_charpoly_degree", &expected_charpoly_degree, py::arg("order"), py::arg("dim"));

    m.def("determinant", [](const Tensor& t) { return determinant(t); }, py::arg("tensor"));
    m.def("is_singular", &is_singular, py::arg("tensor"), py::arg("tol") = 1e-8);
    m.def(
        "char_poly",
        [](const Tensor& t, int samples, std::uint64_t seed) {
            return echar_poly(t, make_config(1e-8, samples, seed)).poly.coeffs();
        },
        py::arg("tensor"), py::arg("samples") = 0, py::arg("seed") = 42,
        "Coefficients of the E-characteristic polynomial, constant term first.");
    m.def(
        "eigenpairs",
        [](const Tensor& t, double tol_singular, std::uint64_t seed) {
            return eigenpairs(t, make_config(tol_singular, 0, seed));
        },
        py::arg("tensor"), py::arg("tol_singular") = 1e-8, py::arg("seed") = 42);
    m.def(
        "e_eigenvalues", [](const Tensor& t, std::uint64_t seed) { return e_eigenvalues(t, make_config(1e-8, 0, seed)); },
        py::arg("tensor"), py::arg("seed") = 42);

    m.def(
        "discriminant_check",
        [](const Tensor& t) {
            const DiscriminantReport r = discriminant_report(t);
            py::dict out;
            out["lambdas"] = r.lambdas;
            out["direct"] = r.direct;
            out["closed"] = r.closed;
            out["max_rel_deviation"] = r.max_rel_deviation;
            out["measured_constant"] = r.measured_constant;
            out["expected_constant"] = r.expected_constant;
            return out;
        },
        py::arg("tensor"), "Sample the resultant route and the closed form (symmetric tensors).");

    m.def(
        "det_trace_formula", [](const CMatrix& a, const CMatrix& b) { return det_trace_formula(make_pair(a, b)); },
        py::arg("a"), py::arg("b"));
    m.def(
        "det_trace_crosscheck",
        [](const CMatrix& a, const CMatrix& b) {
            py::list out;
            for (const auto& c : det_trace_crosscheck(make_pair(a, b))) {
                py::dict d;
                d["convention"] = to_string(c.convention);
                d["formula"] = c.formula;
                d["oracle"] = c.oracle;
                d["deviation"] = c.deviation;
                out.append(d);
            }
            return out;
        },
        py::arg("a"), py::arg("b"));
}
