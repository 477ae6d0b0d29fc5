#include "tenspec/invariants.hpp"

#include <algorithm>

#include "tenspec/spectra.hpp"

namespace tenspec {

MatrixPair::MatrixPair(CMatrix a, CMatrix b) : a_(std::move(a)), b_(std::move(b))
{
    for (const CMatrix* m : {&a_, &b_}) {
        if (m->rows() != 2 || m->cols() != 2)
            throw DimensionError("matrix pair entries must be 2x2");
        if (!m->allFinite())
            throw std::invalid_argument("matrix entries must be finite");
        const double scale = std::max(1.0, m->cwiseAbs().maxCoeff());
        if (std::abs((*m)(0, 1) - (*m)(1, 0)) > 1e-12 * scale)
            throw std::invalid_argument("matrix pair entries must be symmetric");
    }
}

Tensor congruence_action(const CMatrix& g, const Tensor& t)
{
    if (t.order() != 3)
        throw DimensionError("congruence_action acts on order-3 tensors");
    if (g.rows() != t.dim() || g.cols() != t.dim())
        throw DimensionError("matrix size must match the tensor dimension");
    const CMatrix gram = g.transpose() * g;
    if ((gram - CMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("congruence_action needs an orthogonal matrix");
    const int modes[] = {2, 3};
    return mode_transform(t, g, modes);
}

Complex det_trace_formula(const MatrixPair& pair)
{
    const CMatrix& a = pair.a();
    const CMatrix& b = pair.b();
    const Complex ta = a.trace();
    const Complex tb = b.trace();
    const Complex tab = (a * b).trace();
    const Complex ta2 = (a * a).trace();
    const Complex tb2 = (b * b).trace();
    return (ta * tb - tab + ta * ta - ta2) * (tb2 - tb * tb);
}

const char* to_string(SlotConvention c)
{
    switch (c) {
    case SlotConvention::first:
        return "first";
    case SlotConvention::middle:
        return "middle";
    case SlotConvention::last:
        return "last";
    }
    return "?";
}

Tensor tensor_from_pair(const MatrixPair& pair, SlotConvention c)
{
    Tensor t = Tensor::zeros(3, 2);
    const CMatrix* slices[] = {&pair.a(), &pair.b()};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                std::array<int, 3> idx{};
                switch (c) {
                case SlotConvention::first:
                    idx = {i, j, k};
                    break;
                case SlotConvention::middle:
                    idx = {j, i, k};
                    break;
                case SlotConvention::last:
                    idx = {j, k, i};
                    break;
                }
                t(idx) = (*slices[i])(j, k);
            }
    return t;
}

TraceCrosscheck det_trace_crosscheck(const MatrixPair& pair, SlotConvention c)
{
    TraceCrosscheck r;
    r.convention = c;
    r.formula = det_trace_formula(pair);
    r.oracle = determinant(tensor_from_pair(pair, c));
    const double scale = std::max(std::abs(r.formula), std::abs(r.oracle));
    r.deviation = scale > 0.0 ? std::abs(r.formula - r.oracle) / scale : 0.0;
    return r;
}

std::vector<TraceCrosscheck> det_trace_crosscheck(const MatrixPair& pair)
{
    std::vector<TraceCrosscheck> out;
    for (auto c : kSlotConventions)
        out.push_back(det_trace_crosscheck(pair, c));
    return out;
}

}  // namespace tenspec
