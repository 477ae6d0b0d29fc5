#pragma once

#include <array>
#include <vector>

#include "tenspec/tensor.hpp"

namespace tenspec {

/// Pair of symmetric 2x2 matrices, the slices of an order-3 tensor in dimension 2.
class MatrixPair {
public:
    MatrixPair(CMatrix a, CMatrix b);

    const CMatrix& a() const { return a_; }
    const CMatrix& b() const { return b_; }

private:
    CMatrix a_;
    CMatrix b_;
};

/// (G.T)_{ijk} = sum_{p,q} t_{ipq} g_{jp} g_{kq}; every slice becomes G A G^T.
/// G must be orthogonal (G^T G = I to 1e-10).
Tensor congruence_action(const CMatrix& g, const Tensor& t);

/// [Tr A Tr B - Tr AB + (Tr A)^2 - Tr A^2] * [Tr B^2 - (Tr B)^2]
Complex det_trace_formula(const MatrixPair& pair);

enum class SlotConvention { first, middle, last };

const char* to_string(SlotConvention c);

inline constexpr std::array<SlotConvention, 3> kSlotConventions{SlotConvention::first, SlotConvention::middle,
                                                                 SlotConvention::last};

/// Order-3 tensor whose slices are (A, B) in the given slot:
/// first t_{ijk} = M(i)_{jk}, middle t_{jik} = M(i)_{jk}, last t_{jki} = M(i)_{jk}.
Tensor tensor_from_pair(const MatrixPair& pair, SlotConvention c);

struct TraceCrosscheck {
    SlotConvention convention = SlotConvention::first;
    Complex formula;
    Complex oracle;
    /// |formula - oracle| / max(|formula|, |oracle|), 0 when both vanish
    double deviation = 0.0;
};

TraceCrosscheck det_trace_crosscheck(const MatrixPair& pair, SlotConvention c);

/// All three conventions.
std::vector<TraceCrosscheck> det_trace_crosscheck(const MatrixPair& pair);

}  // namespace tenspec
