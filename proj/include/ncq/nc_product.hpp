#pragma once

#include "ncq/matrix.hpp"

#include <cstdint>
#include <functional>

namespace ncq {

// Factors G(lo), ..., G(hi), all of dimension dim.
template <Field F>
struct FactorSequence {
    std::function<Matrix<F>(std::int64_t)> factor;
    std::int64_t lo = 1;
    std::int64_t hi = 0;
    std::size_t dim = 0;
};

// Ordered product with the convention
//   lo <= hi       : G(lo) G(lo+1) ... G(hi)
//   hi = lo - 1    : I
//   hi < lo - 1    : (G(hi+1) ... G(lo-1))^{-1}
// so that prod(l..m) * prod(m+1..k) = prod(l..k) for all integers l, m, k.
template <Field F>
Matrix<F> ordered_product(const FactorSequence<F>& seq) {
    Matrix<F> p = Matrix<F>::identity(seq.dim);
    if (seq.hi >= seq.lo) {
        for (std::int64_t j = seq.lo; j <= seq.hi; ++j) {
            Matrix<F> g = seq.factor(j);
            if (g.dim() != seq.dim) throw DimensionMismatch("factor dimension differs from sequence dim");
            p = p * g;
        }
        return p;
    }
    if (seq.hi == seq.lo - 1) return p;
    FactorSequence<F> forward{seq.factor, seq.hi + 1, seq.lo - 1, seq.dim};
    return inverse(ordered_product(forward));
}

// Checks prod_{j=lo}^{hi} G(j) = prod_{j=hi+1}^{lo-1} G(hi+lo-j)^{-1}, both
// sides taken with the ordered_product convention.
template <Field F>
bool check_reversal_identity(const FactorSequence<F>& seq, double tol = 1e-12) {
    const std::int64_t s = seq.lo + seq.hi;
    FactorSequence<F> mirrored{[&seq, s](std::int64_t j) { return inverse(seq.factor(s - j)); },
                               seq.hi + 1, seq.lo - 1, seq.dim};
    return approx_equal(ordered_product(seq), ordered_product(mirrored), tol);
}

}  // namespace ncq
