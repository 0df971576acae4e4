#pragma once

#include "qstrotter/coefficients.hpp"
#include "qstrotter/step_function.hpp"

namespace qst {

/// Generator of the associated semigroup for test vectors c, d in the noise
/// dimension space:
///
///   G = K + L^c + M_d + W^c_d - (|c|^2 + |d|^2)/2 * I
///
/// with L^c = sum_j conj(c^j) L^j, M_d = sum_k d^k M_k and
/// W^c_d = sum_{j,k} conj(c^j) d^k W^j_k. For unitary- or contraction-type
/// coefficients, e^{tG} is a contraction for t >= 0.
struct AssociatedGenerator {
    CVector c;
    CVector d;
    CMatrix G;
    CoeffType type = CoeffType::Unchecked;
};

AssociatedGenerator generator_cd(const CoefficientMatrix& F, const CVector& c, const CVector& d);

/// The semigroup value P^{c,d}_t = e^{tG}.
CMatrix evolve(const AssociatedGenerator& gen, double t);

/// The lift c (x) I_h : h -> h (x) k used to contract noise-block rows and
/// columns against a test vector.
CMatrix noise_lift(const CVector& c, int dim_h);

/// Matrix element of the cocycle against normalized exponential vectors of
/// step functions: X with <u (x) phi(f_{[0,t[}), U_t v (x) phi(g_{[0,t[})> =
/// <u, X v>, computed as the ordered product of associated-semigroup factors
/// over the merged discontinuities of f and g (earliest factor leftmost).
/// With normalized = false the eps(.) convention is used instead.
CMatrix matrix_element(const CoefficientMatrix& F, const StepFunction& f, const StepFunction& g,
                       const Dyadic& t, bool normalized = true);

} // namespace qst
