#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qstrotter/semigroups.hpp"

namespace qst {

/// (e^{h Z1} e^{h Z2})^{[t/h]} together with its operator-norm distance from
/// e^{t (Z1 + Z2)}.
struct LieResult {
    CMatrix product;
    double error = 0.0;
};

LieResult lie_product(const CMatrix& Z1, const CMatrix& Z2, double t, double h);

/// Matrix element of the interleaved Trotter product at refinement level n
/// against normalized exponential vectors of f and g (step functions on the
/// combined noise space k1 (+) k2, split with the k1 components first):
/// the ordered product over the dyadic grid of
///   P1^{f1(s), g1(s)}_{2^-n} . P2^{f2(s), g2(s)}_{2^-n}
/// followed by the final factor of duration t - t^n_0. Requires n at least
/// the orders of f and g.
CMatrix trotter_element(const CoefficientMatrix& F1, const CoefficientMatrix& F2,
                        const StepFunction& f, const StepFunction& g, const Dyadic& t, int n);

/// Matrix element of the limit cocycle: matrix_element of the composed
/// coefficient matrix trotter_compose(F1, F2).
CMatrix limit_element(const CoefficientMatrix& F1, const CoefficientMatrix& F2,
                      const StepFunction& f, const StepFunction& g, const Dyadic& t);

/// Errors ||trotter_element(n) - limit_element|| over a range of levels.
struct ConvergenceReport {
    std::vector<int> levels;
    std::vector<double> errors;
    /// errors[i] / errors[i-1]; empty slot for the first level.
    std::vector<std::optional<double>> ratios;
    /// Negated least-squares slope of log2(error) against n (approx. 1 for a
    /// first-order method); absent when the errors are at rounding level.
    std::optional<double> estimated_rate;
    Dyadic t;
    std::string description;
};

ConvergenceReport convergence_sweep(const CoefficientMatrix& F1, const CoefficientMatrix& F2,
                                    const StepFunction& f, const StepFunction& g, const Dyadic& t,
                                    int n_min, int n_max);

/// || G1_{c1,d1} + G2_{c2,d2} - G_{c,d}(F1 box F2) ||; an exact algebraic
/// identity, so the residual is rounding-level for every input.
double additivity_check(const CoefficientMatrix& F1, const CoefficientMatrix& F2,
                        const CVector& c, const CVector& d);

/// Two-parameter variant over the window [s, t]: first factor of duration
/// s^n_1 - s, then full 2^-n steps, then the final factor of duration
/// t - t^n_0.
CMatrix two_param_element(const CoefficientMatrix& F1, const CoefficientMatrix& F2,
                          const StepFunction& f, const StepFunction& g, const Dyadic& s,
                          const Dyadic& t, int n);

} // namespace qst
