#pragma once

#include <vector>

#include "qstrotter/dyadic.hpp"
#include "qstrotter/linalg.hpp"

namespace qst {

/// Right-continuous k-valued step function on [0, inf[ with dyadic
/// breakpoints. Piece i takes values_[i] on [breaks_[i-1], breaks_[i][
/// (with breaks_[-1] = 0 and breaks_[m] = inf understood).
class StepFunction {
public:
    /// Constant function.
    StepFunction(int dim_k, CVector value);

    /// General step function: values.size() == breakpoints.size() + 1,
    /// breakpoints strictly increasing and positive.
    StepFunction(int dim_k, std::vector<Dyadic> breakpoints, std::vector<CVector> values);

    static StepFunction zero(int dim_k);

    int dim_k() const { return dim_k_; }
    const std::vector<Dyadic>& breakpoints() const { return breaks_; }
    const std::vector<CVector>& values() const { return values_; }

    /// Right limit at t (the value on the piece containing t).
    const CVector& operator()(const Dyadic& t) const;

    /// Least N with every breakpoint an integer multiple of 2^-N.
    int order() const;

    bool is_constant() const { return breaks_.empty(); }

    /// f restricted to [s, t[, zero outside.
    StepFunction restricted(const Dyadic& s, const Dyadic& t) const;

    /// tau |-> f(tau + s), the tail of f from time s onward.
    StepFunction shifted_left(const Dyadic& s) const;

    /// Pointwise sum (breakpoints merged).
    StepFunction operator+(const StepFunction& other) const;

private:
    int dim_k_;
    std::vector<Dyadic> breaks_;
    std::vector<CVector> values_;
};

/// Least N with every breakpoint of f a multiple of 2^-N; 0 for constants.
int order(const StepFunction& f);

/// The dyadic refinement grid {0, 2^-n, 2*2^-n, ..., t^n_0, t} with
/// t^n_0 = 2^-n * floor(2^n t).
struct DyadicGrid {
    Dyadic t;
    int n = 0;
    std::vector<Dyadic> times;

    /// Width of the final partial step t - t^n_0, in [0, 2^-n[.
    Dyadic partial_width() const;
};

DyadicGrid dyadic_grid(const Dyadic& t, int n);

/// Discontinuities of f or g strictly inside ]0, t[, sorted; possibly empty.
std::vector<Dyadic> merge_breakpoints(const StepFunction& f, const StepFunction& g,
                                      const Dyadic& t);

/// Componentwise juxtaposition: value at each time is (f1(t), f2(t)).
StepFunction direct_sum(const StepFunction& f1, const StepFunction& f2);

/// First k entries of each value.
StepFunction head_components(const StepFunction& f, int k);
/// All entries from index k on.
StepFunction tail_components(const StepFunction& f, int k);

/// Exact L2 inner product int_s^t <f(tau), g(tau)> dtau from the step data
/// (conjugate-linear in f).
Complex inner_l2(const StepFunction& f, const StepFunction& g, const Dyadic& s,
                 const Dyadic& t);

/// Exact squared L2 norm of f over [s, t[.
double norm_sq_l2(const StepFunction& f, const Dyadic& s, const Dyadic& t);

/// Exponential vector phi(f_{[start,end[}) (normalized) or eps(f_{[start,end[}).
struct ExpVectorDesc {
    StepFunction f;
    Dyadic start;
    Dyadic end;
    bool normalized = true;

    ExpVectorDesc(StepFunction fn, Dyadic s, Dyadic e, bool norm = true);
};

/// <phi(f), phi(g)> = exp(<f,g> - |f|^2/2 - |g|^2/2) for normalized
/// descriptors, exp(<f,g>) for unnormalized ones; integrals are exact.
Complex exp_inner(const ExpVectorDesc& fd, const ExpVectorDesc& gd);

} // namespace qst
