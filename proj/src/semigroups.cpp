#include "qstrotter/semigroups.hpp"

#include <cmath>

namespace qst {

CMatrix noise_lift(const CVector& c, int dim_h) {
    CMatrix lift(c.size() * dim_h, dim_h);
    const CMatrix id = CMatrix::Identity(dim_h, dim_h);
    for (Eigen::Index j = 0; j < c.size(); ++j)
        lift.block(j * dim_h, 0, dim_h, dim_h) = c(j) * id;
    return lift;
}

AssociatedGenerator generator_cd(const CoefficientMatrix& F, const CVector& c, const CVector& d) {
    if (c.size() != F.dim_k() || d.size() != F.dim_k())
        throw DimensionError("generator_cd: test vectors must have length dim_k = " +
                             std::to_string(F.dim_k()));
    const int h = F.dim_h();
    const CMatrix Ec = noise_lift(c, h);
    const CMatrix Ed = noise_lift(d, h);

    AssociatedGenerator gen;
    gen.c = c;
    gen.d = d;
    gen.type = F.type();
    gen.G = F.K() + Ec.adjoint() * F.L() + F.M() * Ed + Ec.adjoint() * F.W() * Ed -
            0.5 * (c.squaredNorm() + d.squaredNorm()) * CMatrix::Identity(h, h);
    return gen;
}

CMatrix evolve(const AssociatedGenerator& gen, double t) {
    if (t < 0.0) throw ArgumentError("evolve: time must be nonnegative");
    if (t == 0.0) return CMatrix::Identity(gen.G.rows(), gen.G.cols());
    return expm(t * gen.G);
}

CMatrix matrix_element(const CoefficientMatrix& F, const StepFunction& f, const StepFunction& g,
                       const Dyadic& t, bool normalized) {
    if (f.dim_k() != F.dim_k() || g.dim_k() != F.dim_k())
        throw DimensionError("matrix_element: step functions must take values in the noise space");
    if (t.is_negative()) throw ArgumentError("matrix_element: horizon must be nonnegative");

    const int h = F.dim_h();
    CMatrix X = CMatrix::Identity(h, h);
    if (t.is_zero()) return X;

    std::vector<Dyadic> cuts = merge_breakpoints(f, g, t);
    cuts.insert(cuts.begin(), Dyadic());
    cuts.push_back(t);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double width = (cuts[i + 1] - cuts[i]).to_double();
        if (width == 0.0) continue;
        const auto gen = generator_cd(F, f(cuts[i]), g(cuts[i]));
        X = X * evolve(gen, width);
    }
    if (!normalized) {
        const double nf = norm_sq_l2(f, Dyadic(), t);
        const double ng = norm_sq_l2(g, Dyadic(), t);
        X *= std::exp(0.5 * (nf + ng));
    }
    return X;
}

} // namespace qst
