#include "qstrotter/step_function.hpp"

#include <algorithm>
#include <cmath>

namespace qst {

StepFunction::StepFunction(int dim_k, CVector value) : dim_k_(dim_k) {
    if (dim_k <= 0) throw ArgumentError("step function: dim_k must be positive");
    if (value.size() != dim_k)
        throw DimensionError("step function: value length does not match dim_k");
    values_.push_back(std::move(value));
}

StepFunction::StepFunction(int dim_k, std::vector<Dyadic> breakpoints,
                           std::vector<CVector> values)
    : dim_k_(dim_k), breaks_(std::move(breakpoints)), values_(std::move(values)) {
    if (dim_k <= 0) throw ArgumentError("step function: dim_k must be positive");
    if (values_.size() != breaks_.size() + 1)
        throw ArgumentError("step function: need exactly one more value than breakpoints");
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        if (breaks_[i].num() <= 0)
            throw ArgumentError("step function: breakpoints must be positive");
        if (i > 0 && !(breaks_[i - 1] < breaks_[i]))
            throw ArgumentError("step function: breakpoints must be strictly increasing");
    }
    for (const auto& v : values_)
        if (v.size() != dim_k) throw DimensionError("step function: value length does not match dim_k");
}

StepFunction StepFunction::zero(int dim_k) {
    return StepFunction(dim_k, CVector::Zero(dim_k));
}

const CVector& StepFunction::operator()(const Dyadic& t) const {
    // right-continuous: piece index = number of breakpoints <= t
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t,
                                     [](const Dyadic& a, const Dyadic& b) { return a < b; });
    return values_[static_cast<std::size_t>(it - breaks_.begin())];
}

int StepFunction::order() const {
    int n = 0;
    for (const auto& b : breaks_) n = std::max(n, b.level());
    return n;
}

StepFunction StepFunction::restricted(const Dyadic& s, const Dyadic& t) const {
    if (t < s) throw ArgumentError("step function: restriction interval must have s <= t");
    const CVector zero = CVector::Zero(dim_k_);
    if (s == t) return StepFunction(dim_k_, zero);

    std::vector<Dyadic> breaks;
    std::vector<CVector> values;
    if (s.num() > 0) {
        breaks.push_back(s);
        values.push_back(zero);
    }
    values.push_back((*this)(s));
    for (const auto& b : breaks_) {
        if (s < b && b < t) {
            breaks.push_back(b);
            values.push_back((*this)(b));
        }
    }
    breaks.push_back(t);
    values.push_back(zero);
    return StepFunction(dim_k_, std::move(breaks), std::move(values));
}

StepFunction StepFunction::shifted_left(const Dyadic& s) const {
    std::vector<Dyadic> breaks;
    std::vector<CVector> values;
    values.push_back((*this)(s));
    for (const auto& b : breaks_) {
        if (s < b) {
            breaks.push_back(b - s);
            values.push_back((*this)(b));
        }
    }
    return StepFunction(dim_k_, std::move(breaks), std::move(values));
}

StepFunction StepFunction::operator+(const StepFunction& other) const {
    if (dim_k_ != other.dim_k_)
        throw DimensionError("step function: dimension mismatch in sum");
    std::vector<Dyadic> breaks;
    std::merge(breaks_.begin(), breaks_.end(), other.breaks_.begin(), other.breaks_.end(),
               std::back_inserter(breaks), [](const Dyadic& a, const Dyadic& b) { return a < b; });
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    std::vector<CVector> values;
    values.push_back(values_[0] + other.values_[0]);
    for (const auto& b : breaks) values.push_back((*this)(b) + other(b));
    return StepFunction(dim_k_, std::move(breaks), std::move(values));
}

int order(const StepFunction& f) { return f.order(); }

Dyadic DyadicGrid::partial_width() const {
    return t - t.floor_to_level(n);
}

DyadicGrid dyadic_grid(const Dyadic& t, int n) {
    if (t.is_negative()) throw ArgumentError("dyadic grid: horizon must be nonnegative");
    DyadicGrid g;
    g.t = t;
    g.n = n;
    const Dyadic t0 = t.floor_to_level(n);
    const std::int64_t full = t0.numerator_at_level(n);
    g.times.reserve(static_cast<std::size_t>(full) + 2);
    for (std::int64_t k = 0; k <= full; ++k) g.times.push_back(Dyadic(k, n));
    if (t0 < t) g.times.push_back(t);
    return g;
}

std::vector<Dyadic> merge_breakpoints(const StepFunction& f, const StepFunction& g,
                                      const Dyadic& t) {
    if (f.dim_k() != g.dim_k())
        throw DimensionError("merge_breakpoints: step functions have different dimensions");
    std::vector<Dyadic> out;
    std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
               g.breakpoints().end(), std::back_inserter(out),
               [](const Dyadic& a, const Dyadic& b) { return a < b; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    out.erase(std::remove_if(out.begin(), out.end(),
                             [&](const Dyadic& b) { return !(Dyadic() < b && b < t); }),
              out.end());
    return out;
}

StepFunction direct_sum(const StepFunction& f1, const StepFunction& f2) {
    std::vector<Dyadic> breaks;
    std::merge(f1.breakpoints().begin(), f1.breakpoints().end(), f2.breakpoints().begin(),
               f2.breakpoints().end(), std::back_inserter(breaks),
               [](const Dyadic& a, const Dyadic& b) { return a < b; });
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    const int k = f1.dim_k() + f2.dim_k();
    auto join = [&](const Dyadic& t) {
        CVector v(k);
        v.head(f1.dim_k()) = f1(t);
        v.tail(f2.dim_k()) = f2(t);
        return v;
    };
    std::vector<CVector> values;
    values.push_back(join(Dyadic()));
    for (const auto& b : breaks) values.push_back(join(b));
    return StepFunction(k, std::move(breaks), std::move(values));
}

namespace {

StepFunction select_components(const StepFunction& f, int from, int count) {
    std::vector<CVector> values;
    for (const auto& v : f.values()) values.push_back(v.segment(from, count));
    return StepFunction(count, f.breakpoints(), std::move(values));
}

} // namespace

StepFunction head_components(const StepFunction& f, int k) {
    if (k <= 0 || k > f.dim_k()) throw DimensionError("head_components: bad split index");
    return select_components(f, 0, k);
}

StepFunction tail_components(const StepFunction& f, int k) {
    if (k < 0 || k >= f.dim_k()) throw DimensionError("tail_components: bad split index");
    return select_components(f, k, f.dim_k() - k);
}

namespace {

/// Walks the common refinement of the two breakpoint lists over [s, t[ and
/// accumulates sum(width_i * combine(f_i, g_i)).
template <typename Combine>
Complex integrate_pieces(const StepFunction& f, const StepFunction& g, const Dyadic& s,
                         const Dyadic& t, Combine combine) {
    if (t < s) throw ArgumentError("integration interval must have s <= t");
    std::vector<Dyadic> cuts;
    cuts.push_back(s);
    for (const auto& b : f.breakpoints())
        if (s < b && b < t) cuts.push_back(b);
    for (const auto& b : g.breakpoints())
        if (s < b && b < t) cuts.push_back(b);
    cuts.push_back(t);
    std::sort(cuts.begin(), cuts.end(), [](const Dyadic& a, const Dyadic& b) { return a < b; });
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Complex acc = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double width = (cuts[i + 1] - cuts[i]).to_double();
        acc += width * combine(f(cuts[i]), g(cuts[i]));
    }
    return acc;
}

} // namespace

Complex inner_l2(const StepFunction& f, const StepFunction& g, const Dyadic& s,
                 const Dyadic& t) {
    if (f.dim_k() != g.dim_k()) throw DimensionError("inner_l2: dimension mismatch");
    return integrate_pieces(f, g, s, t,
                            [](const CVector& a, const CVector& b) { return a.dot(b); });
}

double norm_sq_l2(const StepFunction& f, const Dyadic& s, const Dyadic& t) {
    return integrate_pieces(f, f, s, t, [](const CVector& a, const CVector&) {
               return Complex(a.squaredNorm(), 0.0);
           })
        .real();
}

ExpVectorDesc::ExpVectorDesc(StepFunction fn, Dyadic s, Dyadic e, bool norm)
    : f(std::move(fn)), start(s), end(e), normalized(norm) {
    if (start.is_negative() || end < start)
        throw ArgumentError("exponential vector: need 0 <= start <= end");
}

Complex exp_inner(const ExpVectorDesc& fd, const ExpVectorDesc& gd) {
    if (fd.f.dim_k() != gd.f.dim_k()) throw DimensionError("exp_inner: dimension mismatch");
    if (fd.normalized != gd.normalized)
        throw ArgumentError("exp_inner: descriptors must share the normalization convention");

    // <f_{[s1,t1[}, g_{[s2,t2[}> integrates over the overlap of the intervals.
    const Dyadic lo = std::max(fd.start, gd.start, [](const Dyadic& a, const Dyadic& b) { return a < b; });
    const Dyadic hi = std::min(fd.end, gd.end, [](const Dyadic& a, const Dyadic& b) { return a < b; });
    Complex cross = 0.0;
    if (lo < hi) cross = inner_l2(fd.f, gd.f, lo, hi);

    if (!fd.normalized) return std::exp(cross);
    const double nf = norm_sq_l2(fd.f, fd.start, fd.end);
    const double ng = norm_sq_l2(gd.f, gd.start, gd.end);
    return std::exp(cross - 0.5 * nf - 0.5 * ng);
}

} // namespace qst
