#include "qstrotter/coefficients.hpp"

#include <string>

namespace qst {

const char* to_string(CoeffType t) {
    switch (t) {
        case CoeffType::UnitaryType: return "unitary";
        case CoeffType::ContractionType: return "contraction";
        default: return "unchecked";
    }
}

CoefficientMatrix::CoefficientMatrix(CMatrix K, CMatrix L, CMatrix M, CMatrix W, CoeffType type)
    : K_(std::move(K)), L_(std::move(L)), M_(std::move(M)), W_(std::move(W)), type_(type) {
    dim_h_ = static_cast<int>(K_.rows());
    dim_k_ = dim_h_ > 0 ? static_cast<int>(L_.rows() / dim_h_) : 0;
}

CoefficientMatrix CoefficientMatrix::from_blocks(CMatrix K, CMatrix L, CMatrix M, CMatrix W,
                                                 CoeffType declared, double tol) {
    if (K.rows() == 0 || K.rows() != K.cols())
        throw DimensionError("coefficients: K must be square and nonempty");
    const auto h = K.rows();
    if (L.cols() != h || L.rows() % h != 0)
        throw DimensionError("coefficients: L must be a (dim_k*dim_h) x dim_h block column");
    const auto kh = L.rows();
    if (M.rows() != h || M.cols() != kh)
        throw DimensionError("coefficients: M must be a dim_h x (dim_k*dim_h) block row");
    if (W.rows() != kh || W.cols() != kh)
        throw DimensionError("coefficients: W must be square of size dim_k*dim_h");
    if (kh == 0) throw DimensionError("coefficients: noise dimension must be positive");
    for (const CMatrix* m : {&K, &L, &M, &W})
        if (!is_finite(*m)) throw ArgumentError("coefficients: non-finite entries");

    CoefficientMatrix F(std::move(K), std::move(L), std::move(M), std::move(W), declared);
    if (declared == CoeffType::UnitaryType) {
        const auto rep = check_structure(F, tol);
        if (!rep.pass)
            throw ValidationError(
                "coefficients: declared unitary-type but structure residuals are (" +
                    std::to_string(rep.residual_isometry) + ", " +
                    std::to_string(rep.residual_coisometry) + ") at tol " + std::to_string(tol),
                std::max(rep.residual_isometry, rep.residual_coisometry));
    } else if (declared == CoeffType::ContractionType) {
        const auto rep = check_contraction(F, tol);
        if (!rep.pass())
            throw ValidationError(
                "coefficients: declared contraction-type but form eigenvalues are (" +
                    std::to_string(rep.max_eig_isometry) + ", " +
                    std::to_string(rep.max_eig_coisometry) + ") at tol " + std::to_string(tol),
                std::max(rep.max_eig_isometry, rep.max_eig_coisometry));
    }
    return F;
}

CMatrix CoefficientMatrix::L_block(int j) const {
    return L_.block(static_cast<Eigen::Index>(j) * dim_h_, 0, dim_h_, dim_h_);
}

CMatrix CoefficientMatrix::M_block(int k) const {
    return M_.block(0, static_cast<Eigen::Index>(k) * dim_h_, dim_h_, dim_h_);
}

CMatrix CoefficientMatrix::W_block(int j, int k) const {
    return W_.block(static_cast<Eigen::Index>(j) * dim_h_, static_cast<Eigen::Index>(k) * dim_h_,
                    dim_h_, dim_h_);
}

CMatrix CoefficientMatrix::full_matrix() const {
    const auto h = dim_h_;
    const auto kh = L_.rows();
    CMatrix F(h + kh, h + kh);
    F.topLeftCorner(h, h) = K_;
    F.topRightCorner(h, kh) = M_;
    F.bottomLeftCorner(kh, h) = L_;
    F.bottomRightCorner(kh, kh) = W_ - CMatrix::Identity(kh, kh);
    return F;
}

CoefficientMatrix make_unitary_generator(const CMatrix& H, const CMatrix& L, const CMatrix& W,
                                         double tol) {
    if (H.rows() != H.cols()) throw DimensionError("make_unitary_generator: H must be square");
    const double h_res = selfadjoint_defect(H);
    if (h_res > tol)
        throw ValidationError("make_unitary_generator: H is not selfadjoint, residual " +
                                  std::to_string(h_res),
                              h_res);
    const double w_res = isometry_defect(W);
    const double w_res2 = opnorm(W * W.adjoint() - CMatrix::Identity(W.rows(), W.rows()));
    const double w_def = std::max(w_res, w_res2);
    if (w_def > tol)
        throw ValidationError("make_unitary_generator: W is not unitary, residual " +
                                  std::to_string(w_def),
                              w_def);
    const Complex i_unit(0.0, 1.0);
    CMatrix K = i_unit * H - 0.5 * (L.adjoint() * L);
    CMatrix M = -(L.adjoint() * W);
    return CoefficientMatrix::from_blocks(std::move(K), L, std::move(M), W,
                                          CoeffType::UnitaryType, std::max(tol, 1e-10));
}

CoefficientMatrix make_contraction_generator(const CMatrix& H, const CMatrix& L,
                                             const CMatrix& W, const CMatrix& R, double tol) {
    if (H.rows() != H.cols() || R.rows() != R.cols() || H.rows() != R.rows())
        throw DimensionError("make_contraction_generator: H and R must be square of equal size");
    const double h_res = selfadjoint_defect(H);
    if (h_res > tol)
        throw ValidationError("make_contraction_generator: H is not selfadjoint", h_res);
    const double r_asym = selfadjoint_defect(R);
    const double r_neg = max_eigenvalue_hermitian(-R);  // = -(smallest eigenvalue of R)
    if (r_asym > tol || r_neg > tol)
        throw ValidationError("make_contraction_generator: R must be positive semidefinite",
                              std::max(r_asym, r_neg));
    if (opnorm(W) > 1.0 + tol)
        throw ValidationError("make_contraction_generator: W must be a contraction", opnorm(W));
    const Complex i_unit(0.0, 1.0);
    CMatrix K = i_unit * H - 0.5 * (L.adjoint() * L) - R;
    CMatrix M = -(L.adjoint() * W);
    return CoefficientMatrix::from_blocks(std::move(K), L, std::move(M), W,
                                          CoeffType::ContractionType, std::max(tol, 1e-10));
}

namespace {

/// The two quadratic forms of the structure relations / contraction
/// inequalities, assembled on h (+) (h (x) k). D = 0 (+) I kills the initial
/// component, so (F* D F)^mu_nu = sum_j (F^j_mu)* F^j_nu.
struct StructureForms {
    CMatrix isometry;    // F* + F + F* D F
    CMatrix coisometry;  // F* + F + F D F*
};

StructureForms structure_forms(const CoefficientMatrix& F) {
    const CMatrix full = F.full_matrix();
    const auto h = F.dim_h();
    const auto total = full.rows();
    CMatrix noise_part = full.bottomRows(total - h);  // rows of D F
    CMatrix base = full.adjoint() + full;
    StructureForms forms;
    forms.isometry = base + noise_part.adjoint() * noise_part;
    CMatrix right_part = full.rightCols(total - h);  // columns of F D
    forms.coisometry = base + right_part * right_part.adjoint();
    return forms;
}

} // namespace

StructureReport check_structure(const CoefficientMatrix& F, double tol) {
    const auto forms = structure_forms(F);
    StructureReport rep;
    rep.residual_isometry = opnorm(forms.isometry);
    rep.residual_coisometry = opnorm(forms.coisometry);
    rep.tol = tol;
    rep.pass = rep.residual_isometry <= tol && rep.residual_coisometry <= tol;
    return rep;
}

ContractionReport check_contraction(const CoefficientMatrix& F, double tol) {
    const auto forms = structure_forms(F);
    ContractionReport rep;
    rep.max_eig_isometry = max_eigenvalue_hermitian(forms.isometry);
    rep.max_eig_coisometry = max_eigenvalue_hermitian(forms.coisometry);
    rep.tol = tol;
    rep.pass_isometry = rep.max_eig_isometry <= tol;
    rep.pass_coisometry = rep.max_eig_coisometry <= tol;
    return rep;
}

namespace {

CoeffType combined_type(CoeffType a, CoeffType b) {
    if (a == CoeffType::Unchecked || b == CoeffType::Unchecked) return CoeffType::Unchecked;
    if (a == CoeffType::UnitaryType && b == CoeffType::UnitaryType)
        return CoeffType::UnitaryType;
    return CoeffType::ContractionType;
}

} // namespace

CoefficientMatrix trotter_compose(const CoefficientMatrix& F1, const CoefficientMatrix& F2) {
    if (F1.dim_h() != F2.dim_h())
        throw DimensionError("trotter_compose: initial space dimensions differ (" +
                             std::to_string(F1.dim_h()) + " vs " + std::to_string(F2.dim_h()) +
                             ")");
    const auto h = F1.dim_h();
    const auto kh1 = F1.L().rows();
    const auto kh2 = F2.L().rows();

    CMatrix K = F1.K() + F2.K();
    CMatrix L(kh1 + kh2, h);
    L.topRows(kh1) = F1.L();
    L.bottomRows(kh2) = F2.L();
    CMatrix M(h, kh1 + kh2);
    M.leftCols(kh1) = F1.M();
    M.rightCols(kh2) = F2.M();
    CMatrix W = direct_sum(F1.W(), F2.W());

    // exact block algebra preserves the declared type; no recheck needed
    return CoefficientMatrix(std::move(K), std::move(L), std::move(M), std::move(W),
                             combined_type(F1.type(), F2.type()));
}

CoefficientMatrix compose_many(const std::vector<CoefficientMatrix>& terms) {
    if (terms.empty()) throw ArgumentError("compose_many: need at least one coefficient matrix");
    CoefficientMatrix acc = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) acc = trotter_compose(acc, terms[i]);
    return acc;
}

CoefficientMatrix ampliate(const CoefficientMatrix& F, int extra_before, int extra_after) {
    if (extra_before < 0 || extra_after < 0)
        throw ArgumentError("ampliate: extra dimensions must be nonnegative");
    if (extra_before == 0 && extra_after == 0) return F;
    const auto h = F.dim_h();
    const Eigen::Index bh = static_cast<Eigen::Index>(extra_before) * h;
    const Eigen::Index ah = static_cast<Eigen::Index>(extra_after) * h;
    const auto kh = F.L().rows();

    CMatrix L = CMatrix::Zero(bh + kh + ah, h);
    L.middleRows(bh, kh) = F.L();
    CMatrix M = CMatrix::Zero(h, bh + kh + ah);
    M.middleCols(bh, kh) = F.M();
    CMatrix W = CMatrix::Identity(bh + kh + ah, bh + kh + ah);
    W.block(bh, bh, kh, kh) = F.W();
    return CoefficientMatrix(F.K(), std::move(L), std::move(M), std::move(W), F.type());
}

} // namespace qst
