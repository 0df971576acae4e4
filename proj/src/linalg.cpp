#include "qstrotter/linalg.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace qst {

bool is_finite(const CMatrix& a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag()))
                return false;
    return true;
}

namespace {

void require_square_finite(const CMatrix& a, const char* op) {
    if (a.rows() != a.cols())
        throw DimensionError(std::string(op) + ": matrix must be square, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    if (!is_finite(a))
        throw ArgumentError(std::string(op) + ": matrix has non-finite entries");
}

} // namespace

CMatrix expm(const CMatrix& a) {
    require_square_finite(a, "expm");
    return a.exp();
}

CMatrix polar_unitary(const CMatrix& a) {
    require_square_finite(a, "polar_unitary");
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    const double smin = sv.size() > 0 ? sv(sv.size() - 1) : 0.0;
    if (smax == 0.0 || smin <= smax * 1e-14)
        throw RankError("polar_unitary: matrix is singular to working precision");
    return svd.matrixU() * svd.matrixV().adjoint();
}

double opnorm(const CMatrix& a) {
    if (a.size() == 0) return 0.0;
    if (!is_finite(a)) throw ArgumentError("opnorm: matrix has non-finite entries");
    Eigen::JacobiSVD<CMatrix> svd(a);
    return svd.singularValues()(0);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
    CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

double max_eigenvalue_hermitian(const CMatrix& a) {
    require_square_finite(a, "max_eigenvalue_hermitian");
    CMatrix h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

double isometry_defect(const CMatrix& a) {
    return opnorm(a.adjoint() * a - CMatrix::Identity(a.cols(), a.cols()));
}

double selfadjoint_defect(const CMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("selfadjoint_defect: matrix must be square");
    return opnorm(a - a.adjoint());
}

} // namespace qst
