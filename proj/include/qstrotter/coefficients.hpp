#pragma once

#include <vector>

#include "qstrotter/linalg.hpp"

namespace qst {

enum class CoeffType { Unchecked, UnitaryType, ContractionType };

const char* to_string(CoeffType t);

/// Block coefficient matrix
///
///     F = [ K  M     ]   on  h (+) (h (x) k),
///         [ L  W - I ]
///
/// with K on h, L a block column of noise-indexed operators h -> h, M the
/// matching block row, and W on h (x) k. Noise blocks are stored with the
/// initial space innermost: block j of L occupies rows [j*dim_h, (j+1)*dim_h[.
/// Immutable after construction.
class CoefficientMatrix {
public:
    /// Builds from raw blocks. When a unitary/contraction type is declared
    /// the corresponding invariant is verified at tolerance tol.
    static CoefficientMatrix from_blocks(CMatrix K, CMatrix L, CMatrix M, CMatrix W,
                                         CoeffType declared = CoeffType::Unchecked,
                                         double tol = 1e-10);

    int dim_h() const { return dim_h_; }
    int dim_k() const { return dim_k_; }
    CoeffType type() const { return type_; }

    const CMatrix& K() const { return K_; }
    const CMatrix& L() const { return L_; }
    const CMatrix& M() const { return M_; }
    const CMatrix& W() const { return W_; }

    /// Noise block j (0-based) of L: an h x h matrix.
    CMatrix L_block(int j) const;
    /// Noise block k of M.
    CMatrix M_block(int k) const;
    /// Noise block (j, k) of W.
    CMatrix W_block(int j, int k) const;

    /// The assembled (1+dim_k)*dim_h square matrix [[K, M], [L, W - I]].
    CMatrix full_matrix() const;

private:
    CoefficientMatrix(CMatrix K, CMatrix L, CMatrix M, CMatrix W, CoeffType type);

    friend CoefficientMatrix trotter_compose(const CoefficientMatrix&, const CoefficientMatrix&);
    friend CoefficientMatrix ampliate(const CoefficientMatrix&, int, int);

    int dim_h_;
    int dim_k_;
    CMatrix K_, L_, M_, W_;
    CoeffType type_;
};

/// K = iH - L*L/2, M = -L*W for selfadjoint H and unitary W; the result
/// satisfies both structure relations by construction.
CoefficientMatrix make_unitary_generator(const CMatrix& H, const CMatrix& L, const CMatrix& W,
                                         double tol = 1e-12);

/// K = iH - L*L/2 - R, M = -L*W for selfadjoint H, positive semidefinite R
/// and contractive W; the result satisfies both contraction inequalities.
CoefficientMatrix make_contraction_generator(const CMatrix& H, const CMatrix& L,
                                             const CMatrix& W, const CMatrix& R,
                                             double tol = 1e-10);

/// Residuals of the two structure relations, assembled as operator norms of
///   (a)  F* + F + F* D F   (isometry)
///   (b)  F* + F + F D F*   (coisometry)
/// where D projects onto the noise component of h (+) (h (x) k).
struct StructureReport {
    double residual_isometry = 0.0;
    double residual_coisometry = 0.0;
    double tol = 0.0;
    bool pass = false;
};

StructureReport check_structure(const CoefficientMatrix& F, double tol = 1e-10);

/// Largest eigenvalues of the two (Hermitian) contraction forms; the cocycle
/// is contractive iff both are <= 0.
struct ContractionReport {
    double max_eig_isometry = 0.0;
    double max_eig_coisometry = 0.0;
    double tol = 0.0;
    bool pass_isometry = false;
    bool pass_coisometry = false;
    bool pass() const { return pass_isometry && pass_coisometry; }
};

ContractionReport check_contraction(const CoefficientMatrix& F, double tol = 1e-10);

/// Coefficient matrix of the Trotter composition on noise space k1 (+) k2:
/// K = K1 + K2, L stacked, M concatenated, W = W1 (+) W2 with zero
/// off-diagonal blocks. k1 noise coordinates come first.
CoefficientMatrix trotter_compose(const CoefficientMatrix& F1, const CoefficientMatrix& F2);

/// p-fold composition; compose_many({F1, F2}) == trotter_compose(F1, F2).
CoefficientMatrix compose_many(const std::vector<CoefficientMatrix>& terms);

/// Embeds F into a larger noise space with extra_before zero noise
/// coordinates prepended and extra_after appended; W gains identity blocks
/// on the new coordinates, K is unchanged.
CoefficientMatrix ampliate(const CoefficientMatrix& F, int extra_before, int extra_after);

} // namespace qst
