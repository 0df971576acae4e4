#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qstrotter/errors.hpp"

namespace qst {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// True iff every entry is finite (no NaN/Inf in either component).
bool is_finite(const CMatrix& a);

/// Matrix exponential e^A by scaling-and-squaring with a diagonal Pade
/// approximant. Deterministic for fixed input.
CMatrix expm(const CMatrix& a);

/// Unitary factor of the polar decomposition of a nonsingular matrix
/// (the nearest unitary in Frobenius norm).
CMatrix polar_unitary(const CMatrix& a);

/// Operator norm: the largest singular value.
double opnorm(const CMatrix& a);

/// Kronecker product a (x) b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Block-diagonal direct sum a (+) b.
CMatrix direct_sum(const CMatrix& a, const CMatrix& b);

/// Largest eigenvalue of a Hermitian matrix (symmetrized before solving).
double max_eigenvalue_hermitian(const CMatrix& a);

/// ||A* A - I|| in operator norm; 0 for an exact isometry.
double isometry_defect(const CMatrix& a);

/// ||A - A*|| in operator norm; 0 for an exact selfadjoint matrix.
double selfadjoint_defect(const CMatrix& a);

inline CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

} // namespace qst
