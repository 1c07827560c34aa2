#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "mcl/perm.hpp"

namespace mcl {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Kronecker product, index 0 leftmost (most significant in the row/column
/// digit expansion). Throws std::invalid_argument on an empty list.
CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix kron(const std::vector<CMatrix>& factors);

/// Frobenius inner product trace(a^* b); conjugate-linear in a.
Complex frobenius_inner(const CMatrix& a, const CMatrix& b);

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol);
bool is_unitary(const CMatrix& m, double tol);
bool is_projection(const CMatrix& m, double tol);

/// The matrix sending e_j to e_{p(j)}: entries P(p(j), j) = 1.
CMatrix perm_matrix(const Perm& p);

}  // namespace mcl
