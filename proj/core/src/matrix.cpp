#include "mcl/matrix.hpp"

#include <stdexcept>

namespace mcl {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix kron(const std::vector<CMatrix>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("kron: empty factor list");
  }
  CMatrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    out = kron(out, factors[i]);
  }
  return out;
}

Complex frobenius_inner(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("frobenius_inner: shape mismatch");
  }
  return a.conjugate().cwiseProduct(b).sum();
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).norm() < tol;
}

bool is_unitary(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols())).norm() < tol;
}

bool is_projection(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).norm() < tol && (m * m - m).norm() < tol;
}

CMatrix perm_matrix(const Perm& p) {
  CMatrix out = CMatrix::Zero(p.degree(), p.degree());
  for (int j = 0; j < p.degree(); ++j) {
    out(p(j), j) = 1.0;
  }
  return out;
}

}  // namespace mcl
