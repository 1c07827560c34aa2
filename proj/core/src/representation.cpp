#include "mcl/representation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mcl/errors.hpp"

namespace mcl {

namespace {

constexpr int kCommutantDimCap = 32;

void require_even_dim(int d, const char* who) {
  if (d < 2 || d % 2 != 0) {
    throw std::invalid_argument(std::string(who) + ": dimension must be even and >= 2");
  }
}

Complex root_of_unity(int j, int d) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / d;
  return Complex(std::cos(angle), std::sin(angle));
}

std::uint64_t tensor_dim(Modulus modulus, IndexSet indices) {
  std::uint64_t dim = 1;
  for (int i = 0; i < indices.size(); ++i) {
    dim *= static_cast<std::uint64_t>(modulus.symbols());
  }
  return dim;
}

}  // namespace

Tolerance::Tolerance(double eps) : eps_(eps) {
  if (!(eps > 0.0) || eps >= 1e-3) {
    throw std::invalid_argument("Tolerance: eps must lie in (0, 1e-3)");
  }
}

CMatrix shift_matrix(int d) {
  require_even_dim(d, "shift_matrix");
  CMatrix out = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    out(i, (i + 1) % d) = 1.0;
  }
  return out;
}

CMatrix clock_matrix(int d) {
  require_even_dim(d, "clock_matrix");
  CMatrix out = CMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    out(j, j) = root_of_unity(j, d);
  }
  return out;
}

CMatrix fourier_matrix(int d) {
  require_even_dim(d, "fourier_matrix");
  CMatrix out(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      out(i, j) = scale * root_of_unity((i * j) % d, d);
    }
  }
  return out;
}

CMatrix fourier_tensor(Modulus modulus, IndexSet indices) {
  std::vector<CMatrix> factors(static_cast<std::size_t>(indices.size()),
                               fourier_matrix(modulus.symbols()));
  return kron(factors);
}

int atom_basis_index(const MclElement& atom) { return atom_rank(atom); }

CMatrix atom_projection(const MclElement& atom) {
  const std::uint64_t dim = tensor_dim(atom.modulus(), IndexSet(atom.indices()));
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const int t = atom_rank(atom);
  out(t, t) = 1.0;
  return out;
}

CMatrix coatom_projection(const MclElement& coatom) {
  if (!coatom.is_coatom()) {
    throw std::invalid_argument("coatom_projection: element is not a coatom");
  }
  const int k2 = coatom.modulus().symbols();
  std::vector<CMatrix> factors;
  factors.reserve(static_cast<std::size_t>(coatom.indices()));
  for (int i = 0; i < coatom.indices(); ++i) {
    const Entry e = coatom.entry(i);
    if (e.is_x()) {
      factors.push_back(CMatrix::Identity(k2, k2));
    } else {
      CMatrix p = CMatrix::Zero(k2, k2);
      p(e.value() - 1, e.value() - 1) = 1.0;
      factors.push_back(std::move(p));
    }
  }
  return kron(factors);
}

CMatrix wreath_matrix(const WreathElement& w, Modulus modulus, IndexSet indices) {
  return perm_matrix(w.atom_action(modulus, indices));
}

CMatrix site_perm_matrix(const Perm& p, int site, Modulus modulus, IndexSet indices) {
  if (site < 0 || site >= indices.size()) {
    throw std::invalid_argument("site_perm_matrix: site out of range");
  }
  if (p.degree() != modulus.symbols()) {
    throw std::invalid_argument("site_perm_matrix: permutation degree must be 2k");
  }
  const int k2 = modulus.symbols();
  std::vector<CMatrix> factors(static_cast<std::size_t>(indices.size()),
                               CMatrix::Identity(k2, k2));
  factors[static_cast<std::size_t>(site)] = perm_matrix(p);
  return kron(factors);
}

std::vector<std::vector<CMatrix>> matrix_units(int site, Modulus modulus, IndexSet indices) {
  if (site < 0 || site >= indices.size()) {
    throw std::invalid_argument("matrix_units: site out of range");
  }
  const int k2 = modulus.symbols();
  std::vector<std::vector<CMatrix>> e(static_cast<std::size_t>(k2));
  std::vector<CMatrix> diagonal;
  for (int i = 1; i <= k2; ++i) {
    std::vector<int> codes(static_cast<std::size_t>(indices.size()), 0);
    codes[static_cast<std::size_t>(site)] = i;
    diagonal.push_back(coatom_projection(MclElement::from_codes(modulus, codes)));
  }
  for (int i = 1; i <= k2; ++i) {
    auto& row = e[static_cast<std::size_t>(i - 1)];
    row.reserve(static_cast<std::size_t>(k2));
    for (int j = 1; j <= k2; ++j) {
      if (i == j) {
        row.push_back(diagonal[static_cast<std::size_t>(i - 1)]);
      } else {
        const Perm swap = Perm::transposition(k2, i - 1, j - 1);
        row.push_back(diagonal[static_cast<std::size_t>(i - 1)] *
                      site_perm_matrix(swap, site, modulus, indices));
      }
    }
  }
  return e;
}

Perm power_relabeling(Modulus modulus) {
  const auto root = primitive_root(modulus);
  if (!root || euler_phi(modulus.n()) != modulus.symbols()) {
    throw std::invalid_argument(
        "power_relabeling: needs a cyclic unit group covering all nonzero residues "
        "(prime modulus)");
  }
  const int g = root->value();
  std::vector<int> img(static_cast<std::size_t>(modulus.symbols()));
  long long power = 1;
  for (int j = 0; j < modulus.symbols(); ++j) {
    img[static_cast<std::size_t>(j)] = static_cast<int>(power) - 1;
    power = (power * g) % modulus.n();
  }
  return Perm(std::move(img));
}

SpanBasis::SpanBasis(int ambient_dim, std::vector<CMatrix> basis)
    : ambient_(ambient_dim), basis_(std::move(basis)) {
  for (const CMatrix& b : basis_) {
    if (b.rows() != ambient_ || b.cols() != ambient_) {
      throw std::invalid_argument("SpanBasis: basis matrix has wrong shape");
    }
  }
}

namespace {

// Working state of the closure: each basis element kept both as a matrix (for
// products) and flattened (for fast Gram-Schmidt sweeps).
struct ClosureBasis {
  std::vector<CMatrix> mats;
  std::vector<Eigen::VectorXcd> vecs;

  // Modified Gram-Schmidt append: orthogonalizes candidate against the basis
  // in order, keeps it (normalized) when the residual clears the threshold.
  bool append(const CMatrix& candidate, double threshold) {
    Eigen::VectorXcd v =
        Eigen::Map<const Eigen::VectorXcd>(candidate.data(), candidate.size());
    for (const auto& b : vecs) {
      v -= b.dot(v) * b;
    }
    const double norm = v.norm();
    if (norm < threshold) return false;
    v /= norm;
    vecs.push_back(v);
    mats.emplace_back(
        Eigen::Map<const CMatrix>(v.data(), candidate.rows(), candidate.cols()));
    return true;
  }
};

}  // namespace

SpanBasis span_closure(const std::vector<CMatrix>& gens, Tolerance tol) {
  if (gens.empty()) {
    throw std::invalid_argument("span_closure: no generators");
  }
  const Eigen::Index n = gens.front().rows();
  for (const CMatrix& g : gens) {
    if (g.rows() != n || g.cols() != n) {
      throw std::invalid_argument("span_closure: generators must be square, same size");
    }
  }
  const std::uint64_t max_dim = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  if (max_dim > 100'000) {
    throw budget_error("span_closure: ambient dimension exceeds basis budget");
  }
  const double threshold = tol.eps() * static_cast<double>(n);

  ClosureBasis basis;
  basis.append(CMatrix::Identity(n, n), threshold);
  for (const CMatrix& g : gens) basis.append(g, threshold);
  for (const CMatrix& g : gens) basis.append(g.adjoint(), threshold);

  // Fixpoint over pairwise products; each ordered pair is probed once. Once
  // the basis spans all of M_n, later probes cannot add anything.
  std::size_t processed = 0;
  while (processed < basis.mats.size() && basis.mats.size() < max_dim) {
    const std::size_t frontier = basis.mats.size();
    for (std::size_t i = 0; i < frontier && basis.mats.size() < max_dim; ++i) {
      const std::size_t j_begin = (i < processed) ? processed : 0;
      for (std::size_t j = j_begin; j < frontier && basis.mats.size() < max_dim; ++j) {
        basis.append(basis.mats[i] * basis.mats[j], threshold);
      }
    }
    for (std::size_t i = processed; i < frontier && basis.mats.size() < max_dim; ++i) {
      basis.append(basis.mats[i].adjoint(), threshold);
    }
    processed = frontier;
  }
  return SpanBasis(static_cast<int>(n), std::move(basis.mats));
}

bool algebra_contains(const SpanBasis& basis, const CMatrix& m, Tolerance tol) {
  if (m.rows() != basis.ambient_dim() || m.cols() != basis.ambient_dim()) {
    throw std::invalid_argument("algebra_contains: shape mismatch");
  }
  const double scale = m.norm();
  if (scale == 0.0) return true;
  CMatrix residual = m;
  for (const CMatrix& b : basis.basis()) {
    residual -= frobenius_inner(b, residual) * b;
  }
  return residual.norm() < tol.eps() * scale;
}

int commutant_dimension(const std::vector<CMatrix>& gens, Tolerance tol) {
  if (gens.empty()) {
    throw std::invalid_argument("commutant_dimension: no generators");
  }
  const Eigen::Index n = gens.front().rows();
  if (n > kCommutantDimCap) {
    throw budget_error("commutant_dimension: ambient dimension exceeds cap");
  }
  const Eigen::Index n2 = n * n;
  // Y commutes with g iff (g^T (x) I - I (x) g) vec(Y) = 0 (column-major vec).
  // Accumulate the Gram matrix of the stacked map; its kernel is the commutant.
  CMatrix gram = CMatrix::Zero(n2, n2);
  const CMatrix eye = CMatrix::Identity(n, n);
  for (const CMatrix& g : gens) {
    if (g.rows() != n || g.cols() != n) {
      throw std::invalid_argument("commutant_dimension: generators must share one shape");
    }
    const CMatrix map = kron(g.transpose(), eye) - kron(eye, g);
    gram += map.adjoint() * map;
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(gram);
  const auto& eigenvalues = solver.eigenvalues();
  const double cutoff = tol.eps() * std::max(1.0, eigenvalues.maxCoeff());
  int dim = 0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    if (eigenvalues(i) < cutoff) ++dim;
  }
  return dim;
}

CMatrix projection_meet(const CMatrix& p, const CMatrix& q) {
  constexpr double kProjectionTol = 1e-9;
  constexpr double kEigenvalueWindow = 1e-6;
  if (p.rows() != q.rows() || p.cols() != q.cols() || p.rows() != p.cols()) {
    throw std::invalid_argument("projection_meet: shape mismatch");
  }
  const double scale = std::max(1.0, std::max(p.norm(), q.norm()));
  if (!is_projection(p, kProjectionTol * scale) || !is_projection(q, kProjectionTol * scale)) {
    throw std::invalid_argument("projection_meet: operands must be Hermitian idempotents");
  }
  CMatrix pqp = p * q * p;
  pqp = 0.5 * (pqp + CMatrix(pqp.adjoint()));  // symmetrize roundoff
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(pqp);
  CMatrix out = CMatrix::Zero(p.rows(), p.cols());
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    if (std::abs(solver.eigenvalues()(i) - 1.0) < kEigenvalueWindow) {
      const auto v = solver.eigenvectors().col(i);
      out += v * v.adjoint();
    }
  }
  return out;
}

}  // namespace mcl
