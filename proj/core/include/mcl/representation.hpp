#pragma once

#include <vector>

#include "mcl/groups.hpp"
#include "mcl/lattice.hpp"
#include "mcl/matrix.hpp"

namespace mcl {

/// Relative tolerance for numeric rank and span decisions.
class Tolerance {
public:
  explicit Tolerance(double eps);
  double eps() const { return eps_; }

  /// 1e-9: span membership, commutant rank.
  static Tolerance spans() { return Tolerance(1e-9); }
  /// 1e-12: entrywise matrix comparisons with exact expected values.
  static Tolerance exact() { return Tolerance(1e-12); }

private:
  double eps_;
};

/// Shift matrix X_d: ones at (i, i+1 mod d). Requires d >= 2 even.
CMatrix shift_matrix(int d);
/// Clock matrix D_d = diag(w_1, ..., w_d), w_j = exp(2*pi*i*(j-1)/d).
CMatrix clock_matrix(int d);
/// Fourier matrix U_d with U(i, j) = w_j^i / sqrt(d) (0-based i, j).
/// Diagonalizes the shift: U^* X U = D.
CMatrix fourier_matrix(int d);

/// U_H = the |I|-fold Kronecker power of fourier_matrix(2k).
CMatrix fourier_tensor(Modulus modulus, IndexSet indices);

/// Basis index of an atom in the tensor representation; equals atom_rank.
int atom_basis_index(const MclElement& atom);

/// Rank-one projection onto the atom's basis vector.
CMatrix atom_projection(const MclElement& atom);

/// Kronecker product of identities with one rank-one factor at the coatom's
/// specified index. Trace (2k)^{|I|-1}.
CMatrix coatom_projection(const MclElement& coatom);

/// Permutation matrix of the wreath element's atom action; the unitary
/// representation of Aut(M) in this basis.
CMatrix wreath_matrix(const WreathElement& w, Modulus modulus, IndexSet indices);

/// I x ... x P_p x ... x I with the permutation matrix at tensor factor
/// `site`; p acts on the 2k symbols of that factor.
CMatrix site_perm_matrix(const Perm& p, int site, Modulus modulus, IndexSet indices);

/// Matrix units e_{ij} (1-based i, j in {1..2k}) at one tensor site:
/// e_ii the i-th coatom projection, e_ij = e_ii * site transposition (i j).
/// Satisfy sum e_ii = I, e_ij^* = e_ji, e_ij e_kl = delta_jk e_il.
std::vector<std::vector<CMatrix>> matrix_units(int site, Modulus modulus, IndexSet indices);

/// Relabeling of the 2k symbols by powers of the smallest primitive root:
/// position j -> symbol of g^j. Conjugating the multiplication-by-g
/// permutation by this takes it to the natural cycle j -> j+1, aligning the
/// unit action with the shift matrix. Cyclic unit groups only.
Perm power_relabeling(Modulus modulus);

/// Orthonormal (Frobenius) basis of a matrix subspace.
class SpanBasis {
public:
  SpanBasis(int ambient_dim, std::vector<CMatrix> basis);
  int ambient_dim() const { return ambient_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<CMatrix>& basis() const { return basis_; }

private:
  int ambient_;
  std::vector<CMatrix> basis_;
};

/// Smallest subspace containing the identity and the generators, closed under
/// product and adjoint: the generated unital *-subalgebra of M_n. Seeds the
/// identity, the generators and their adjoints in order, then orthonormalizes
/// pairwise products (modified Gram-Schmidt, residuals below
/// eps * ambient_dim discarded) until a fixpoint.
SpanBasis span_closure(const std::vector<CMatrix>& gens,
                       Tolerance tol = Tolerance::spans());

/// True iff m lies in the span to relative tolerance eps (zero is contained).
bool algebra_contains(const SpanBasis& basis, const CMatrix& m,
                      Tolerance tol = Tolerance::spans());

/// Dimension of {Y : Yg = gY for all generators}, via the null space of the
/// stacked commutator map on vec(Y). Ambient dimension capped at 32.
int commutant_dimension(const std::vector<CMatrix>& gens,
                        Tolerance tol = Tolerance::spans());

/// Orthogonal projection onto range(p) ∩ range(q): the eigenvalue-1 subspace
/// of pqp (|lambda - 1| < 1e-6). Inputs must be Hermitian idempotents to 1e-9.
CMatrix projection_meet(const CMatrix& p, const CMatrix& q);

}  // namespace mcl
