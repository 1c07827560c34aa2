#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcl/lattice.hpp"
#include "mcl/perm.hpp"

namespace mcl {

inline constexpr std::size_t kDefaultGroupBudget = 100'000;

/// A finitely generated permutation group. Element enumeration is explicit
/// and cached; generator-only queries (orbits) never enumerate.
class PermGroup {
public:
  static PermGroup from_generators(std::vector<Perm> generators);
  /// Wraps an already-complete element list (no closure recomputation).
  static PermGroup from_enumerated(std::vector<Perm> elements);
  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  /// Breadth-first closure of the generators, deterministic order (identity
  /// first). Throws budget_error if the group is larger than the budget.
  const std::vector<Perm>& elements(std::size_t budget = kDefaultGroupBudget) const;
  std::size_t order(std::size_t budget = kDefaultGroupBudget) const;
  bool contains(const Perm& p, std::size_t budget = kDefaultGroupBudget) const;

private:
  explicit PermGroup(std::vector<Perm> generators, int degree);
  std::vector<Perm> generators_;
  int degree_ = 0;
  mutable std::optional<std::vector<Perm>> elements_;
};

/// Orbit partition of {0..degree-1} under the group generated by gens.
/// Orbits are sorted internally and by smallest point.
std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int degree);
bool is_transitive(const std::vector<Perm>& gens, int degree);

/// Brute-force centralizer of a set of permutations inside S_degree.
/// Scans all degree! permutations; refuses degree > 9.
PermGroup centralizer_in_sym(const std::vector<Perm>& gens, int degree);

/// |C_{S_m}(sigma)| for sigma of the given cycle type: product over cycle
/// lengths j of j^{N_j} * N_j!.
std::uint64_t centralizer_order(const CycleType& type);

/// Generators of C_{S_{2k}}(Aut(Z_n)) for any odd modulus, built from the
/// orbit structure of the unit-multiplication action: unit translations on
/// each orbit, plus equivariant swaps of orbits with equal stabilizers.
/// Agrees with centralizer_in_sym wherever the latter is feasible.
std::vector<Perm> unit_centralizer_generators(Modulus n);

/// |C|^{|I|} * |I|!, the order of C wr S_I. Throws std::overflow_error when
/// the product leaves uint64 range.
std::uint64_t wreath_order(std::uint64_t base_order, IndexSet indices);

/// An element of C wr S_I acting on lattice elements: one base permutation of
/// the 2k symbols per index, permuted across indices by the top permutation.
///
/// Composition: (b, t) * (b', t') = (i -> b[t'(i)] * b'[i], t * t'), matching
/// apply(w1 * w2, m) == apply(w1, apply(w2, m)).
class WreathElement {
public:
  WreathElement(std::vector<Perm> base, Perm top);
  static WreathElement identity(int symbols, IndexSet indices);

  const std::vector<Perm>& base() const { return base_; }
  const Perm& top() const { return top_; }
  int symbols() const { return base_.empty() ? 0 : base_.front().degree(); }
  int indices() const { return top_.degree(); }

  WreathElement operator*(const WreathElement& rhs) const;
  WreathElement inverse() const;

  /// Image of a lattice element: the entry at index i lands at index top(i),
  /// with base[i] applied to its symbol; X stays X.
  MclElement apply(const MclElement& m) const;

  /// The induced permutation of atoms, indexed by atom_rank.
  Perm atom_action(Modulus modulus, IndexSet indices) const;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;

private:
  std::vector<Perm> base_;
  Perm top_;
};

/// Generators of Aut(M) as wreath elements: the symbol-centralizer generators
/// embedded at each index, plus adjacent index transpositions.
std::vector<WreathElement> aut_generators(Modulus modulus, IndexSet indices);

/// The group of atom permutations generated by the given wreath elements.
PermGroup atom_action_group(const std::vector<WreathElement>& gens, Modulus modulus,
                            IndexSet indices, std::size_t budget = kDefaultGroupBudget);

/// Center of the generated atom-action group, as atom permutations.
PermGroup action_center(const std::vector<WreathElement>& gens, Modulus modulus,
                        IndexSet indices, std::size_t budget = kDefaultGroupBudget);

/// The atom permutation of global multiplication by a unit (the diagonal
/// wreath element with that unit's symbol action at every index).
Perm global_unit_action(const Residue& u, IndexSet indices);

}  // namespace mcl
