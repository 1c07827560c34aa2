#pragma once

#include <cstdint>
#include <vector>

#include "mcl/modring.hpp"

namespace mcl {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/// Finite index set, ordered 0 .. size-1.
class IndexSet {
public:
  explicit IndexSet(int size);
  int size() const { return size_; }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
  int size_;
};

/// One coordinate of a lattice element: either the indeterminate X or a
/// nonzero residue in {1, ..., 2k}.
class Entry {
public:
  static Entry x() { return Entry(0); }
  static Entry value(int v);

  bool is_x() const { return code_ == 0; }
  /// The residue value; only meaningful when !is_x().
  int value() const { return code_; }
  /// 0 for X, the residue value otherwise. Matches the wire encoding.
  int code() const { return code_; }

  friend bool operator==(const Entry&, const Entry&) = default;
  friend auto operator<=>(const Entry&, const Entry&) = default;

private:
  explicit Entry(int code) : code_(code) {}
  int code_;
};

/// An element of the critical multi-cubic lattice M over Z_{2k+1}: one Entry
/// per index, plus an adjoined bottom absorbing undefined meets.
///
/// Values are immutable; every operation below is pure.
class MclElement {
public:
  MclElement(Modulus modulus, std::vector<Entry> entries);

  static MclElement bottom(Modulus modulus, IndexSet indices);
  static MclElement top(Modulus modulus, IndexSet indices);
  /// Convenience factory: code 0 means X, 1..2k a residue value.
  static MclElement from_codes(Modulus modulus, const std::vector<int>& codes);

  bool is_bottom() const { return bottom_; }
  Modulus modulus() const { return modulus_; }
  int indices() const { return static_cast<int>(entries_.size()); }
  const std::vector<Entry>& entries() const { return entries_; }
  Entry entry(int i) const { return entries_[static_cast<std::size_t>(i)]; }

  /// sigma(m): the indices carrying X, ascending.
  std::vector<int> x_support() const;
  /// Gamma(m): the representative vector, with 0 at X coordinates.
  std::vector<int> gamma() const;

  bool is_top() const;
  bool is_atom() const;    // fully specified
  bool is_coatom() const;  // exactly one specified coordinate

  friend bool operator==(const MclElement&, const MclElement&) = default;

private:
  MclElement(Modulus modulus, int size);  // bottom constructor
  Modulus modulus_;
  std::vector<Entry> entries_;
  bool bottom_ = false;
};

/// Lattice order. Bottom is below everything; otherwise m <= n iff the
/// X-support of m is contained in that of n and the two agree wherever n is
/// specified. Throws std::invalid_argument on shape mismatch.
bool leq(const MclElement& m, const MclElement& n);

/// Totalized meet: bottom when some coordinate carries two distinct specified
/// values, the coordinatewise refinement otherwise.
MclElement meet(const MclElement& m, const MclElement& n);

/// Join: keeps a coordinate exactly where both operands specify the same
/// value; X elsewhere. Bottom is the join identity.
MclElement join(const MclElement& m, const MclElement& n);

/// All (2k)^{|I|} fully specified elements in lexicographic order.
/// Throws budget_error when (2k)^{|I|} exceeds the budget.
std::vector<MclElement> atoms(Modulus modulus, IndexSet indices,
                              std::uint64_t budget = kDefaultEnumerationBudget);

/// All 2k*|I| single-coordinate elements, ordered by index then value.
std::vector<MclElement> coatoms(Modulus modulus, IndexSet indices);

/// Every non-bottom element ((2k+1)^{|I|} of them), lexicographic in entry
/// codes with X first; optionally preceded by bottom.
std::vector<MclElement> enumerate_elements(Modulus modulus, IndexSet indices,
                                           bool include_bottom = false,
                                           std::uint64_t budget = kDefaultEnumerationBudget);

/// Coordinatewise multiplication of the specified entries by a unit.
MclElement scalar_mul(const Residue& unit, const MclElement& m);

/// Delta(b, a) for a <= b: negates exactly the coordinates specified in a but
/// free in b; equivalently 2*Gamma(b) - Gamma(a) on representatives.
MclElement delta(const MclElement& b, const MclElement& a);

/// Implication b -> a: keeps a's value exactly where a is specified and b is
/// free; X elsewhere.
MclElement implies(const MclElement& b, const MclElement& a);

std::vector<MclElement> atoms_below(const MclElement& m,
                                    std::uint64_t budget = kDefaultEnumerationBudget);
std::vector<MclElement> coatoms_above(const MclElement& m);

/// The coordinate projection Pi_J: entries at indices in J replaced by X.
/// The result is always >= m.
MclElement project(const MclElement& m, const std::vector<int>& J);

/// Signed-set image at modulus 3: indices holding 1 and indices holding 2
/// (which plays -1). Disjoint by construction.
struct SignedSupport {
  std::vector<int> plus;
  std::vector<int> minus;
  friend bool operator==(const SignedSupport&, const SignedSupport&) = default;
};
SignedSupport signed_support(const MclElement& m);

/// Rank of an atom in the lexicographic order used by atoms():
/// sum over i of (a_i - 1) * (2k)^{|I|-1-i}. Also the basis index of the
/// atom's vector in the tensor representation.
int atom_rank(const MclElement& atom);
MclElement atom_unrank(Modulus modulus, IndexSet indices, int rank);

}  // namespace mcl
