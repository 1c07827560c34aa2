#pragma once

#include <optional>
#include <vector>

#include "mcl/perm.hpp"

namespace mcl {

/// The size 2k+1 of the base ring Z_{2k+1}. Always odd and at least 3.
class Modulus {
public:
  explicit Modulus(int n);

  int n() const { return n_; }
  /// Number of nonzero residues, 2k. Doubles as the symbol count for the
  /// permutation action and the local matrix dimension.
  int symbols() const { return n_ - 1; }
  bool prime() const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

private:
  int n_;
};

/// A canonical residue in [0, n): structural equality is ring equality.
class Residue {
public:
  Residue(long long value, Modulus modulus);

  int value() const { return value_; }
  Modulus modulus() const { return modulus_; }
  bool is_unit() const;

  Residue operator*(const Residue& rhs) const;
  Residue operator+(const Residue& rhs) const;
  Residue operator-() const;

  friend bool operator==(const Residue&, const Residue&) = default;

private:
  int value_;
  Modulus modulus_;
};

bool is_prime(int n);
int euler_phi(int n);

/// The units of Z_n in ascending order; size euler_phi(n).
std::vector<Residue> units(Modulus n);

/// The permutation of the symbols {0, ..., 2k-1} induced by multiplication
/// by the unit u on the nonzero residues, under symbol a-1 <-> residue a.
/// Throws std::invalid_argument if u is not a unit.
Perm unit_perm(const Residue& u);

/// unit_perm for every unit, in ascending unit order. Closed under
/// composition; the image of Aut(Z_n) inside S_{2k}.
std::vector<Perm> unit_group_perms(Modulus n);

/// Smallest generator of the unit group when that group is cyclic
/// (primes, odd prime powers); nullopt otherwise.
std::optional<Residue> primitive_root(Modulus n);

}  // namespace mcl
