#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace mcl {

/// A permutation of the symbols {0, ..., degree-1}, stored as its image table.
///
/// Composition follows function application: (p * q)(x) = p(q(x)).
class Perm {
public:
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);
  static Perm transposition(int degree, int a, int b);
  /// The cycle sending points[0] -> points[1] -> ... -> points.back() -> points[0],
  /// fixing everything else.
  static Perm from_cycle(int degree, const std::vector<int>& points);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;
  bool commutes_with(const Perm& other) const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<int> images_;
};

/// Multiset of cycle lengths of a permutation: counts[j] = number of j-cycles.
struct CycleType {
  std::map<int, int> counts;

  /// Sum of j * counts[j]; equals the degree of the originating permutation.
  int total() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Perm& p);

/// Disjoint cycles of p (including fixed points as 1-cycles), each cycle
/// starting at its smallest point, cycles ordered by that point.
std::vector<std::vector<int>> cycles(const Perm& p);

}  // namespace mcl
