#include "mcl/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mcl/errors.hpp"

namespace mcl {

namespace {

void require_same_shape(const MclElement& m, const MclElement& n) {
  if (m.modulus() != n.modulus() || m.indices() != n.indices()) {
    throw std::invalid_argument("lattice: operands have different modulus or index set");
  }
}

void require_not_bottom(const MclElement& m, const char* op) {
  if (m.is_bottom()) {
    throw std::invalid_argument(std::string(op) + ": bottom operand");
  }
}

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

IndexSet::IndexSet(int size) : size_(size) {
  if (size < 1) throw std::invalid_argument("IndexSet: size must be >= 1");
}

Entry Entry::value(int v) {
  if (v < 1) throw std::invalid_argument("Entry: residue value must be >= 1");
  return Entry(v);
}

MclElement::MclElement(Modulus modulus, std::vector<Entry> entries)
    : modulus_(modulus), entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("MclElement: empty index set");
  for (const Entry& e : entries_) {
    if (!e.is_x() && e.value() > modulus.symbols()) {
      throw std::invalid_argument("MclElement: entry value exceeds 2k");
    }
  }
}

MclElement::MclElement(Modulus modulus, int size)
    : modulus_(modulus),
      entries_(static_cast<std::size_t>(size), Entry::x()),
      bottom_(true) {}

MclElement MclElement::bottom(Modulus modulus, IndexSet indices) {
  return MclElement(modulus, indices.size());
}

MclElement MclElement::top(Modulus modulus, IndexSet indices) {
  return MclElement(modulus, std::vector<Entry>(static_cast<std::size_t>(indices.size()),
                                                Entry::x()));
}

MclElement MclElement::from_codes(Modulus modulus, const std::vector<int>& codes) {
  std::vector<Entry> entries;
  entries.reserve(codes.size());
  for (int c : codes) {
    entries.push_back(c == 0 ? Entry::x() : Entry::value(c));
  }
  return MclElement(modulus, std::move(entries));
}

std::vector<int> MclElement::x_support() const {
  std::vector<int> out;
  for (int i = 0; i < indices(); ++i) {
    if (entries_[static_cast<std::size_t>(i)].is_x()) out.push_back(i);
  }
  return out;
}

std::vector<int> MclElement::gamma() const {
  std::vector<int> out(entries_.size(), 0);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].is_x()) out[i] = entries_[i].value();
  }
  return out;
}

bool MclElement::is_top() const {
  if (bottom_) return false;
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.is_x(); });
}

bool MclElement::is_atom() const {
  if (bottom_) return false;
  return std::none_of(entries_.begin(), entries_.end(),
                      [](const Entry& e) { return e.is_x(); });
}

bool MclElement::is_coatom() const {
  if (bottom_) return false;
  int specified = 0;
  for (const Entry& e : entries_) {
    if (!e.is_x()) ++specified;
  }
  return specified == 1;
}

bool leq(const MclElement& m, const MclElement& n) {
  require_same_shape(m, n);
  if (m.is_bottom()) return true;
  if (n.is_bottom()) return false;
  for (int i = 0; i < m.indices(); ++i) {
    const Entry a = m.entry(i);
    const Entry b = n.entry(i);
    if (b.is_x()) continue;
    if (a.is_x() || a.value() != b.value()) return false;  // covers sigma containment
  }
  return true;
}

MclElement meet(const MclElement& m, const MclElement& n) {
  require_same_shape(m, n);
  if (m.is_bottom() || n.is_bottom()) {
    return MclElement::bottom(m.modulus(), IndexSet(m.indices()));
  }
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>(m.indices()));
  for (int i = 0; i < m.indices(); ++i) {
    const Entry a = m.entry(i);
    const Entry b = n.entry(i);
    if (a.is_x()) {
      out.push_back(b);
    } else if (b.is_x() || b.value() == a.value()) {
      out.push_back(a);
    } else {
      return MclElement::bottom(m.modulus(), IndexSet(m.indices()));
    }
  }
  return MclElement(m.modulus(), std::move(out));
}

MclElement join(const MclElement& m, const MclElement& n) {
  require_same_shape(m, n);
  if (m.is_bottom()) return n;
  if (n.is_bottom()) return m;
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>(m.indices()));
  for (int i = 0; i < m.indices(); ++i) {
    const Entry a = m.entry(i);
    const Entry b = n.entry(i);
    if (!a.is_x() && !b.is_x() && a.value() == b.value()) {
      out.push_back(a);
    } else {
      out.push_back(Entry::x());
    }
  }
  return MclElement(m.modulus(), std::move(out));
}

std::vector<MclElement> atoms(Modulus modulus, IndexSet indices, std::uint64_t budget) {
  const int k2 = modulus.symbols();
  const std::uint64_t count =
      checked_pow(static_cast<std::uint64_t>(k2), indices.size(), budget);
  if (count > budget) {
    throw budget_error("atoms: (2k)^|I| exceeds enumeration budget");
  }
  std::vector<MclElement> out;
  out.reserve(count);
  std::vector<int> codes(static_cast<std::size_t>(indices.size()), 1);
  while (true) {
    out.push_back(MclElement::from_codes(modulus, codes));
    int i = indices.size() - 1;
    while (i >= 0 && codes[static_cast<std::size_t>(i)] == k2) {
      codes[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++codes[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<MclElement> coatoms(Modulus modulus, IndexSet indices) {
  std::vector<MclElement> out;
  out.reserve(static_cast<std::size_t>(modulus.symbols()) *
              static_cast<std::size_t>(indices.size()));
  for (int i = 0; i < indices.size(); ++i) {
    for (int v = 1; v <= modulus.symbols(); ++v) {
      std::vector<int> codes(static_cast<std::size_t>(indices.size()), 0);
      codes[static_cast<std::size_t>(i)] = v;
      out.push_back(MclElement::from_codes(modulus, codes));
    }
  }
  return out;
}

std::vector<MclElement> enumerate_elements(Modulus modulus, IndexSet indices,
                                           bool include_bottom, std::uint64_t budget) {
  const std::uint64_t count = checked_pow(static_cast<std::uint64_t>(modulus.n()),
                                          indices.size(), budget);
  if (count > budget) {
    throw budget_error("enumerate_elements: (2k+1)^|I| exceeds enumeration budget");
  }
  std::vector<MclElement> out;
  out.reserve(count + (include_bottom ? 1 : 0));
  if (include_bottom) out.push_back(MclElement::bottom(modulus, indices));
  std::vector<int> codes(static_cast<std::size_t>(indices.size()), 0);
  while (true) {
    out.push_back(MclElement::from_codes(modulus, codes));
    int i = indices.size() - 1;
    while (i >= 0 && codes[static_cast<std::size_t>(i)] == modulus.symbols()) {
      codes[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++codes[static_cast<std::size_t>(i)];
  }
  return out;
}

MclElement scalar_mul(const Residue& unit, const MclElement& m) {
  require_not_bottom(m, "scalar_mul");
  if (unit.modulus() != m.modulus()) {
    throw std::invalid_argument("scalar_mul: modulus mismatch");
  }
  if (!unit.is_unit()) {
    throw std::invalid_argument("scalar_mul: scalar is not a unit");
  }
  const int n = m.modulus().n();
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>(m.indices()));
  for (int i = 0; i < m.indices(); ++i) {
    const Entry e = m.entry(i);
    if (e.is_x()) {
      out.push_back(e);
    } else {
      out.push_back(Entry::value((unit.value() * e.value()) % n));
    }
  }
  return MclElement(m.modulus(), std::move(out));
}

MclElement delta(const MclElement& b, const MclElement& a) {
  require_not_bottom(b, "delta");
  require_not_bottom(a, "delta");
  if (!leq(a, b)) {
    throw std::invalid_argument("delta: requires a <= b");
  }
  const int n = b.modulus().n();
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>(b.indices()));
  for (int i = 0; i < b.indices(); ++i) {
    const Entry eb = b.entry(i);
    const Entry ea = a.entry(i);
    if (!eb.is_x()) {
      out.push_back(eb);  // a agrees here since a <= b
    } else if (!ea.is_x()) {
      out.push_back(Entry::value(n - ea.value()));  // multiply by 2k = -1
    } else {
      out.push_back(Entry::x());
    }
  }
  return MclElement(b.modulus(), std::move(out));
}

MclElement implies(const MclElement& b, const MclElement& a) {
  require_not_bottom(b, "implies");
  require_not_bottom(a, "implies");
  require_same_shape(b, a);
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>(b.indices()));
  for (int i = 0; i < b.indices(); ++i) {
    if (!a.entry(i).is_x() && b.entry(i).is_x()) {
      out.push_back(a.entry(i));
    } else {
      out.push_back(Entry::x());
    }
  }
  return MclElement(b.modulus(), std::move(out));
}

std::vector<MclElement> atoms_below(const MclElement& m, std::uint64_t budget) {
  require_not_bottom(m, "atoms_below");
  const std::vector<int> free = m.x_support();
  const int k2 = m.modulus().symbols();
  const std::uint64_t count =
      checked_pow(static_cast<std::uint64_t>(k2), static_cast<int>(free.size()), budget);
  if (count > budget) {
    throw budget_error("atoms_below: free-coordinate count exceeds budget");
  }
  std::vector<MclElement> out;
  out.reserve(count);
  std::vector<int> codes = m.gamma();
  for (int i : free) codes[static_cast<std::size_t>(i)] = 1;
  while (true) {
    out.push_back(MclElement::from_codes(m.modulus(), codes));
    int j = static_cast<int>(free.size()) - 1;
    while (j >= 0 && codes[static_cast<std::size_t>(free[static_cast<std::size_t>(j)])] == k2) {
      codes[static_cast<std::size_t>(free[static_cast<std::size_t>(j)])] = 1;
      --j;
    }
    if (j < 0) break;
    ++codes[static_cast<std::size_t>(free[static_cast<std::size_t>(j)])];
  }
  return out;
}

std::vector<MclElement> coatoms_above(const MclElement& m) {
  require_not_bottom(m, "coatoms_above");
  std::vector<MclElement> out;
  for (int i = 0; i < m.indices(); ++i) {
    if (m.entry(i).is_x()) continue;
    std::vector<int> codes(static_cast<std::size_t>(m.indices()), 0);
    codes[static_cast<std::size_t>(i)] = m.entry(i).value();
    out.push_back(MclElement::from_codes(m.modulus(), codes));
  }
  return out;
}

MclElement project(const MclElement& m, const std::vector<int>& J) {
  require_not_bottom(m, "project");
  std::vector<Entry> out(m.entries());
  for (int i : J) {
    if (i < 0 || i >= m.indices()) {
      throw std::invalid_argument("project: index out of range");
    }
    out[static_cast<std::size_t>(i)] = Entry::x();
  }
  return MclElement(m.modulus(), std::move(out));
}

SignedSupport signed_support(const MclElement& m) {
  require_not_bottom(m, "signed_support");
  if (m.modulus().n() != 3) {
    throw std::invalid_argument("signed_support: defined for modulus 3 only");
  }
  SignedSupport s;
  for (int i = 0; i < m.indices(); ++i) {
    const Entry e = m.entry(i);
    if (e.is_x()) continue;
    (e.value() == 1 ? s.plus : s.minus).push_back(i);
  }
  return s;
}

int atom_rank(const MclElement& atom) {
  if (!atom.is_atom()) {
    throw std::invalid_argument("atom_rank: element is not an atom");
  }
  const int k2 = atom.modulus().symbols();
  long long r = 0;
  for (int i = 0; i < atom.indices(); ++i) {
    r = r * k2 + (atom.entry(i).value() - 1);
  }
  return static_cast<int>(r);
}

MclElement atom_unrank(Modulus modulus, IndexSet indices, int rank) {
  const int k2 = modulus.symbols();
  std::vector<int> codes(static_cast<std::size_t>(indices.size()), 0);
  int r = rank;
  for (int i = indices.size() - 1; i >= 0; --i) {
    codes[static_cast<std::size_t>(i)] = r % k2 + 1;
    r /= k2;
  }
  if (r != 0) throw std::invalid_argument("atom_unrank: rank out of range");
  return MclElement::from_codes(modulus, codes);
}

}  // namespace mcl
