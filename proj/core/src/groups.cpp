#include "mcl/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "mcl/errors.hpp"

namespace mcl {

PermGroup::PermGroup(std::vector<Perm> generators, int degree)
    : generators_(std::move(generators)), degree_(degree) {}

PermGroup PermGroup::from_generators(std::vector<Perm> generators) {
  if (generators.empty()) {
    throw std::invalid_argument("PermGroup: need at least one generator (or use trivial)");
  }
  const int deg = generators.front().degree();
  for (const Perm& g : generators) {
    if (g.degree() != deg) {
      throw std::invalid_argument("PermGroup: generators of mixed degree");
    }
  }
  return PermGroup(std::move(generators), deg);
}

PermGroup PermGroup::from_enumerated(std::vector<Perm> elements) {
  PermGroup group = from_generators(elements);
  group.elements_ = std::move(elements);
  return group;
}

PermGroup PermGroup::trivial(int degree) {
  return PermGroup({Perm::identity(degree)}, degree);
}

const std::vector<Perm>& PermGroup::elements(std::size_t budget) const {
  if (elements_) return *elements_;
  std::vector<Perm> out;
  std::set<Perm> seen;
  const Perm ident = Perm::identity(degree_);
  out.push_back(ident);
  seen.insert(ident);
  // breadth-first closure keeps the enumeration order deterministic
  std::size_t frontier_begin = 0;
  while (frontier_begin < out.size()) {
    const std::size_t frontier_end = out.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const Perm& g : generators_) {
        Perm next = g * out[i];
        if (seen.insert(next).second) {
          if (out.size() >= budget) {
            throw budget_error("PermGroup: element budget exceeded");
          }
          out.push_back(std::move(next));
        }
      }
    }
    frontier_begin = frontier_end;
  }
  elements_ = std::move(out);
  return *elements_;
}

std::size_t PermGroup::order(std::size_t budget) const { return elements(budget).size(); }

bool PermGroup::contains(const Perm& p, std::size_t budget) const {
  const auto& elems = elements(budget);
  return std::find(elems.begin(), elems.end(), p) != elems.end();
}

std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int degree) {
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < degree; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> orbit{s};
    seen[static_cast<std::size_t>(s)] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const Perm& g : gens) {
        const int y = g(orbit[head]);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(const std::vector<Perm>& gens, int degree) {
  return orbits(gens, degree).size() == 1;
}

PermGroup centralizer_in_sym(const std::vector<Perm>& gens, int degree) {
  if (degree > 9) {
    throw budget_error("centralizer_in_sym: brute force limited to degree <= 9");
  }
  for (const Perm& g : gens) {
    if (g.degree() != degree) {
      throw std::invalid_argument("centralizer_in_sym: generator degree mismatch");
    }
  }
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> found;
  do {
    Perm p{std::vector<int>(img)};
    if (std::all_of(gens.begin(), gens.end(),
                    [&](const Perm& g) { return p.commutes_with(g); })) {
      found.push_back(std::move(p));
    }
  } while (std::next_permutation(img.begin(), img.end()));
  return PermGroup::from_enumerated(std::move(found));
}

std::uint64_t centralizer_order(const CycleType& type) {
  std::uint64_t order = 1;
  for (const auto& [len, count] : type.counts) {
    for (int i = 0; i < count; ++i) {
      order *= static_cast<std::uint64_t>(len);
    }
    for (int i = 2; i <= count; ++i) {
      order *= static_cast<std::uint64_t>(i);
    }
  }
  return order;
}

std::vector<Perm> unit_centralizer_generators(Modulus n) {
  const std::vector<Perm> action = unit_group_perms(n);
  const int degree = n.symbols();
  const auto orbs = orbits(action, degree);

  // stabilizer of a symbol inside the unit group, as a sorted unit-value list
  auto stabilizer = [&](int symbol) {
    std::vector<int> st;
    const int a = symbol + 1;
    for (const Residue& u : units(n)) {
      if ((u.value() * a) % n.n() == a) st.push_back(u.value());
    }
    return st;
  };

  std::vector<Perm> gens;
  // unit translations restricted to a single orbit
  for (const auto& orbit : orbs) {
    for (const Residue& u : units(n)) {
      std::vector<int> img(static_cast<std::size_t>(degree));
      std::iota(img.begin(), img.end(), 0);
      for (int s : orbit) {
        img[static_cast<std::size_t>(s)] = (u.value() * (s + 1)) % n.n() - 1;
      }
      Perm p{std::move(img)};
      if (!p.is_identity()) gens.push_back(std::move(p));
    }
  }
  // equivariant swaps between orbits with equal stabilizers
  std::map<std::vector<int>, std::vector<std::vector<int>>> by_stab;
  for (const auto& orbit : orbs) {
    by_stab[stabilizer(orbit.front())].push_back(orbit);
  }
  for (const auto& [stab, matched] : by_stab) {
    for (std::size_t t = 0; t + 1 < matched.size(); ++t) {
      const int a1 = matched[t].front() + 1;
      const int a2 = matched[t + 1].front() + 1;
      std::vector<int> img(static_cast<std::size_t>(degree));
      std::iota(img.begin(), img.end(), 0);
      for (const Residue& u : units(n)) {
        const int s1 = (u.value() * a1) % n.n() - 1;
        const int s2 = (u.value() * a2) % n.n() - 1;
        img[static_cast<std::size_t>(s1)] = s2;
        img[static_cast<std::size_t>(s2)] = s1;
      }
      gens.emplace_back(std::move(img));
    }
  }
  if (gens.empty()) gens.push_back(Perm::identity(degree));
  return gens;
}

std::uint64_t wreath_order(std::uint64_t base_order, IndexSet indices) {
  std::uint64_t order = 1;
  auto mul = [&order](std::uint64_t f) {
    if (f != 0 && order > UINT64_MAX / f) {
      throw std::overflow_error("wreath_order: overflow");
    }
    order *= f;
  };
  for (int i = 0; i < indices.size(); ++i) mul(base_order);
  for (int i = 2; i <= indices.size(); ++i) mul(static_cast<std::uint64_t>(i));
  return order;
}

WreathElement::WreathElement(std::vector<Perm> base, Perm top)
    : base_(std::move(base)), top_(std::move(top)) {
  if (base_.size() != static_cast<std::size_t>(top_.degree())) {
    throw std::invalid_argument("WreathElement: base length must equal top degree");
  }
  for (const Perm& b : base_) {
    if (b.degree() != base_.front().degree()) {
      throw std::invalid_argument("WreathElement: base permutations of mixed degree");
    }
  }
}

WreathElement WreathElement::identity(int symbols, IndexSet indices) {
  return WreathElement(
      std::vector<Perm>(static_cast<std::size_t>(indices.size()), Perm::identity(symbols)),
      Perm::identity(indices.size()));
}

WreathElement WreathElement::operator*(const WreathElement& rhs) const {
  if (symbols() != rhs.symbols() || indices() != rhs.indices()) {
    throw std::invalid_argument("WreathElement: shape mismatch");
  }
  std::vector<Perm> base;
  base.reserve(base_.size());
  for (int i = 0; i < indices(); ++i) {
    base.push_back(base_[static_cast<std::size_t>(rhs.top_(i))] *
                   rhs.base_[static_cast<std::size_t>(i)]);
  }
  return WreathElement(std::move(base), top_ * rhs.top_);
}

WreathElement WreathElement::inverse() const {
  const Perm top_inv = top_.inverse();
  std::vector<Perm> base;
  base.reserve(base_.size());
  for (int i = 0; i < indices(); ++i) {
    base.push_back(base_[static_cast<std::size_t>(top_inv(i))].inverse());
  }
  return WreathElement(std::move(base), top_inv);
}

MclElement WreathElement::apply(const MclElement& m) const {
  if (m.is_bottom()) {
    throw std::invalid_argument("WreathElement::apply: bottom operand");
  }
  if (m.indices() != indices() || m.modulus().symbols() != symbols()) {
    throw std::invalid_argument("WreathElement::apply: shape mismatch");
  }
  std::vector<Entry> out(static_cast<std::size_t>(m.indices()), Entry::x());
  for (int i = 0; i < m.indices(); ++i) {
    const Entry e = m.entry(i);
    if (e.is_x()) continue;
    const int symbol = base_[static_cast<std::size_t>(i)](e.value() - 1);
    out[static_cast<std::size_t>(top_(i))] = Entry::value(symbol + 1);
  }
  return MclElement(m.modulus(), std::move(out));
}

Perm WreathElement::atom_action(Modulus modulus, IndexSet indices) const {
  if (modulus.symbols() != symbols() || indices.size() != this->indices()) {
    throw std::invalid_argument("WreathElement::atom_action: shape mismatch");
  }
  std::uint64_t count = 1;
  for (int i = 0; i < indices.size(); ++i) {
    count *= static_cast<std::uint64_t>(modulus.symbols());
  }
  std::vector<int> img(count);
  for (std::uint64_t r = 0; r < count; ++r) {
    const MclElement atom = atom_unrank(modulus, indices, static_cast<int>(r));
    img[r] = atom_rank(apply(atom));
  }
  return Perm(std::move(img));
}

std::vector<WreathElement> aut_generators(Modulus modulus, IndexSet indices) {
  const int symbols = modulus.symbols();
  const std::vector<Perm> cgens = unit_centralizer_generators(modulus);
  std::vector<WreathElement> out;
  for (int i = 0; i < indices.size(); ++i) {
    for (const Perm& c : cgens) {
      if (c.is_identity()) continue;
      std::vector<Perm> base(static_cast<std::size_t>(indices.size()),
                             Perm::identity(symbols));
      base[static_cast<std::size_t>(i)] = c;
      out.emplace_back(std::move(base), Perm::identity(indices.size()));
    }
  }
  for (int i = 0; i + 1 < indices.size(); ++i) {
    out.emplace_back(
        std::vector<Perm>(static_cast<std::size_t>(indices.size()), Perm::identity(symbols)),
        Perm::transposition(indices.size(), i, i + 1));
  }
  if (out.empty()) out.push_back(WreathElement::identity(symbols, indices));
  return out;
}

PermGroup atom_action_group(const std::vector<WreathElement>& gens, Modulus modulus,
                            IndexSet indices, std::size_t budget) {
  std::vector<Perm> perms;
  perms.reserve(gens.size());
  for (const WreathElement& w : gens) {
    perms.push_back(w.atom_action(modulus, indices));
  }
  PermGroup group = PermGroup::from_generators(std::move(perms));
  group.elements(budget);
  return group;
}

PermGroup action_center(const std::vector<WreathElement>& gens, Modulus modulus,
                        IndexSet indices, std::size_t budget) {
  const PermGroup group = atom_action_group(gens, modulus, indices, budget);
  const auto& elems = group.elements(budget);
  const auto& generators = group.generators();
  // commuting with every generator is commuting with the whole group
  std::vector<Perm> central;
  for (const Perm& z : elems) {
    if (std::all_of(generators.begin(), generators.end(),
                    [&](const Perm& g) { return z.commutes_with(g); })) {
      central.push_back(z);
    }
  }
  return PermGroup::from_enumerated(std::move(central));
}

Perm global_unit_action(const Residue& u, IndexSet indices) {
  const WreathElement w(
      std::vector<Perm>(static_cast<std::size_t>(indices.size()), unit_perm(u)),
      Perm::identity(indices.size()));
  return w.atom_action(u.modulus(), indices);
}

}  // namespace mcl
