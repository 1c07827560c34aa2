#include "mcl/perm.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace mcl {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int m = degree();
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (int x : images_) {
    if (x < 0 || x >= m || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("Perm: image table is not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Perm Perm::identity(int degree) {
  if (degree < 0) throw std::invalid_argument("Perm: negative degree");
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::transposition(int degree, int a, int b) {
  if (a < 0 || b < 0 || a >= degree || b >= degree) {
    throw std::invalid_argument("Perm: transposition point out of range");
  }
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::swap(img[static_cast<std::size_t>(a)], img[static_cast<std::size_t>(b)]);
  return Perm(std::move(img));
}

Perm Perm::from_cycle(int degree, const std::vector<int>& points) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  if (points.empty()) return Perm(std::move(img));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int from = points[i];
    const int to = points[(i + 1) % points.size()];
    if (from < 0 || from >= degree) {
      throw std::invalid_argument("Perm: cycle point out of range");
    }
    img[static_cast<std::size_t>(from)] = to;
  }
  return Perm(std::move(img));  // validates the cycle had no repeats
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) {
    throw std::invalid_argument("Perm: composing permutations of different degree");
  }
  std::vector<int> img(images_.size());
  for (std::size_t x = 0; x < img.size(); ++x) {
    img[x] = images_[static_cast<std::size_t>(rhs.images_[x])];
  }
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    img[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

bool Perm::commutes_with(const Perm& other) const {
  if (degree() != other.degree()) {
    throw std::invalid_argument("Perm: degree mismatch");
  }
  for (int x = 0; x < degree(); ++x) {
    if ((*this)(other(x)) != other((*this)(x))) return false;
  }
  return true;
}

int CycleType::total() const {
  int t = 0;
  for (const auto& [len, count] : counts) t += len * count;
  return t;
}

CycleType cycle_type(const Perm& p) {
  CycleType t;
  for (const auto& cyc : cycles(p)) {
    t.counts[static_cast<int>(cyc.size())] += 1;
  }
  return t;
}

std::vector<std::vector<int>> cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  for (int s = 0; s < p.degree(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> cyc;
    int x = s;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      cyc.push_back(x);
      x = p(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace mcl
