#include "mcl/modring.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace mcl {

Modulus::Modulus(int n) : n_(n) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("Modulus: ring size must be odd and >= 3, got " +
                                std::to_string(n));
  }
}

bool Modulus::prime() const { return is_prime(n_); }

Residue::Residue(long long value, Modulus modulus) : value_(0), modulus_(modulus) {
  const long long n = modulus.n();
  long long v = value % n;
  if (v < 0) v += n;
  value_ = static_cast<int>(v);
}

bool Residue::is_unit() const { return std::gcd(value_, modulus_.n()) == 1; }

Residue Residue::operator*(const Residue& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw std::invalid_argument("Residue: modulus mismatch");
  }
  return Residue(static_cast<long long>(value_) * rhs.value_, modulus_);
}

Residue Residue::operator+(const Residue& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw std::invalid_argument("Residue: modulus mismatch");
  }
  return Residue(static_cast<long long>(value_) + rhs.value_, modulus_);
}

Residue Residue::operator-() const { return Residue(-static_cast<long long>(value_), modulus_); }

bool is_prime(int n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (int d = 3; static_cast<long long>(d) * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  int count = 0;
  for (int a = 1; a <= n; ++a) {
    if (std::gcd(a, n) == 1) ++count;
  }
  return count;
}

std::vector<Residue> units(Modulus n) {
  std::vector<Residue> out;
  for (int a = 1; a < n.n(); ++a) {
    if (std::gcd(a, n.n()) == 1) out.emplace_back(a, n);
  }
  return out;
}

Perm unit_perm(const Residue& u) {
  if (!u.is_unit()) {
    throw std::invalid_argument("unit_perm: " + std::to_string(u.value()) +
                                " is not a unit mod " + std::to_string(u.modulus().n()));
  }
  const int n = u.modulus().n();
  std::vector<int> img(static_cast<std::size_t>(n - 1));
  for (int a = 1; a < n; ++a) {
    img[static_cast<std::size_t>(a - 1)] = (u.value() * a) % n - 1;
  }
  return Perm(std::move(img));
}

std::vector<Perm> unit_group_perms(Modulus n) {
  std::vector<Perm> out;
  for (const Residue& u : units(n)) out.push_back(unit_perm(u));
  return out;
}

namespace {

int multiplicative_order(int a, int n) {
  int ord = 1;
  long long x = a % n;
  while (x != 1) {
    x = (x * a) % n;
    ++ord;
    if (ord > n) throw std::logic_error("multiplicative_order: not a unit");
  }
  return ord;
}

}  // namespace

std::optional<Residue> primitive_root(Modulus n) {
  const int phi = euler_phi(n.n());
  for (int g = 2; g < n.n(); ++g) {
    if (std::gcd(g, n.n()) != 1) continue;
    if (multiplicative_order(g, n.n()) == phi) return Residue(g, n);
  }
  return std::nullopt;
}

}  // namespace mcl
