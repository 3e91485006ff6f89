#include "qtpieri/monomial.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace qtpieri {

namespace {

struct VarRegistry {
  std::mutex mutex;
  std::deque<std::string> names{"q", "t", "a", "b", "c", "z"};
};

VarRegistry& var_registry() {
  static VarRegistry registry;
  return registry;
}

constexpr std::uint64_t kHighBits = 0x8000'8000'8000'8000ull;

}  // namespace

Var Var::named(std::string_view name) {
  auto& reg = var_registry();
  std::lock_guard lock(reg.mutex);
  for (std::size_t i = 0; i < reg.names.size(); ++i) {
    if (reg.names[i] == name) return Var(static_cast<int>(i));
  }
  if (name.empty()) throw std::invalid_argument("empty indeterminate name");
  if (static_cast<int>(reg.names.size()) >= kMaxVars) {
    throw std::length_error("too many indeterminates (limit " + std::to_string(kMaxVars) + ")");
  }
  reg.names.emplace_back(name);
  return Var(static_cast<int>(reg.names.size() - 1));
}

const std::string& Var::name() const {
  auto& reg = var_registry();
  std::lock_guard lock(reg.mutex);
  return reg.names.at(index_);
}

int registered_var_count() {
  auto& reg = var_registry();
  std::lock_guard lock(reg.mutex);
  return static_cast<int>(reg.names.size());
}

void Monomial::set_field(int k, unsigned value) {
  auto& word = w_[2 - k / 4];
  const int shift = 16 * (k % 4);
  word &= ~(std::uint64_t{0xffff} << shift);
  word |= std::uint64_t{value} << shift;
}

Monomial Monomial::of(Var v, unsigned exponent) {
  if (exponent > kFieldLimit) throw std::overflow_error("monomial exponent out of range");
  Monomial m;
  m.set_field(v.index(), exponent);
  m.set_field(kDegField, exponent);
  return m;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (int k = 0; k < kMaxVars; ++k) {
    if (field(k) != 0) mask |= 1u << k;
  }
  return mask;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (degree() + other.degree() > kFieldLimit) {
    throw std::overflow_error("monomial degree out of range");
  }
  Monomial r;
  for (int i = 0; i < 3; ++i) r.w_[i] = w_[i] + other.w_[i];
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  // Every field is below 2^15, so setting the high bit of each field of
  // `other` and subtracting leaves it set exactly when other >= this there.
  for (int i = 0; i < 3; ++i) {
    if ((((other.w_[i] | kHighBits) - w_[i]) & kHighBits) != kHighBits) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (int i = 0; i < 3; ++i) r.w_[i] = w_[i] - divisor.w_[i];
  return r;
}

Monomial Monomial::pow(unsigned k) const {
  if (static_cast<unsigned long>(degree()) * k > kFieldLimit) {
    throw std::overflow_error("monomial degree out of range");
  }
  Monomial r;
  for (int i = 0; i < 3; ++i) r.w_[i] = w_[i] * k;
  return r;
}

Monomial Monomial::with_exponent(Var v, unsigned exponent) const {
  const unsigned old = field(v.index());
  const unsigned deg = degree() - old + exponent;
  if (exponent > kFieldLimit || deg > kFieldLimit) {
    throw std::overflow_error("monomial exponent out of range");
  }
  Monomial r = *this;
  r.set_field(v.index(), exponent);
  r.set_field(kDegField, deg);
  return r;
}

Monomial Monomial::gcd(const Monomial& x, const Monomial& y) {
  Monomial r;
  unsigned deg = 0;
  for (int k = 0; k < kMaxVars; ++k) {
    const unsigned e = std::min(x.field(k), y.field(k));
    r.set_field(k, e);
    deg += e;
  }
  r.set_field(kDegField, deg);
  return r;
}

Monomial Monomial::lcm(const Monomial& x, const Monomial& y) {
  Monomial r;
  unsigned deg = 0;
  for (int k = 0; k < kMaxVars; ++k) {
    const unsigned e = std::max(x.field(k), y.field(k));
    r.set_field(k, e);
    deg += e;
  }
  if (deg > kFieldLimit) throw std::overflow_error("monomial degree out of range");
  r.set_field(kDegField, deg);
  return r;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = w_[0] * 0x9e3779b97f4a7c15ull;
  h ^= (w_[1] + 0x7f4a7c159e3779b9ull + (h << 6) + (h >> 2));
  h ^= (w_[2] + 0x94d049bb133111ebull + (h << 6) + (h >> 2));
  return static_cast<std::size_t>(h ^ (h >> 31));
}

}  // namespace qtpieri
