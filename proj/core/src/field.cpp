#include "mpc/field.hpp"

namespace mpc {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(Residue p) : p_(p) {
  if (p > kMaxModulus) {
    throw InvalidModulus("modulus " + std::to_string(p) + " exceeds 2^16");
  }
  if (!is_prime(p)) throw InvalidModulus("modulus not prime: " + std::to_string(p));
}

// Extended Euclid on (a, p).
Residue FieldSpec::inv(Residue a) const {
  if (a % p_ == 0) throw DivisionByZero();
  std::int64_t r0 = p_, r1 = a % p_;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  return reduce(s0);
}

FieldElement FieldSpec::element(std::int64_t v) const { return {*this, v}; }
FieldElement FieldSpec::zero() const { return {*this, 0}; }
FieldElement FieldSpec::one() const { return {*this, 1}; }

namespace {

void require_same(FieldElement a, FieldElement b) {
  if (!(a.spec() == b.spec())) throw FieldMismatch();
}

}  // namespace

FieldElement operator+(FieldElement a, FieldElement b) {
  require_same(a, b);
  return {a.spec_, a.spec_.add(a.value_, b.value_)};
}

FieldElement operator-(FieldElement a, FieldElement b) {
  require_same(a, b);
  return {a.spec_, a.spec_.sub(a.value_, b.value_)};
}

FieldElement operator*(FieldElement a, FieldElement b) {
  require_same(a, b);
  return {a.spec_, a.spec_.mul(a.value_, b.value_)};
}

FieldElement operator/(FieldElement a, FieldElement b) {
  require_same(a, b);
  return {a.spec_, a.spec_.div(a.value_, b.value_)};
}

FieldElement inv(FieldElement a) { return {a.spec(), a.spec().inv(a.value())}; }

std::string to_string(FieldElement a) { return std::to_string(a.value()); }

}  // namespace mpc
