#pragma once

#include <cstdint>
#include <string>

#include "mpc/errors.hpp"

namespace mpc {

// Canonical residue in [0, p).
using Residue = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;

class FieldElement;

/// The prime field GF(p). Cheap to copy; two specs are the same field iff
/// their moduli agree.
class FieldSpec {
 public:
  static constexpr Residue kMaxModulus = 1u << 16;

  /// Throws InvalidModulus unless p is a prime no larger than kMaxModulus.
  explicit FieldSpec(Residue p);

  Residue modulus() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    const std::int64_t r = v % p;
    return static_cast<Residue>(r < 0 ? r + p : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    const Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// Throws DivisionByZero for a = 0.
  Residue inv(Residue a) const;
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  FieldElement element(std::int64_t v) const;
  FieldElement zero() const;
  FieldElement one() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  Residue p_;
};

class FieldElement {
 public:
  FieldElement(FieldSpec spec, std::int64_t v) : spec_(spec), value_(spec.reduce(v)) {}

  Residue value() const noexcept { return value_; }
  FieldSpec spec() const noexcept { return spec_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator-() const { return {spec_, spec_.neg(value_)}; }
  friend FieldElement operator+(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a, FieldElement b);
  friend FieldElement operator*(FieldElement a, FieldElement b);
  friend FieldElement operator/(FieldElement a, FieldElement b);

  friend bool operator==(FieldElement a, FieldElement b) {
    return a.spec_ == b.spec_ && a.value_ == b.value_;
  }

 private:
  FieldSpec spec_;
  Residue value_;
};

FieldElement inv(FieldElement a);

std::string to_string(FieldElement a);

}  // namespace mpc
