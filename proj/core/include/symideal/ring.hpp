#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace symideal {

/// Exact coefficient. Integer-ring values carry denominator 1; prime-field
/// values are kept as their representative in {0, ..., p-1}.
using Scalar = mpq_class;

enum class RingKind { Integers, Rationals, PrimeField };

bool is_prime(std::uint64_t n);

/// One of ZZ, QQ or GF(p) with 2 <= p < 2^31.
class CoefficientRing {
 public:
  static CoefficientRing integers() { return {RingKind::Integers, 0}; }
  static CoefficientRing rationals() { return {RingKind::Rationals, 0}; }
  static CoefficientRing prime_field(std::uint64_t p);

  RingKind kind() const noexcept { return kind_; }
  /// p for GF(p), 0 otherwise.
  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_field() const noexcept { return kind_ != RingKind::Integers; }

  /// Brings a value into canonical form for this ring. Throws
  /// PreconditionError for a non-integral value in ZZ or a denominator
  /// divisible by p in GF(p).
  Scalar normalize(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Field inverse; throws on zero or in ZZ.
  Scalar inverse(const Scalar& a) const;

  /// "ZZ", "QQ" or "GF(p)".
  std::string name() const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  CoefficientRing(RingKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  RingKind kind_;
  std::uint32_t p_;
};

}  // namespace symideal
