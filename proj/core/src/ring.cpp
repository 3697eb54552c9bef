#include "symideal/ring.hpp"

#include "symideal/errors.hpp"

namespace symideal {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

CoefficientRing CoefficientRing::prime_field(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw PreconditionError("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return {RingKind::PrimeField, static_cast<std::uint32_t>(p)};
}

namespace {

mpz_class mod_p(const mpz_class& a, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
  return r;
}

}  // namespace

Scalar CoefficientRing::normalize(const Scalar& a) const {
  switch (kind_) {
    case RingKind::Integers:
      if (a.get_den() != 1) {
        throw PreconditionError("non-integral coefficient " + a.get_str() + " in ZZ");
      }
      return a;
    case RingKind::Rationals: {
      Scalar r = a;
      r.canonicalize();
      return r;
    }
    case RingKind::PrimeField: {
      mpz_class num = mod_p(a.get_num(), p_);
      if (a.get_den() == 1) return Scalar(num);
      mpz_class den = mod_p(a.get_den(), p_);
      if (den == 0) {
        throw PreconditionError("denominator divisible by the characteristic");
      }
      mpz_class inv;
      mpz_class mod(p_);
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
      return Scalar(mod_p(num * inv, p_));
    }
  }
  return a;
}

Scalar CoefficientRing::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == RingKind::PrimeField) return Scalar(mod_p(a.get_num() + b.get_num(), p_));
  return a + b;
}

Scalar CoefficientRing::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == RingKind::PrimeField) return Scalar(mod_p(a.get_num() - b.get_num(), p_));
  return a - b;
}

Scalar CoefficientRing::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == RingKind::PrimeField) return Scalar(mod_p(a.get_num() * b.get_num(), p_));
  return a * b;
}

Scalar CoefficientRing::neg(const Scalar& a) const {
  if (kind_ == RingKind::PrimeField) return Scalar(mod_p(-a.get_num(), p_));
  return -a;
}

Scalar CoefficientRing::inverse(const Scalar& a) const {
  if (!is_field()) throw PreconditionError("inverse requested in ZZ");
  if (a == 0) throw PreconditionError("inverse of zero");
  if (kind_ == RingKind::Rationals) return 1 / a;
  mpz_class inv;
  mpz_class mod(p_);
  mpz_class num = a.get_num();
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
  return Scalar(inv);
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case RingKind::Integers:
      return "ZZ";
    case RingKind::Rationals:
      return "QQ";
    case RingKind::PrimeField:
      return "GF(" + std::to_string(p_) + ")";
  }
  return "?";
}

}  // namespace symideal
