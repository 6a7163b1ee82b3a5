#include "quadfrob/field.hpp"

#include <limits>

namespace quadfrob {

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p == 2) throw PreconditionError("characteristic 2 is not supported");
  if (p >= (1u << 31) || !is_prime(p)) {
    throw PreconditionError("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw PreconditionError("zero has no inverse in F_p");
  return pow(a, p_ - 2);
}

void Fp::check_same_field(const Fp& o) const {
  if (!(field_ == o.field_)) throw PreconditionError("F_p scalars from different fields");
}

Fp Fp::operator+(const Fp& o) const {
  check_same_field(o);
  return Fp(field_, field_.add(value_, o.value_));
}

Fp Fp::operator-(const Fp& o) const {
  check_same_field(o);
  return Fp(field_, field_.sub(value_, o.value_));
}

Fp Fp::operator*(const Fp& o) const {
  check_same_field(o);
  return Fp(field_, field_.mul(value_, o.value_));
}

BigInt binomial_truncated(long a, long b) {
  if (b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= (a - b + i);
    r /= i;
  }
  return r;
}

BigInt binomial(long a, long b) {
  if (b < 0) return 0;
  if (a >= 0) return binomial_truncated(a, b);
  BigInt r = binomial_truncated(b - a - 1, b);
  return (b % 2 == 0) ? r : BigInt(-r);
}

BigInt factorial(long n) {
  if (n < 0) throw PreconditionError("factorial of a negative integer");
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

long to_long(const BigInt& v) {
  if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min()) {
    throw std::overflow_error("integer does not fit in a machine word");
  }
  return v.convert_to<long>();
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace quadfrob
