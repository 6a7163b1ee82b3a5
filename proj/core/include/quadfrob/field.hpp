#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace quadfrob {

using BigInt = boost::multiprecision::cpp_int;

// Raised when a caller violates an operation's documented preconditions.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when two computation routes that must agree do not. Always a bug.
class InternalMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

bool is_prime(std::uint64_t value);

// Floor division and non-negative remainder for signed integers.
constexpr long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
constexpr long floor_mod(long a, long b) { return a - b * floor_div(a, b); }

// Integer power with no overflow check; callers keep results in range.
constexpr long ipow(long base, unsigned exp) {
  long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

/// The prime field F_p for an odd prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // Throws PreconditionError for a == 0.
  std::uint32_t inv(std::uint32_t a) const;

  // Representative in (-p/2, p/2], used for human readable output.
  std::int64_t symmetric(std::uint32_t a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// A reduced element of F_p carrying its modulus.
class Fp {
 public:
  Fp(const PrimeField& field, std::int64_t value)
      : field_(field), value_(field.reduce(value)) {}

  std::uint32_t value() const { return value_; }
  const PrimeField& field() const { return field_; }

  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator-() const { return Fp(field_, field_.neg(value_)); }
  Fp inverse() const { return Fp(field_, field_.inv(value_)); }

  bool operator==(const Fp& o) const { return field_ == o.field_ && value_ == o.value_; }

 private:
  void check_same_field(const Fp& o) const;

  PrimeField field_;
  std::uint32_t value_;
};

// Binomial coefficient with the generalized upper argument:
//   0 <= b <= a : the usual value
//   b < 0 or 0 <= a < b : 0
//   a < 0 <= b : (-1)^b * C(b - a - 1, b), the coefficient in (1+x)^a.
BigInt binomial(long a, long b);

// Binomial with the truncating convention C(a, b) = 0 unless 0 <= b <= a.
// This is the convention every Hilbert-function formula in this library uses.
BigInt binomial_truncated(long a, long b);

BigInt factorial(long n);

long to_long(const BigInt& v);
std::string to_string(const BigInt& v);

}  // namespace quadfrob
