#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadfrob/field.hpp"

namespace quadfrob {

/// Exponent vector of a monomial in x_0, ..., x_{k-1}.
///
/// Monomials are totally ordered by graded lexicographic order: first by
/// total degree, then lexicographically with x_0 the most significant
/// variable. So x_0^2 > x_0 x_1 > x_1^2 > x_0 > x_1 > 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}

  static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  unsigned degree() const;
  bool divides(const Monomial& other) const;
  // Bit i set iff the exponent of x_i is odd.
  std::uint64_t parity_mask() const;

  Monomial operator*(const Monomial& o) const;
  Monomial scaled(std::uint32_t q) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  std::strong_ordering operator<=>(const Monomial& o) const;

  std::string to_string() const;

 private:
  std::vector<std::uint32_t> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// All monomials of total degree d in nvars variables, in descending grlex
// order (x_0^d first). This is the ambient basis order of S_d.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

/// Sparse polynomial over F_p. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, std::uint32_t>;

  Polynomial(const PrimeField& field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static Polynomial constant(const PrimeField& field, std::size_t nvars, std::int64_t c);
  static Polynomial variable(const PrimeField& field, std::size_t nvars, std::size_t i);
  static Polynomial term(const PrimeField& field, const Monomial& m, std::int64_t c = 1);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Fp coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, std::int64_t c);
  void add_term_raw(const Monomial& m, std::uint32_t c);

  // Total degree of the leading term; nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Common parity mask of all terms, if they share one.
  std::optional<std::uint64_t> parity_mask() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial scaled(std::int64_t c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;

  PrimeField field_;
  std::size_t nvars_;
  TermMap terms_;
};

// Replace every x_i by x_i^q (exponent vectors scaled entrywise by q).
Polynomial substitute_power(const Polynomial& poly, std::uint32_t q);

// x_0^2 + x_1^2 + ... + x_{nvars-1}^2.
Polynomial sum_of_squares(const PrimeField& field, std::size_t nvars);

}  // namespace quadfrob
