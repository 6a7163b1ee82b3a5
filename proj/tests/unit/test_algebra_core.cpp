#include <doctest.h>

#include <random>

#include "quadfrob/field.hpp"
#include "quadfrob/matrix.hpp"
#include "quadfrob/polynomial.hpp"

using namespace quadfrob;

namespace {

FpMatrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, std::mt19937& rng, int zero_pct = 30) {
  std::uniform_int_distribution<std::uint32_t> val(1, f.modulus() - 1);
  std::uniform_int_distribution<int> pct(0, 99);
  FpMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (pct(rng) >= zero_pct) m.set_raw(r, c, val(rng));
    }
  }
  return m;
}

Polynomial random_poly(const PrimeField& f, std::size_t nvars, unsigned max_deg, std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4);
  std::uniform_int_distribution<std::uint32_t> e(0, max_deg);
  std::uniform_int_distribution<std::int64_t> c(-5, 5);
  Polynomial p(f, nvars);
  for (int k = nterms(rng); k > 0; --k) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i) m[i] = e(rng);
    p.add_term(m, c(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.symmetric(6) == -1);
  CHECK(f.symmetric(3) == 3);
  CHECK(f.pow(3, 6) == 1);

  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);

  CHECK_THROWS_AS(f.inv(0), PreconditionError);
  CHECK_THROWS_AS(PrimeField(2), PreconditionError);
  CHECK_THROWS_AS(PrimeField(9), PreconditionError);
  CHECK_THROWS_AS(PrimeField(1), PreconditionError);

  Fp a(f, 3);
  Fp b(f, 6);
  CHECK((a + b).value() == 2);
  CHECK((a * b).value() == 4);
  CHECK((a * a.inverse()).value() == 1);
  CHECK_THROWS_AS(a + Fp(PrimeField(5), 1), PreconditionError);
}

TEST_CASE("binomial conventions") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(4, -1) == 0);
  // (1 + x)^-2 = 1 - 2x + 3x^2 - ...
  CHECK(binomial(-2, 1) == -2);
  CHECK(binomial(-2, 2) == 3);
  CHECK(binomial_truncated(-2, 2) == 0);
  CHECK(binomial_truncated(5, 5) == 1);
  CHECK(binomial_truncated(5, 6) == 0);
  CHECK(binomial_truncated(60, 30) == BigInt("118264581564861424"));
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("binomial row sums and Pascal recurrence") {
  for (long a = 0; a <= 40; ++a) {
    BigInt row = 0;
    for (long b = 0; b <= a; ++b) {
      row += binomial_truncated(a, b);
      if (a > 0) CHECK(binomial_truncated(a, b) == binomial_truncated(a - 1, b) + binomial_truncated(a - 1, b - 1));
    }
    CHECK(row == (BigInt(1) << a));
  }
  // The generalized version satisfies Pascal's rule for negative tops too.
  for (long a = -10; a <= 10; ++a) {
    for (long b = 1; b <= 8; ++b) CHECK(binomial(a, b) == binomial(a - 1, b) + binomial(a - 1, b - 1));
  }
}

TEST_CASE("floor division helpers") {
  CHECK(floor_div(-1, 3) == -1);
  CHECK(floor_mod(-1, 3) == 2);
  CHECK(floor_div(7, 3) == 2);
  CHECK(floor_mod(-6, 3) == 0);
  CHECK(ipow(3, 4) == 81);
}

TEST_CASE("monomial order and enumeration") {
  Monomial x0sq{2, 0};
  Monomial x0x1{1, 1};
  Monomial x1sq{0, 2};
  Monomial x0{1, 0};
  CHECK(x0sq > x0x1);
  CHECK(x0x1 > x1sq);
  CHECK(x1sq > x0);

  auto ms = monomials_of_degree(3, 2);
  REQUIRE(ms.size() == 6);
  CHECK(ms.front() == Monomial{2, 0, 0});
  CHECK(ms.back() == Monomial{0, 0, 2});
  CHECK(std::is_sorted(ms.rbegin(), ms.rend()));

  CHECK(Monomial{1, 3, 0}.parity_mask() == 0b011);
  CHECK(Monomial{1, 1}.divides(Monomial{2, 1}));
  CHECK_FALSE(Monomial{0, 2}.divides(Monomial{2, 1}));
  CHECK(Monomial{1, 2}.scaled(3) == Monomial{3, 6});
}

TEST_CASE("polynomial arithmetic") {
  PrimeField f(3);
  auto x = Polynomial::variable(f, 2, 0);
  auto y = Polynomial::variable(f, 2, 1);
  auto sq = (x + y) * (x + y);
  CHECK(sq == x * x + (x * y).scaled(2) + y * y);
  // (x + y)^3 = x^3 + y^3 in characteristic 3.
  CHECK((x + y).pow(3) == x.pow(3) + y.pow(3));
  CHECK((x - x).is_zero());
  CHECK(sq.is_homogeneous());
  CHECK_FALSE((x + Polynomial::constant(f, 2, 1)).is_homogeneous());
  CHECK(sum_of_squares(f, 2).parity_mask() == std::optional<std::uint64_t>(0));
  CHECK_FALSE((x * y + x * x).parity_mask().has_value());
  CHECK(substitute_power(x * y + x * x, 3) == x.pow(3) * y.pow(3) + x.pow(6));
  CHECK_THROWS_AS(substitute_power(x, 0), PreconditionError);
  CHECK_THROWS_AS(x + Polynomial::variable(PrimeField(5), 2, 0), PreconditionError);
  CHECK((x * x - y.scaled(2)).to_string().find("x0^2") != std::string::npos);
}

TEST_CASE("polynomial ring laws on random inputs") {
  std::mt19937 rng(20240601);
  PrimeField f(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_poly(f, 3, 3, rng);
    auto b = random_poly(f, 3, 3, rng);
    auto c = random_poly(f, 3, 3, rng);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    // Exponent substitution is a ring homomorphism.
    CHECK(substitute_power(a * b, 5) == substitute_power(a, 5) * substitute_power(b, 5));
    CHECK(substitute_power(a + b, 5) == substitute_power(a, 5) + substitute_power(b, 5));
    // In characteristic p it agrees with the p-th power.
    CHECK(substitute_power(a, 5) == a.pow(5));
  }
}

TEST_CASE("row reduction basics") {
  PrimeField f(5);
  FpMatrix m(f, 3, 3);
  const int vals[3][3] = {{1, 2, 3}, {0, 1, 4}, {2, 0, 1}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m.set(r, c, vals[r][c]);
  }
  FpMatrix red = m.reduced();
  CHECK(red.is_reduced());
  CHECK(m.rank() == 3);
  CHECK(red == FpMatrix::identity(f, 3));

  // Rows 2 and 3 are multiples of row 1 mod 5.
  FpMatrix low(f, 3, 3);
  const int dep[3][3] = {{1, 2, 3}, {2, 4, 1}, {3, 1, 4}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) low.set(r, c, dep[r][c]);
  }
  CHECK(low.rank() == 1);
  CHECK(kernel_basis(low).cols() == 2);

  FpMatrix z(f, 2, 4);
  CHECK(z.rank() == 0);
  CHECK(kernel_basis(z).cols() == 4);

  CHECK_THROWS_AS(m.append_row(std::vector<std::uint32_t>{1, 2}), PreconditionError);
  CHECK_THROWS_AS(subspace_contains(m, FpMatrix(f, 1, 2)), PreconditionError);
}

TEST_CASE("row reduction properties on random matrices") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {3u, 5u, 101u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 60; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 9);
      const std::size_t rows = dim(rng);
      const std::size_t cols = dim(rng);
      FpMatrix m = random_matrix(f, rows, cols, rng, trial % 2 ? 70 : 20);
      FpMatrix red = m.reduced();
      // Idempotent and canonical.
      CHECK(red.is_reduced());
      CHECK(red.reduced() == red);
      CHECK(subspace_equal(m, red));
      // Rank-nullity, and the kernel really is annihilated.
      FpMatrix ker = kernel_basis(m);
      CHECK(m.rank() + ker.cols() == cols);
      CHECK((m * ker).is_zero());
      CHECK(ker.transpose().rank() == ker.cols());
      // rank(A) = rank(A^T)
      CHECK(m.rank() == m.transpose().rank());
      CHECK(subspace_contains(m, red.row_basis()));
    }
  }
}
