#include <doctest.h>

#include <random>

#include "quadfrob/matfac.hpp"

using namespace quadfrob;
using namespace quadfrob::matfac;

namespace {

std::uint64_t eval(const Polynomial& f, const std::vector<std::uint64_t>& pt, std::uint64_t p) {
  std::uint64_t total = 0;
  for (const auto& [mono, c] : f.terms()) {
    std::uint64_t v = c;
    for (std::size_t i = 0; i < mono.nvars(); ++i) {
      for (std::uint32_t k = 0; k < mono[i]; ++k) v = v * pt[i] % p;
    }
    total = (total + v) % p;
  }
  return total;
}

using Numeric = std::vector<std::vector<std::uint64_t>>;

Numeric eval(const PolyMatrix& m, const std::vector<std::uint64_t>& pt, std::uint64_t p) {
  Numeric out(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = eval(m.at(r, c), pt, p);
  }
  return out;
}

Numeric product(const Numeric& a, const Numeric& b, std::uint64_t p) {
  Numeric out(a.size(), std::vector<std::uint64_t>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % p;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("smallest standard factorization") {
  PrimeField f(3);
  const auto pair = build(f, 1, Variant::Standard);
  REQUIRE(pair.size() == 2);
  const auto x0 = Polynomial::variable(f, 3, 0);
  const auto x1 = Polynomial::variable(f, 3, 1);
  const auto x2 = Polynomial::variable(f, 3, 2);
  CHECK(pair.form == x0 * x0 + x1 * x2);
  CHECK(pair.phi.at(0, 0) == x0);
  CHECK(pair.phi.at(0, 1) == x1);
  CHECK(pair.phi.at(1, 0) == x2);
  CHECK(pair.phi.at(1, 1) == -x0);
  CHECK(pair.phi * pair.psi == PolyMatrix::scalar(pair.form, 2));
  CHECK(verify(pair));
}

TEST_CASE("sizes and variable counts") {
  PrimeField f(5);
  for (int m = 0; m <= 6; ++m) {
    CHECK(variable_count(m, Variant::Standard) == static_cast<std::size_t>(2 * m + 1));
    CHECK(variable_count(m, Variant::Primed) == static_cast<std::size_t>(2 * m + 3));
    CHECK(build(f, m, Variant::Standard).size() == (std::size_t{1} << m));
    CHECK(build(f, m, Variant::Primed).size() == (std::size_t{1} << m));
  }
  const auto primed = build(f, 0, Variant::Primed);
  CHECK(primed.form == Polynomial::variable(f, 3, 1) * Polynomial::variable(f, 3, 2));
  CHECK(verify(primed));
  CHECK(std::string(variant_name(Variant::Primed)) != variant_name(Variant::Standard));
}

TEST_CASE("factorization identity by symbolic product and random evaluation") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    PrimeField f(p);
    std::uniform_int_distribution<std::uint64_t> coord(0, p - 1);
    for (Variant v : {Variant::Standard, Variant::Primed}) {
      for (int m = 0; m <= 6; ++m) {
        const auto pair = build(f, m, v);
        if (m <= 4) CHECK(verify(pair));
        for (int trial = 0; trial < 4; ++trial) {
          std::vector<std::uint64_t> pt(variable_count(m, v));
          for (auto& c : pt) c = coord(rng);
          const auto phi = eval(pair.phi, pt, p);
          const auto psi = eval(pair.psi, pt, p);
          const std::uint64_t fv = eval(pair.form, pt, p);
          for (const auto& prod : {product(phi, psi, p), product(psi, phi, p)}) {
            for (std::size_t r = 0; r < prod.size(); ++r) {
              for (std::size_t c = 0; c < prod.size(); ++c) CHECK(prod[r][c] == (r == c ? fv : 0));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("Frobenius pull-back") {
  PrimeField f(3);
  const auto pair = build(f, 1, Variant::Standard);
  const auto pulled = frobenius_pullback(pair, 3);
  const auto x0 = Polynomial::variable(f, 3, 0);
  const auto x1 = Polynomial::variable(f, 3, 1);
  const auto x2 = Polynomial::variable(f, 3, 2);
  CHECK(pulled.form == x0.pow(6) + x1.pow(3) * x2.pow(3));
  CHECK(pulled.phi.at(0, 1) == x1.pow(3));
  CHECK(verify(pulled));
  CHECK(frobenius_pullback(pair, 1).phi == pair.phi);
  CHECK_THROWS_AS(frobenius_pullback(pair, 0), PreconditionError);
  for (int m = 0; m <= 3; ++m) {
    for (Variant v : {Variant::Standard, Variant::Primed}) CHECK(verify(frobenius_pullback(build(f, m, v), 9)));
  }
}

TEST_CASE("a perturbed factorization is rejected") {
  PrimeField f(5);
  auto pair = build(f, 2, Variant::Standard);
  REQUIRE(verify(pair));
  pair.phi.at(1, 2) = pair.phi.at(1, 2) + Polynomial::variable(f, pair.phi.nvars(), 0);
  CHECK_FALSE(verify(pair));

  auto other = build(f, 2, Variant::Primed);
  other.form = other.form + Polynomial::variable(f, other.phi.nvars(), 0).pow(2);
  CHECK_FALSE(verify(other));
}
