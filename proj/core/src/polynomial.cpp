#include "quadfrob/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace quadfrob {

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(i) = power;
  return m;
}

unsigned Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

std::uint64_t Monomial::parity_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size() && i < 64; ++i) {
    if (exps_[i] & 1u) mask |= (std::uint64_t{1} << i);
  }
  return mask;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.nvars() != nvars()) throw PreconditionError("monomials with different variable counts");
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

Monomial Monomial::scaled(std::uint32_t q) const {
  Monomial r(*this);
  for (auto& e : r.exps_) e *= q;
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  return exps_ <=> o.exps_;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << '*';
    os << 'x' << i;
    if (exps_[i] > 1) os << '^' << exps_[i];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

void fill_monomials(std::vector<std::uint32_t>& exps, std::size_t pos, unsigned remaining,
                    std::vector<Monomial>& out) {
  if (pos + 1 == exps.size()) {
    exps[pos] = remaining;
    out.emplace_back(exps);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    exps[pos] = e;
    fill_monomials(exps, pos + 1, remaining - e, out);
  }
  exps[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> exps(nvars, 0);
  fill_monomials(exps, 0, d, out);
  return out;
}

Polynomial Polynomial::constant(const PrimeField& field, std::size_t nvars, std::int64_t c) {
  Polynomial p(field, nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(const PrimeField& field, std::size_t nvars, std::size_t i) {
  return term(field, Monomial::variable(nvars, i));
}

Polynomial Polynomial::term(const PrimeField& field, const Monomial& m, std::int64_t c) {
  Polynomial p(field, m.nvars());
  p.add_term(m, c);
  return p;
}

Fp Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return Fp(field_, it == terms_.end() ? 0 : it->second);
}

void Polynomial::add_term(const Monomial& m, std::int64_t c) {
  add_term_raw(m, field_.reduce(c));
}

void Polynomial::add_term_raw(const Monomial& m, std::uint32_t c) {
  if (m.nvars() != nvars_) throw PreconditionError("monomial has the wrong variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<unsigned> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::optional<std::uint64_t> Polynomial::parity_mask() const {
  if (terms_.empty()) return std::uint64_t{0};
  std::uint64_t mask = terms_.begin()->first.parity_mask();
  for (const auto& [m, c] : terms_) {
    if (m.parity_mask() != mask) return std::nullopt;
  }
  return mask;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!(field_ == o.field_) || nvars_ != o.nvars_) {
    throw PreconditionError("polynomials over different rings");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term_raw(m, c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(*this);
  r += o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.neg(c));
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(field_, nvars_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) r.add_term_raw(m1 * m2, field_.mul(c1, c2));
  }
  return r;
}

Polynomial Polynomial::scaled(std::int64_t c) const {
  Polynomial r(field_, nvars_);
  const std::uint32_t f = field_.reduce(c);
  for (const auto& [m, v] : terms_) r.add_term_raw(m, field_.mul(v, f));
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(field_, nvars_, 1);
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const std::int64_t c = field_.symmetric(it->second);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    const std::int64_t a = c < 0 ? -c : c;
    const bool unit_monomial = it->first.degree() == 0;
    if (a != 1 || unit_monomial) os << a;
    if (!unit_monomial) {
      if (a != 1) os << '*';
      os << it->first.to_string();
    }
    first = false;
  }
  return os.str();
}

Polynomial substitute_power(const Polynomial& poly, std::uint32_t q) {
  if (q == 0) throw PreconditionError("substitute_power needs q >= 1");
  Polynomial r(poly.field(), poly.nvars());
  for (const auto& [m, c] : poly.terms()) r.add_term_raw(m.scaled(q), c);
  return r;
}

Polynomial sum_of_squares(const PrimeField& field, std::size_t nvars) {
  Polynomial r(field, nvars);
  for (std::size_t i = 0; i < nvars; ++i) r.add_term(Monomial::variable(nvars, i, 2), 1);
  return r;
}

}  // namespace quadfrob
