#include "quadfrob/matfac.hpp"

#include <string>

namespace quadfrob::matfac {

PolyMatrix::PolyMatrix(const PrimeField& field, std::size_t nvars, std::size_t rows, std::size_t cols)
    : field_(field), nvars_(nvars), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(field, nvars)) {}

PolyMatrix PolyMatrix::scalar(const Polynomial& f, std::size_t size) {
  PolyMatrix out(f.field(), f.nvars(), size, size);
  for (std::size_t i = 0; i < size; ++i) out.at(i, i) = f;
  return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_ || nvars_ != o.nvars_ || !(field_ == o.field_)) {
    throw PreconditionError("incompatible polynomial matrix product");
  }
  PolyMatrix out(field_, nvars_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Polynomial& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Polynomial& b = o.at(k, c);
        if (!b.is_zero()) out.at(r, c) += a * b;
      }
    }
  }
  return out;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return field_ == o.field_ && nvars_ == o.nvars_ && rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

PolyMatrix PolyMatrix::blocks(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d) {
  const std::size_t k = a.rows();
  for (const PolyMatrix* m : {&a, &b, &c, &d}) {
    if (m->rows() != k || m->cols() != k || m->nvars() != a.nvars()) {
      throw PreconditionError("block matrix needs four equal square blocks");
    }
  }
  PolyMatrix out(a.field(), a.nvars(), 2 * k, 2 * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t col = 0; col < k; ++col) {
      out.at(r, col) = a.at(r, col);
      out.at(r, col + k) = b.at(r, col);
      out.at(r + k, col) = c.at(r, col);
      out.at(r + k, col + k) = d.at(r, col);
    }
  }
  return out;
}

const char* variant_name(Variant v) { return v == Variant::Standard ? "standard" : "primed"; }

std::size_t variable_count(int m, Variant variant) {
  if (m < 0) throw PreconditionError("m must be non-negative");
  return static_cast<std::size_t>(2 * m + (variant == Variant::Standard ? 1 : 3));
}

Polynomial quadric_form(const PrimeField& field, int m, Variant variant) {
  const std::size_t nvars = variable_count(m, variant);
  Polynomial form(field, nvars);
  if (variant == Variant::Standard) form.add_term(Monomial::variable(nvars, 0, 2), 1);
  const int pairs = variant == Variant::Standard ? m : m + 1;
  for (int k = 1; k <= pairs; ++k) {
    Monomial mono(nvars);
    mono[2 * k - 1] = 1;
    mono[2 * k] = 1;
    form.add_term(mono, 1);
  }
  return form;
}

MFPair build(const PrimeField& field, int m, Variant variant) {
  const std::size_t nvars = variable_count(m, variant);
  const std::size_t shift = variant == Variant::Standard ? 0 : 2;
  auto var = [&](std::size_t i) { return Polynomial::variable(field, nvars, i); };

  PolyMatrix phi(field, nvars, 1, 1);
  PolyMatrix psi(field, nvars, 1, 1);
  if (variant == Variant::Standard) {
    phi.at(0, 0) = var(0);
    psi.at(0, 0) = var(0);
  } else {
    phi.at(0, 0) = var(1);
    psi.at(0, 0) = var(2);
  }
  for (int k = 0; k < m; ++k) {
    const std::size_t size = phi.rows();
    const PolyMatrix a = PolyMatrix::scalar(var(2 * k + 1 + shift), size);
    const PolyMatrix b = PolyMatrix::scalar(var(2 * k + 2 + shift), size);
    PolyMatrix next_phi = PolyMatrix::blocks(phi, a, b, -psi);
    PolyMatrix next_psi = PolyMatrix::blocks(psi, a, b, -phi);
    phi = std::move(next_phi);
    psi = std::move(next_psi);
  }
  return MFPair{std::move(phi), std::move(psi), quadric_form(field, m, variant), variant, m};
}

bool verify(const MFPair& pair) {
  if (pair.phi.rows() != pair.phi.cols() || pair.psi.rows() != pair.psi.cols() ||
      pair.phi.rows() != pair.psi.rows()) {
    return false;
  }
  const PolyMatrix target = PolyMatrix::scalar(pair.form, pair.phi.rows());
  return pair.phi * pair.psi == target && pair.psi * pair.phi == target;
}

MFPair frobenius_pullback(const MFPair& pair, std::uint32_t q) {
  if (q == 0) throw PreconditionError("Frobenius exponent must be positive");
  MFPair out = pair;
  for (PolyMatrix* mat : {&out.phi, &out.psi}) {
    for (std::size_t r = 0; r < mat->rows(); ++r) {
      for (std::size_t c = 0; c < mat->cols(); ++c) mat->at(r, c) = substitute_power(mat->at(r, c), q);
    }
  }
  out.form = substitute_power(pair.form, q);
  return out;
}

}  // namespace quadfrob::matfac
