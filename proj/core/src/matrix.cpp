#include "quadfrob/matrix.hpp"

#include <algorithm>

namespace quadfrob {

FpMatrix FpMatrix::identity(const PrimeField& field, std::size_t n) {
  FpMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set_raw(i, i, 1);
  return m;
}

void FpMatrix::append_row(std::span<const std::uint32_t> values) {
  if (values.size() != cols_) throw PreconditionError("row length does not match column count");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::size_t FpMatrix::reduce() {
  const std::uint32_t p = field_.modulus();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && at(pivot, c) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(row(pivot).begin(), row(pivot).end(), row(rank).begin());
    }
    auto prow = row(rank);
    const std::uint32_t inv = field_.inv(prow[c]);
    if (inv != 1) {
      for (std::size_t k = c; k < cols_; ++k) prow[k] = field_.mul(prow[k], inv);
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank) continue;
      auto target = row(r);
      const std::uint32_t f = target[c];
      if (f == 0) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t k = c; k < cols_; ++k) {
        if (prow[k] != 0) {
          target[k] = static_cast<std::uint32_t>((target[k] + nf * prow[k]) % p);
        }
      }
    }
    ++rank;
  }
  return rank;
}

FpMatrix FpMatrix::reduced() const {
  FpMatrix m(*this);
  m.reduce();
  return m;
}

bool FpMatrix::is_reduced() const {
  std::size_t last_pivot = 0;
  bool seen_zero_row = false;
  for (std::size_t r = 0; r < rows_; ++r) {
    auto rw = row(r);
    auto it = std::find_if(rw.begin(), rw.end(), [](std::uint32_t v) { return v != 0; });
    if (it == rw.end()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    const std::size_t c = static_cast<std::size_t>(it - rw.begin());
    if (*it != 1) return false;
    if (r > 0 && c <= last_pivot) return false;
    for (std::size_t o = 0; o < rows_; ++o) {
      if (o != r && at(o, c) != 0) return false;
    }
    last_pivot = c;
  }
  return true;
}

std::size_t FpMatrix::rank() const { return reduced().row_basis().rows(); }

FpMatrix FpMatrix::row_basis() const {
  FpMatrix m = is_reduced() ? *this : reduced();
  FpMatrix out(field_, 0, cols_);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto rw = m.row(r);
    if (std::any_of(rw.begin(), rw.end(), [](std::uint32_t v) { return v != 0; })) out.append_row(rw);
  }
  return out;
}

std::vector<std::size_t> FpMatrix::pivot_columns() const {
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rows_; ++r) {
    auto rw = row(r);
    auto it = std::find_if(rw.begin(), rw.end(), [](std::uint32_t v) { return v != 0; });
    if (it != rw.end()) pivots.push_back(static_cast<std::size_t>(it - rw.begin()));
  }
  return pivots;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.set_raw(c, r, at(r, c));
  }
  return t;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_ || !(field_ == o.field_)) throw PreconditionError("incompatible matrix product");
  FpMatrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint32_t a = at(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        out.set_raw(r, c, field_.add(out.at(r, c), field_.mul(a, o.at(k, c))));
      }
    }
  }
  return out;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t v) { return v == 0; });
}

FpMatrix kernel_basis(const FpMatrix& m) {
  const PrimeField& field = m.field();
  FpMatrix r = m.reduced();
  const auto pivots = r.pivot_columns();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  FpMatrix basis(field, m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis.set_raw(f, k, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      basis.set_raw(pivots[i], k, field.neg(r.at(i, f)));
    }
  }
  return basis;
}

namespace {

FpMatrix stack(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix s(a);
  for (std::size_t r = 0; r < b.rows(); ++r) s.append_row(b.row(r));
  return s;
}

void check_ambient(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.cols()) throw PreconditionError("subspaces live in ambient spaces of different dimension");
  if (!(a.field() == b.field())) throw PreconditionError("subspaces over different fields");
}

}  // namespace

bool subspace_contains(const FpMatrix& outer, const FpMatrix& inner) {
  check_ambient(outer, inner);
  return stack(outer, inner).rank() == outer.rank();
}

bool subspace_equal(const FpMatrix& a, const FpMatrix& b) {
  check_ambient(a, b);
  return a.row_basis() == b.row_basis();
}

}  // namespace quadfrob
