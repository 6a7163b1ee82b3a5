#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "quadfrob/field.hpp"

namespace quadfrob {

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(const PrimeField& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FpMatrix identity(const PrimeField& field, std::size_t n);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = field_.reduce(v); }
  void set_raw(std::size_t r, std::size_t c, std::uint32_t v) { data_[r * cols_ + c] = v; }

  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const std::uint32_t> values);

  // In-place reduction to reduced row-echelon form; zero rows are moved to
  // the bottom and kept. Returns the rank.
  std::size_t reduce();
  FpMatrix reduced() const;
  bool is_reduced() const;
  std::size_t rank() const;

  // Reduced row-echelon basis of the row space (zero rows dropped).
  FpMatrix row_basis() const;
  // Pivot column of every row of a reduced matrix (zero rows excluded).
  std::vector<std::size_t> pivot_columns() const;

  FpMatrix transpose() const;
  FpMatrix operator*(const FpMatrix& o) const;
  bool is_zero() const;

  bool operator==(const FpMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

// Basis of the right null space {x : M x = 0}, returned as the columns of a
// cols(M) x k matrix.
FpMatrix kernel_basis(const FpMatrix& m);

// Row-space comparisons. Both matrices must have the same column count.
bool subspace_contains(const FpMatrix& outer, const FpMatrix& inner);
bool subspace_equal(const FpMatrix& a, const FpMatrix& b);

}  // namespace quadfrob
