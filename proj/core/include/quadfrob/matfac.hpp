#pragma once

#include <cstddef>
#include <vector>

#include "quadfrob/field.hpp"
#include "quadfrob/polynomial.hpp"

namespace quadfrob::matfac {

/// Dense matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(const PrimeField& field, std::size_t nvars, std::size_t rows, std::size_t cols);

  static PolyMatrix scalar(const Polynomial& f, std::size_t size);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Polynomial& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator-() const;
  bool operator==(const PolyMatrix& o) const;

  // [[a, b], [c, d]] from four equally sized square blocks.
  static PolyMatrix blocks(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d);

 private:
  PrimeField field_;
  std::size_t nvars_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

enum class Variant { Standard, Primed };

const char* variant_name(Variant v);

struct MFPair {
  PolyMatrix phi;
  PolyMatrix psi;
  Polynomial form;
  Variant variant = Variant::Standard;
  int m = 0;

  std::size_t size() const { return phi.rows(); }
};

// Number of variables x_0..x_k the pair lives in: 2m + 1 for the standard
// variant, 2m + 3 for the primed one (x_0 unused there).
std::size_t variable_count(int m, Variant variant);

// Standard: x_0^2 + x_1 x_2 + ... + x_{2m-1} x_{2m}.
// Primed:   x_1 x_2 + x_3 x_4 + ... + x_{2m+1} x_{2m+2}.
Polynomial quadric_form(const PrimeField& field, int m, Variant variant);

// Standard: phi_0 = psi_0 = (x_0),
//   phi_{k+1} = [[phi_k, x_{2k+1} I], [x_{2k+2} I, -psi_k]],
//   psi_{k+1} = [[psi_k, x_{2k+1} I], [x_{2k+2} I, -phi_k]].
// Primed: phi'_0 = (x_1), psi'_0 = (x_2) and the same recursion with
// x_{2k+3}, x_{2k+4} in place of x_{2k+1}, x_{2k+2}.
MFPair build(const PrimeField& field, int m, Variant variant);

// phi psi = psi phi = form * I, exactly.
bool verify(const MFPair& pair);

// Substitute x_i -> x_i^q in every entry and in the form. q >= 1.
MFPair frobenius_pullback(const MFPair& pair, std::uint32_t q);

}  // namespace quadfrob::matfac
