#pragma once

#include <cstddef>
#include <vector>

#include "quadfrob/context.hpp"
#include "quadfrob/field.hpp"
#include "quadfrob/matrix.hpp"
#include "quadfrob/polynomial.hpp"

namespace quadfrob::graded {

/// Ceiling on the number of dense matrix columns a single computation may
/// materialize. Requests above it throw PreconditionError.
struct ColumnBudget {
  std::size_t max_columns = 20000;
};

/// A degree-d subspace of S = F_p[x_0..x_N], stored as a reduced row-echelon
/// basis against the monomial basis of S_d (descending grlex order).
struct GradedPiece {
  unsigned degree = 0;
  std::vector<Monomial> ambient;
  FpMatrix basis;

  std::size_t dimension() const { return basis.rows(); }
};

// (generators)_d as a subspace of S_d. Generators must be homogeneous and
// share one ring; generators of degree above d contribute nothing.
GradedPiece ideal_piece(const std::vector<Polynomial>& generators, unsigned d, ColumnBudget budget = {});

// dim S_d - dim (generators)_d.
BigInt quotient_dim(const std::vector<Polynomial>& generators, unsigned d, ColumnBudget budget = {});

// ((generators) : g)_d = {h in S_d : g h in (generators)}.
GradedPiece colon_piece(const std::vector<Polynomial>& generators, const Polynomial& g, unsigned d,
                        ColumnBudget budget = {});

// Rank of multiplication by g from S_d to (S / (generators))_{d + deg g};
// equals dim S_d - dim colon_piece(generators, g, d).
BigInt multiplication_rank(const std::vector<Polynomial>& generators, const Polynomial& g, unsigned d,
                           ColumnBudget budget = {});

// (x_0^2 + ... + x_N^2, x_1^q, ..., x_N^q) in F_p[x_0..x_N].
std::vector<Polynomial> quadric_ideal(const PrimeField& field, int N, long q);

// Macaulay-matrix dimension of A_i, B_i or C_i. Works for every s.
BigInt brute_force_dim(const QuadricContext& ctx, Algebra algebra, long i, ColumnBudget budget = {});

// Whether (e, d) lies in the range the ideal-quotient statements cover:
// 0 <= e < p and d + e <= (N + 1)(p - 1) / 2.
bool quotient_statement_in_range(unsigned p, unsigned N, unsigned e, unsigned d);

// ((x_0^p..x_N^p) : (sum x_i^2)^e)_d is contained in (x_0^p..x_N^p, sum x_i^2)_d.
// Throws PreconditionError outside the covered range.
bool verify_diff_new(unsigned p, unsigned N, unsigned e, unsigned d, ColumnBudget budget = {});

// ((x_0^p..x_N^p) : (sum x_i^2)^e)_d equals (x_0^p..x_N^p, (sum x_i^2)^(p-e))_d
// as subspaces. Throws PreconditionError outside the covered range.
bool verify_diff(unsigned p, unsigned N, unsigned e, unsigned d, ColumnBudget budget = {});

}  // namespace quadfrob::graded
