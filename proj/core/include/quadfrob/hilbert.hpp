#pragma once

#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quadfrob/context.hpp"
#include "quadfrob/field.hpp"
#include "quadfrob/graded_pieces.hpp"

namespace quadfrob::hilbert {

using BigRational = boost::multiprecision::cpp_rational;

// Coefficient of t^i in ((1 - t^q) / (1 - t))^N.
BigInt alpha(long i, int N, long q);

// dim A_i = alpha(i) + alpha(i - 1); nonzero exactly on [0, N(q-1)+1].
BigInt dim_A(int N, long q, long i);
BigInt dim_A(const QuadricContext& ctx, long i);
long top_degree_A(const QuadricContext& ctx);

// Closed forms for B = A/(x_0^p) and C = A/(I : x_0^p). Only valid for
// s = 1; other s throw PreconditionError (use graded::brute_force_dim).
BigInt dim_B(const QuadricContext& ctx, long i);
BigInt dim_C(const QuadricContext& ctx, long i);

BigInt dimension(const QuadricContext& ctx, Algebra algebra, long i);
// Highest degree in which the algebra can be nonzero.
long top_degree(const QuadricContext& ctx, Algebra algebra);

// gamma_N(i) = 2^-N sum_j (-1)^j dim A_{d_N + i + jq}. N >= 1 for the raw
// form. Throws InternalMismatch if the sum is not divisible by 2^N.
BigInt gamma(int N, long q, long i);
BigInt gamma(const QuadricContext& ctx, long i);

// w_0..w_k and u_0..u_k, both built with argument (q + 1) / 2.
std::vector<BigInt> w_sequence(int k, long q);
std::vector<BigInt> u_sequence(int k, long q);
BigInt F(int k, long i, long q);
BigInt G(int k, long i, long q);

// F_k(i) for N = 2k + 2, G_k(i) for N = 2k + 1. Requires 1 <= i <= (q-1)/2.
BigInt gamma_closed(int N, long q, long i);
BigInt gamma_closed(const QuadricContext& ctx, long i);

struct SumBCheck {
  BigInt lhs;  // sum over i of dim B_{l + ip}
  BigInt rhs;  // p^n + 2^n gamma_N(l0)
  long l0 = 0;
  bool holds() const { return lhs == rhs; }
};
SumBCheck sum_B_check(const QuadricContext& ctx, long l);

struct CombinationReport {
  BigInt det;                          // transformed matrix C(e-1+m-j, e-1-j+c-r)
  BigInt det_original;                 // C(e-1+m+r-c, e-1)
  std::optional<BigRational> product;  // closed product; empty if a factorial argument is negative
  bool nonzero_mod_p = false;          // det mod p != 0
};
CombinationReport combination_determinant(long e, long m, long j, unsigned p);

// Exact integer determinant (fraction-free elimination).
BigInt determinant(std::vector<std::vector<BigInt>> rows);

enum class Source { Formula, BruteForce };

struct HilbertTable {
  Algebra algebra = Algebra::A;
  QuadricContext context;
  std::map<long, BigInt> dims;
  Source source = Source::Formula;

  BigInt at(long i) const {
    auto it = dims.find(i);
    return it == dims.end() ? BigInt(0) : it->second;
  }
};

// Every degree in [lo, hi]; defaults to the algebra's full support.
HilbertTable formula_table(const QuadricContext& ctx, Algebra algebra);
HilbertTable formula_table(const QuadricContext& ctx, Algebra algebra, long lo, long hi);
HilbertTable brute_force_table(const QuadricContext& ctx, Algebra algebra, graded::ColumnBudget budget = {});
HilbertTable brute_force_table(const QuadricContext& ctx, Algebra algebra, long lo, long hi,
                               graded::ColumnBudget budget = {});

}  // namespace quadfrob::hilbert
