#include "quadfrob/hilbert.hpp"

#include <string>
#include <utility>

namespace quadfrob::hilbert {
namespace {

void require_s1(const QuadricContext& ctx, const char* what) {
  if (ctx.s != 1) {
    throw PreconditionError(std::string(what) + " closed form needs s = 1 (got s = " + std::to_string(ctx.s) +
                            "); use the brute-force path instead");
  }
}

BigInt pow2(int e) { return BigInt(1) << e; }

void require_gamma_args(int N, long q) {
  if (N < 1) throw PreconditionError("gamma needs N >= 1");
  if (q < 3 || q % 2 == 0) throw PreconditionError("q must be odd and at least 3");
}

}  // namespace

BigInt alpha(long i, int N, long q) {
  if (N < 1 || q < 1) throw PreconditionError("alpha needs N >= 1 and q >= 1");
  if (i < 0 || i > N * (q - 1)) return 0;
  BigInt sum = 0;
  for (int j = 0; j <= N; ++j) {
    BigInt term = binomial_truncated(N, j) * binomial_truncated(i - j * q + N - 1, N - 1);
    if (j % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

BigInt dim_A(int N, long q, long i) { return alpha(i, N, q) + alpha(i - 1, N, q); }

BigInt dim_A(const QuadricContext& ctx, long i) { return dim_A(ctx.N, ctx.q, i); }

long top_degree_A(const QuadricContext& ctx) { return ctx.N * (ctx.q - 1) + 1; }

BigInt dim_B(const QuadricContext& ctx, long i) {
  require_s1(ctx, "dim B");
  const long dN = ctx.dN();
  const long p = ctx.q;
  if (i < 0 || i > 2 * dN) return 0;
  if (i > dN + p) return dim_B(ctx, 2 * dN - i);
  BigInt sum = 0;
  for (long j = 0; i - j * p >= 0; ++j) {
    if (j % 2 == 0) sum += dim_A(ctx, i - j * p);
    else sum -= dim_A(ctx, i - j * p);
  }
  return sum;
}

BigInt dim_C(const QuadricContext& ctx, long i) {
  require_s1(ctx, "dim C");
  const long dN = ctx.dN();
  if (i < 0 || i > 2 * dN) return 0;
  return i <= dN ? dim_B(ctx, i) : dim_B(ctx, 2 * dN - i);
}

BigInt dimension(const QuadricContext& ctx, Algebra algebra, long i) {
  switch (algebra) {
    case Algebra::A: return dim_A(ctx, i);
    case Algebra::B: return dim_B(ctx, i);
    case Algebra::C: return dim_C(ctx, i);
  }
  throw PreconditionError("unknown algebra");
}

long top_degree(const QuadricContext& ctx, Algebra algebra) {
  // For s > 1 no sharper bound for B and C is proven; A's bound always holds.
  if (algebra == Algebra::A || ctx.s != 1) return top_degree_A(ctx);
  return 2 * ctx.dN();
}

BigInt gamma(int N, long q, long i) {
  require_gamma_args(N, q);
  const long dN = static_cast<long>(N - 1) * (q - 1) / 2;
  const long top = N * (q - 1) + 1;
  // Terms with d_N + i + jq outside [0, top] vanish.
  const long jmin = -floor_div(dN + i, q);
  const long jmax = floor_div(top - dN - i, q);
  BigInt sum = 0;
  for (long j = jmin; j <= jmax; ++j) {
    BigInt a = dim_A(N, q, dN + i + j * q);
    if (floor_mod(j, 2) == 0) sum += a;
    else sum -= a;
  }
  const BigInt denom = pow2(N);
  if (sum % denom != 0) {
    throw InternalMismatch("gamma alternating sum " + to_string(sum) + " is not divisible by 2^" + std::to_string(N));
  }
  return sum / denom;
}

BigInt gamma(const QuadricContext& ctx, long i) { return gamma(ctx.N, ctx.q, i); }

std::vector<BigInt> w_sequence(int k, long q) {
  if (k < 0) throw PreconditionError("sequence index must be non-negative");
  const long h = (q + 1) / 2;
  std::vector<BigInt> w{1};
  for (int t = 0; t < k; ++t) {
    BigInt next = 0;
    for (int j = 0; j <= t; ++j) {
      BigInt term = w[t - j] * binomial_truncated(h + j, 2 * j + 2);
      if (j % 2 == 0) next += term;
      else next -= term;
    }
    w.push_back(next);
  }
  return w;
}

std::vector<BigInt> u_sequence(int k, long q) {
  if (k < 0) throw PreconditionError("sequence index must be non-negative");
  const long h = (q + 1) / 2;
  std::vector<BigInt> u{0};
  for (int t = 0; t < k; ++t) {
    BigInt next = binomial_truncated(h + t, 2 * t + 1);
    if (t % 2 == 1) next = -next;
    for (int j = 0; j <= t; ++j) {
      BigInt term = u[t - j] * binomial_truncated(h + j, 2 * j + 2);
      if (j % 2 == 0) next += term;
      else next -= term;
    }
    u.push_back(next);
  }
  return u;
}

BigInt F(int k, long i, long q) {
  const auto w = w_sequence(k, q);
  BigInt sum = 0;
  for (int j = 0; j <= k; ++j) {
    BigInt term = w[k - j] * binomial_truncated(i + j, 2 * j + 1);
    if (j % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

BigInt G(int k, long i, long q) {
  const auto u = u_sequence(k, q);
  BigInt sum = binomial_truncated(i + k, 2 * k);
  if (k % 2 == 1) sum = -sum;
  for (int j = 0; j <= k; ++j) {
    BigInt term = u[k - j] * binomial_truncated(i + j, 2 * j + 1);
    if (j % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

BigInt gamma_closed(int N, long q, long i) {
  require_gamma_args(N, q);
  if (i < 1 || i > (q - 1) / 2) {
    throw PreconditionError("closed form covers 1 <= i <= (q-1)/2, got i = " + std::to_string(i));
  }
  if (N % 2 == 0) return F((N - 2) / 2, i, q);
  return G((N - 1) / 2, i, q);
}

BigInt gamma_closed(const QuadricContext& ctx, long i) { return gamma_closed(ctx.N, ctx.q, i); }

SumBCheck sum_B_check(const QuadricContext& ctx, long l) {
  require_s1(ctx, "sum of B");
  const long p = ctx.q;
  const long top = 2 * ctx.dN();
  SumBCheck out;
  for (long i = -floor_div(l, p); l + i * p <= top; ++i) out.lhs += dim_B(ctx, l + i * p);
  out.l0 = floor_mod(l - ctx.dN(), p);
  out.rhs = BigInt(ipow(p, static_cast<unsigned>(ctx.n))) + pow2(ctx.n) * gamma(ctx, out.l0);
  return out;
}

BigInt determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw PreconditionError("determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

CombinationReport combination_determinant(long e, long m, long j, unsigned p) {
  if (e < 0 || m < 0 || j < 0) throw PreconditionError("e, m, j must be non-negative");
  if (p == 2 || !is_prime(p)) throw PreconditionError("p must be an odd prime");
  const std::size_t size = static_cast<std::size_t>(j) + 1;
  std::vector<std::vector<BigInt>> transformed(size, std::vector<BigInt>(size));
  std::vector<std::vector<BigInt>> original(size, std::vector<BigInt>(size));
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      const long rl = static_cast<long>(r);
      const long cl = static_cast<long>(c);
      transformed[r][c] = binomial_truncated(e - 1 + m - j, e - 1 - j + cl - rl);
      original[r][c] = binomial_truncated(e - 1 + m + rl - cl, e - 1);
    }
  }
  CombinationReport rep;
  rep.det = determinant(std::move(transformed));
  rep.det_original = determinant(std::move(original));
  rep.nonzero_mod_p = rep.det % p != 0;

  BigRational prod = 1;
  bool defined = true;
  for (long i = 0; i <= j && defined; ++i) {
    const long a = e - j + m - 1 + i;
    const long b = m - 1 + i;
    const long c = e - i;
    if (a < 0 || b < 0 || c < 0) {
      defined = false;
      break;
    }
    prod *= BigRational(factorial(a) * factorial(i), factorial(b) * factorial(c));
  }
  if (defined) rep.product = prod;
  return rep;
}

HilbertTable formula_table(const QuadricContext& ctx, Algebra algebra) {
  return formula_table(ctx, algebra, 0, top_degree(ctx, algebra));
}

HilbertTable formula_table(const QuadricContext& ctx, Algebra algebra, long lo, long hi) {
  HilbertTable t{algebra, ctx, {}, Source::Formula};
  for (long i = lo; i <= hi; ++i) t.dims[i] = dimension(ctx, algebra, i);
  return t;
}

HilbertTable brute_force_table(const QuadricContext& ctx, Algebra algebra, graded::ColumnBudget budget) {
  return brute_force_table(ctx, algebra, 0, top_degree(ctx, algebra), budget);
}

HilbertTable brute_force_table(const QuadricContext& ctx, Algebra algebra, long lo, long hi,
                               graded::ColumnBudget budget) {
  HilbertTable t{algebra, ctx, {}, Source::BruteForce};
  for (long i = lo; i <= hi; ++i) t.dims[i] = graded::brute_force_dim(ctx, algebra, i, budget);
  return t;
}

}  // namespace quadfrob::hilbert
