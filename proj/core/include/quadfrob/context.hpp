#pragma once

#include <string>

#include "quadfrob/field.hpp"

namespace quadfrob {

/// Parameters of one smooth quadric Q_n in P^N over a field of odd
/// characteristic p, together with the Frobenius iteration count s.
struct QuadricContext {
  int n = 0;       // dimension of the quadric
  int N = 0;       // n + 1; the ambient polynomial ring has N + 1 variables
  unsigned p = 3;  // odd prime
  unsigned s = 1;  // Frobenius iterations
  long q = 3;      // p^s

  // Throws PreconditionError unless n >= 2, p is an odd prime and p^s < 2^31.
  static QuadricContext make(int n, unsigned p, unsigned s = 1);

  // (M - 1)(q - 1) / 2: the pivot degree attached to index M.
  long d(long M) const { return (M - 1) * (q - 1) / 2; }
  // n(q - 1) / 2, the centre of every decomposition window.
  long dN() const { return d(N); }
  // (n - 1)(q - 1) / 2.
  long dn() const { return d(n); }

  PrimeField field() const { return PrimeField(p); }
  std::string to_string() const;

  friend bool operator==(const QuadricContext&, const QuadricContext&) = default;
};

// The three graded Artinian algebras attached to a context:
//   A = S / (x_0^2 + ... + x_N^2, x_1^q, ..., x_N^q)
//   B = A / (x_0^q)
//   C = A / (I : x_0^q)
enum class Algebra { A, B, C };

const char* algebra_name(Algebra a);

}  // namespace quadfrob
