#include "quadfrob/context.hpp"

namespace quadfrob {

QuadricContext QuadricContext::make(int n, unsigned p, unsigned s) {
  if (n < 2) throw PreconditionError("quadric dimension n must be at least 2, got " + std::to_string(n));
  if (p == 2 || !is_prime(p)) throw PreconditionError("p must be an odd prime, got " + std::to_string(p));
  if (s < 1) throw PreconditionError("s must be at least 1");
  unsigned long long q = 1;
  for (unsigned k = 0; k < s; ++k) {
    q *= p;
    if (q >= (1ull << 31)) throw PreconditionError("p^s must stay below 2^31");
  }
  QuadricContext ctx;
  ctx.n = n;
  ctx.N = n + 1;
  ctx.p = p;
  ctx.s = s;
  ctx.q = static_cast<long>(q);
  return ctx;
}

std::string QuadricContext::to_string() const {
  return "Q_" + std::to_string(n) + " over F_" + std::to_string(p) + ", s=" + std::to_string(s);
}

const char* algebra_name(Algebra a) {
  switch (a) {
    case Algebra::A: return "A";
    case Algebra::B: return "B";
    case Algebra::C: return "C";
  }
  return "?";
}

}  // namespace quadfrob
