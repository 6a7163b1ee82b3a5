#include "quadfrob/cohomology.hpp"

#include <vector>

namespace quadfrob::cohomology {
namespace {

void require_n3(int n) {
  if (n < 3) throw PreconditionError("cohomology tables need n >= 3");
}

void require_species(Species s, int n) {
  if (!species_valid(s, n)) {
    throw PreconditionError(std::string("spinor species ") + species_name(s) + " does not exist on Q_" +
                            std::to_string(n));
  }
}

Species swap(Species s) {
  if (s == Species::Plus) return Species::Minus;
  if (s == Species::Minus) return Species::Plus;
  return s;
}

// h^0(tau (x) sigma2 (t)) from 0 -> prev(tau) -> O^r -> tau(1) -> 0 tensored
// with sigma2(t-1); everything vanishes for t <= 0.
BigInt h0_tensor(int n, Species tau, Species sigma2, long t) {
  if (t <= 0) return 0;
  const Species prev = prev_species(tau, n);
  return sequence_rank(n) * h0_spinor(n, t - 1) - h0_tensor(n, prev, sigma2, t - 1) +
         h_spinor_tensor(n, prev, sigma2, 1, t - 1);
}

}  // namespace

Species dual_species(Species s, int n) {
  require_species(s, n);
  return n % 4 == 2 ? swap(s) : s;
}

std::pair<Species, long> dual_spinor(Species s, int n) { return {dual_species(s, n), 1}; }

Species next_species(Species s, int n) {
  require_species(s, n);
  return n % 2 == 0 ? swap(s) : s;
}

Species prev_species(Species s, int n) { return next_species(s, n); }

BigInt sequence_rank(int n) { return BigInt(1) << ((n + 1) / 2); }

BigInt h_line(int n, int i, long t) {
  require_n3(n);
  if (i == 0) {
    if (t < 0) return 0;
    const long N = n + 1;
    return binomial_truncated(t + N, N) - binomial_truncated(t - 2 + N, N);
  }
  if (i == n) return h_line(n, 0, -t - n);
  return 0;
}

BigInt h0_spinor(int n, long t) {
  require_n3(n);
  if (t <= 0) return 0;
  return sequence_rank(n) * binomial_truncated(t + n - 1, n);
}

BigInt h_spinor(int n, Species s, int i, long t) {
  require_n3(n);
  require_species(s, n);
  if (i == 0) return h0_spinor(n, t);
  // Serre duality with omega = O(-n) and Sigma^* = D(Sigma)(1).
  if (i == n) return h_spinor(n, dual_species(s, n), 0, 1 - t - n);
  return 0;
}

BigInt h0_spinor_recursive(int n, Species s, long t) {
  require_n3(n);
  require_species(s, n);
  if (t <= 0) return 0;
  return sequence_rank(n) * h_line(n, 0, t - 1) - h0_spinor_recursive(n, prev_species(s, n), t - 1);
}

BigInt h1_table(int n, Species s1, Species s2) {
  require_n3(n);
  require_species(s1, n);
  require_species(s2, n);
  if (n % 2 == 1) return 1;
  if (n % 4 == 0) return s1 != s2 ? 1 : 0;
  return s1 == s2 ? 1 : 0;
}

BigInt h_spinor_tensor(int n, Species s1, Species s2, int i, long t) {
  require_n3(n);
  require_species(s1, n);
  require_species(s2, n);
  if (i < 0 || i > n) return 0;
  if (i == 0) return h0_tensor(n, s1, s2, t);
  if (i == n) return h0_tensor(n, dual_species(s1, n), dual_species(s2, n), 2 - t - n);
  // h^i(s1 (x) s2(t)) = h^1(next^{i-1}(s1) (x) s2(t+i-1)), and h^1(tau (x) s2(u))
  // is nonzero only for u = 0 and D(next tau) = s2.
  if (t + i - 1 != 0) return 0;
  Species tau = s1;
  for (int k = 0; k < i; ++k) tau = next_species(tau, n);
  return dual_species(tau, n) == s2 ? 1 : 0;
}

BigInt h_summand(int n, const Summand& e, int i) {
  if (e.is_line()) return h_line(n, i, e.twist);
  return h_spinor(n, e.species, i, e.twist);
}

BigInt ext_dim(int n, const Summand& a, const Summand& b, int i) {
  require_n3(n);
  check_summand(a, n);
  check_summand(b, n);
  if (i < 0 || i > n) return 0;
  const long shift = b.twist - a.twist;
  if (a.is_line() && b.is_line()) return h_line(n, i, shift);
  if (a.is_line()) return h_spinor(n, b.species, i, shift);
  const Species da = dual_species(a.species, n);
  if (b.is_line()) return h_spinor(n, da, i, shift + 1);
  return h_spinor_tensor(n, da, b.species, i, shift + 1);
}

std::optional<ExtObstruction> find_ext_obstruction(int n, const std::set<Summand>& summands) {
  for (int i = 1; i <= n; ++i) {
    for (const Summand& a : summands) {
      for (const Summand& b : summands) {
        BigInt d = ext_dim(n, a, b, i);
        if (d != 0) return ExtObstruction{a, b, i, d};
      }
    }
  }
  return std::nullopt;
}

bool is_quasi_exceptional(int n, const std::set<Summand>& summands) {
  if (summands.empty()) throw PreconditionError("quasi-exceptionality of an empty set");
  return !find_ext_obstruction(n, summands).has_value();
}

bool generates_sufficiently(int n, const std::set<Summand>& summands) {
  std::set<long> lines;
  std::set<Species> spinors;
  for (const Summand& s : summands) {
    if (s.is_line()) lines.insert(s.twist);
    else spinors.insert(s.species);
  }
  for (Species sp : species_of(n)) {
    if (!spinors.count(sp)) return false;
  }
  long run = 0;
  long last = 0;
  for (long t : lines) {
    run = (run > 0 && t == last + 1) ? run + 1 : 1;
    last = t;
    if (run >= n) return true;
  }
  return false;
}

int k0_rank(int n) { return n % 2 == 1 ? n + 1 : n + 2; }

const char* verdict_name(TiltingVerdict v) {
  switch (v) {
    case TiltingVerdict::Tilting: return "tilting";
    case TiltingVerdict::QuasiExceptionalNotGenerating: return "quasi-exceptional-not-generating";
    case TiltingVerdict::NotQuasiExceptional: return "not-quasi-exceptional";
  }
  return "?";
}

TiltingVerdict tilting_decision(int n, unsigned p, unsigned s) {
  require_n3(n);
  if (s < 1) throw PreconditionError("s must be at least 1");
  QuadricContext::make(n, p, s);
  if (s == 1) {
    return p > static_cast<unsigned>(n) ? TiltingVerdict::Tilting : TiltingVerdict::QuasiExceptionalNotGenerating;
  }
  if (n % 2 == 0) {
    return (n == 4 && p == 3 && s == 2) ? TiltingVerdict::Tilting : TiltingVerdict::NotQuasiExceptional;
  }
  return p >= static_cast<unsigned>(n) ? TiltingVerdict::Tilting : TiltingVerdict::NotQuasiExceptional;
}

CrossValidation cross_validate_tilting(int n, unsigned p, unsigned s) {
  const TiltingVerdict decided = tilting_decision(n, p, s);
  const QuadricContext ctx = QuadricContext::make(n, p, s);
  CrossValidation out{decided, false, "", pushforward::summand_closure(ctx, Summand::line(0))};
  const auto& certain = out.closure.certain;
  const auto& possible = out.closure.possible;

  switch (decided) {
    case TiltingVerdict::Tilting: {
      const bool qe = is_quasi_exceptional(n, possible);
      const bool gen = generates_sufficiently(n, certain);
      out.confirmed = qe && gen;
      out.evidence = std::string("possible summands ") + (qe ? "are" : "are not") +
                     " quasi-exceptional; certain summands " + (gen ? "generate" : "do not generate");
      break;
    }
    case TiltingVerdict::NotQuasiExceptional: {
      const auto obs = find_ext_obstruction(n, certain);
      out.confirmed = obs.has_value();
      out.evidence = obs ? "Ext^" + std::to_string(obs->degree) + "(" + obs->from.to_string() + ", " +
                               obs->to.to_string() + ") = " + to_string(obs->dimension)
                         : "no Ext obstruction among certain summands";
      break;
    }
    case TiltingVerdict::QuasiExceptionalNotGenerating: {
      const bool qe = is_quasi_exceptional(n, possible);
      const bool few = static_cast<long>(possible.size()) < k0_rank(n);
      out.confirmed = qe && few;
      out.evidence = std::to_string(possible.size()) + " distinct summands vs K_0 rank " +
                     std::to_string(k0_rank(n)) + (qe ? ", quasi-exceptional" : ", not quasi-exceptional");
      break;
    }
  }
  return out;
}

}  // namespace quadfrob::cohomology
