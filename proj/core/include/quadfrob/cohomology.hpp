#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "quadfrob/context.hpp"
#include "quadfrob/field.hpp"
#include "quadfrob/pushforward.hpp"

namespace quadfrob::cohomology {

// Sigma^* = D(Sigma)(1) where D is the identity for odd n and n = 0 mod 4
// and swaps Sigma_+ and Sigma_- for n = 2 mod 4.
Species dual_species(Species s, int n);
// Dual of Sigma as (species, twist shift); the shift is always +1.
std::pair<Species, long> dual_spinor(Species s, int n);

// Species of the quotient in 0 -> Sigma' -> O^r -> next(Sigma')(1) -> 0:
// identity for odd n, swap for every even n.
Species next_species(Species s, int n);
Species prev_species(Species s, int n);

// 2^[N/2], the rank of the trivial bundle in those sequences.
BigInt sequence_rank(int n);

// h^i(Q_n, O(t)).
BigInt h_line(int n, int i, long t);
// h^i(Q_n, Sigma(t)) for a spinor of the given species.
BigInt h_spinor(int n, Species s, int i, long t);
// h^0(Sigma(t)) = 2^[N/2] binom(t + n - 1, n) for t >= 1, else 0.
BigInt h0_spinor(int n, long t);
// The same value computed from h^0(Sigma(t)) = r h^0(O(t-1)) - h^0(Sigma'(t-1)).
BigInt h0_spinor_recursive(int n, Species s, long t);

// h^i(Q_n, Sigma_1 (x) Sigma_2 (t)).
BigInt h_spinor_tensor(int n, Species s1, Species s2, int i, long t);
// h^1(Sigma_1 (x) Sigma_2) from the case table (twist 0).
BigInt h1_table(int n, Species s1, Species s2);

// h^i of any summand.
BigInt h_summand(int n, const Summand& e, int i);

// dim Ext^i(a, b) on Q_n.
BigInt ext_dim(int n, const Summand& a, const Summand& b, int i);

bool is_quasi_exceptional(int n, const std::set<Summand>& summands);

struct ExtObstruction {
  Summand from;
  Summand to;
  int degree = 0;
  BigInt dimension;
};
// First (a, b, i) with i in [1, n] and Ext^i(a, b) != 0, searching i = 1 first.
std::optional<ExtObstruction> find_ext_obstruction(int n, const std::set<Summand>& summands);

// n consecutive line twists plus a twist of every spinor species.
bool generates_sufficiently(int n, const std::set<Summand>& summands);

// Rank of the Grothendieck group of Q_n: n + 1 (n odd) or n + 2 (n even).
int k0_rank(int n);

enum class TiltingVerdict { Tilting, QuasiExceptionalNotGenerating, NotQuasiExceptional };
const char* verdict_name(TiltingVerdict v);

// Verdict on F^s_*(O) over Q_n from the case analysis.
TiltingVerdict tilting_decision(int n, unsigned p, unsigned s);

struct CrossValidation {
  TiltingVerdict decided;
  bool confirmed = false;
  std::string evidence;
  pushforward::Closure closure;
};
// Re-derives the verdict from the summand closure and Ext computations.
CrossValidation cross_validate_tilting(int n, unsigned p, unsigned s);

}  // namespace quadfrob::cohomology
