#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quadfrob/context.hpp"
#include "quadfrob/field.hpp"

namespace quadfrob {

// Spinor bundles: Sigma on odd-dimensional quadrics, Sigma_+ and Sigma_- on
// even-dimensional ones.
enum class Species { S, Plus, Minus };

const char* species_name(Species s);
bool species_valid(Species s, int n);
// The species present on Q_n: {S} or {Plus, Minus}.
std::vector<Species> species_of(int n);
// Rank of one spinor bundle: 2^((n-1)/2) for odd n, 2^(n/2 - 1) for even n.
BigInt spinor_rank(int n);

/// A line bundle O(twist) or a spinor bundle of the given species twisted by twist.
struct Summand {
  enum class Kind { Line, Spinor };
  Kind kind = Kind::Line;
  Species species = Species::S;  // ignored for lines
  long twist = 0;

  static Summand line(long t) { return {Kind::Line, Species::S, t}; }
  static Summand spinor(Species sp, long t) { return {Kind::Spinor, sp, t}; }

  bool is_line() const { return kind == Kind::Line; }
  Summand twisted(long by) const { return {kind, species, twist + by}; }

  // "O(-1)", "S(2)", "S+(0)", "S-(1)".
  std::string to_string() const;

  friend bool operator==(const Summand&, const Summand&) = default;
  friend auto operator<=>(const Summand&, const Summand&) = default;
};

// Parses the to_string() format; throws PreconditionError on bad input.
Summand parse_summand(const std::string& text);
// Throws PreconditionError if the species does not exist on Q_n.
void check_summand(const Summand& s, int n);
BigInt summand_rank(const Summand& s, int n);

struct SummandDescriptor {
  Summand summand;
  std::optional<BigInt> multiplicity;  // empty: presence known, count unknown
};

struct Decomposition {
  QuadricContext context;
  long source_twist = 0;
  std::vector<SummandDescriptor> summands;  // lines by decreasing twist, then spinors
  bool exact = true;

  // Sum of multiplicity * rank; only meaningful when exact.
  BigInt total_rank() const;
  BigInt line_rank() const;
  // Multiplicity b of the spinor part S_n(c)^b (0 when absent).
  BigInt spinor_multiplicity() const;
  std::optional<long> spinor_twist() const;
};

namespace pushforward {

// t = d_N + j + p c with 0 <= j < p.
struct NormalizedTwist {
  long j = 0;
  long c = 0;
};
NormalizedTwist normalize_twist(const QuadricContext& ctx, long t);

// F_*(O(t)) on Q_n for s = 1, n >= 3.
Decomposition decompose_one_step(const QuadricContext& ctx, long t);

// O(-t) is a summand of F^s_*(O(j)) iff 0 <= tq + j <= n(q-1).
bool line_presence(const QuadricContext& ctx, long j, long t);

// s = 1 windows for a spinor summand Sigma(-t):
//   line source F_*(O(j)):      d_N - p + 1 <= tp + j <= d_N - 1
//   spinor source F_*(S_n(j)):  d_N - p + 1 <= tp + j <= d_N
bool spinor_window_line_source(const QuadricContext& ctx, long j, long t);
bool spinor_window_spinor_source(const QuadricContext& ctx, long j, long t);
// The unique t satisfying the spinor-source window.
long spinor_source_spinor_twist(const QuadricContext& ctx, long j);

enum class SourceKind { Line, Spinor };

// Necessary condition for O(-t) to be a summand of F^s_*(O(j)) (lower bound 0)
// or of F^s_*(S_n(j)) (lower bound 1); upper bound n(q-1) in both cases.
bool necessary_window(const QuadricContext& ctx, SourceKind source, long j, long t);

struct Closure {
  std::set<Summand> certain;
  std::set<Summand> possible;
};

// Summands of F^s_*(start) with s = ctx.s, iterating single Frobenius steps.
// certain: provably present. possible: not excluded by the necessary windows.
// On even-dimensional quadrics a spinor child is recorded for both species.
Closure summand_closure(const QuadricContext& ctx, const Summand& start);

}  // namespace pushforward
}  // namespace quadfrob
