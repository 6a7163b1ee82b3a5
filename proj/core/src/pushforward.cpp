#include "quadfrob/pushforward.hpp"

#include <cctype>
#include <string>

#include "quadfrob/hilbert.hpp"

namespace quadfrob {

const char* species_name(Species s) {
  switch (s) {
    case Species::S: return "S";
    case Species::Plus: return "S+";
    case Species::Minus: return "S-";
  }
  return "?";
}

bool species_valid(Species s, int n) { return (s == Species::S) == (n % 2 == 1); }

std::vector<Species> species_of(int n) {
  if (n % 2 == 1) return {Species::S};
  return {Species::Plus, Species::Minus};
}

BigInt spinor_rank(int n) {
  if (n < 1) throw PreconditionError("spinor rank needs n >= 1");
  return BigInt(1) << (n % 2 == 1 ? (n - 1) / 2 : n / 2 - 1);
}

std::string Summand::to_string() const {
  const std::string head = is_line() ? "O" : species_name(species);
  return head + "(" + std::to_string(twist) + ")";
}

Summand parse_summand(const std::string& text) {
  auto fail = [&]() -> Summand {
    throw PreconditionError("cannot parse summand '" + text + "'; expected O(t), S(t), S+(t) or S-(t)");
  };
  const auto open = text.find('(');
  if (open == std::string::npos || text.empty() || text.back() != ')') return fail();
  const std::string head = text.substr(0, open);
  const std::string body = text.substr(open + 1, text.size() - open - 2);
  if (body.empty()) return fail();
  std::size_t used = 0;
  long twist = 0;
  try {
    twist = std::stol(body, &used);
  } catch (const std::exception&) {
    return fail();
  }
  if (used != body.size()) return fail();
  if (head == "O") return Summand::line(twist);
  if (head == "S") return Summand::spinor(Species::S, twist);
  if (head == "S+") return Summand::spinor(Species::Plus, twist);
  if (head == "S-") return Summand::spinor(Species::Minus, twist);
  return fail();
}

void check_summand(const Summand& s, int n) {
  if (!s.is_line() && !species_valid(s.species, n)) {
    throw PreconditionError(std::string("spinor species ") + species_name(s.species) + " does not exist on Q_" +
                            std::to_string(n));
  }
}

BigInt summand_rank(const Summand& s, int n) { return s.is_line() ? BigInt(1) : spinor_rank(n); }

BigInt Decomposition::total_rank() const {
  BigInt r = 0;
  for (const auto& d : summands) {
    if (d.multiplicity) r += *d.multiplicity * summand_rank(d.summand, context.n);
  }
  return r;
}

BigInt Decomposition::line_rank() const {
  BigInt r = 0;
  for (const auto& d : summands) {
    if (d.summand.is_line() && d.multiplicity) r += *d.multiplicity;
  }
  return r;
}

BigInt Decomposition::spinor_multiplicity() const {
  for (const auto& d : summands) {
    if (!d.summand.is_line()) return d.multiplicity.value_or(0);
  }
  return 0;
}

std::optional<long> Decomposition::spinor_twist() const {
  for (const auto& d : summands) {
    if (!d.summand.is_line()) return d.summand.twist;
  }
  return std::nullopt;
}

namespace pushforward {
namespace {

void require_n3(const QuadricContext& ctx) {
  if (ctx.n < 3) {
    throw PreconditionError("decompositions need n >= 3; on Q_2 the Picard group is not generated by O(1)");
  }
}

void require_s1(const QuadricContext& ctx) {
  if (ctx.s != 1) throw PreconditionError("single-step statement needs s = 1");
}

QuadricContext single_step(const QuadricContext& ctx) { return QuadricContext::make(ctx.n, ctx.p, 1); }

void add_spinors(std::set<Summand>& out, int n, long twist) {
  for (Species sp : species_of(n)) out.insert(Summand::spinor(sp, twist));
}

void line_children(const QuadricContext& step, long a, std::set<Summand>& out) {
  const Decomposition d = decompose_one_step(step, a);
  for (const auto& s : d.summands) out.insert(s.summand);
}

}  // namespace

NormalizedTwist normalize_twist(const QuadricContext& ctx, long t) {
  const long shifted = t - ctx.dN();
  return {floor_mod(shifted, ctx.q), floor_div(shifted, ctx.q)};
}

Decomposition decompose_one_step(const QuadricContext& ctx, long t) {
  require_n3(ctx);
  require_s1(ctx);
  const long p = ctx.q;
  const long dN = ctx.dN();
  const auto [j, c] = normalize_twist(ctx, t);

  Decomposition out{ctx, t, {}, true};
  // |t' p + j| <= d_N, scanned so that the line twist c - t' decreases.
  for (long tp = -floor_div(dN + j, p); tp * p + j <= dN; ++tp) {
    const BigInt a = hilbert::dim_C(ctx, dN + tp * p + j);
    if (a <= 0) throw InternalMismatch("empty line summand inside the decomposition window");
    out.summands.push_back({Summand::line(c - tp), a});
  }
  const BigInt b = (BigInt(1) << (ctx.N / 2)) * hilbert::gamma(ctx, j);
  if (b > 0) {
    for (Species sp : species_of(ctx.n)) out.summands.push_back({Summand::spinor(sp, 1 + c), b});
  }
  const BigInt expected = BigInt(ipow(p, static_cast<unsigned>(ctx.n)));
  if (out.total_rank() != expected) {
    throw InternalMismatch("decomposition of O(" + std::to_string(t) + ") has rank " + to_string(out.total_rank()) +
                           ", expected " + to_string(expected));
  }
  return out;
}

bool line_presence(const QuadricContext& ctx, long j, long t) {
  require_n3(ctx);
  const long v = t * ctx.q + j;
  return 0 <= v && v <= ctx.n * (ctx.q - 1);
}

bool spinor_window_line_source(const QuadricContext& ctx, long j, long t) {
  require_n3(ctx);
  require_s1(ctx);
  const long v = t * ctx.q + j;
  return ctx.dN() - ctx.q + 1 <= v && v <= ctx.dN() - 1;
}

bool spinor_window_spinor_source(const QuadricContext& ctx, long j, long t) {
  require_n3(ctx);
  require_s1(ctx);
  const long v = t * ctx.q + j;
  return ctx.dN() - ctx.q + 1 <= v && v <= ctx.dN();
}

long spinor_source_spinor_twist(const QuadricContext& ctx, long j) {
  require_n3(ctx);
  require_s1(ctx);
  // The window has length p, so exactly one t fits.
  return floor_div(ctx.dN() - j, ctx.q);
}

bool necessary_window(const QuadricContext& ctx, SourceKind source, long j, long t) {
  const long v = t * ctx.q + j;
  const long lower = source == SourceKind::Line ? 0 : 1;
  return lower <= v && v <= ctx.n * (ctx.q - 1);
}

Closure summand_closure(const QuadricContext& ctx, const Summand& start) {
  require_n3(ctx);
  check_summand(start, ctx.n);
  const QuadricContext step = single_step(ctx);
  const long p = step.q;
  Closure cur{{start}, {start}};
  for (unsigned k = 0; k < ctx.s; ++k) {
    Closure next;
    for (const Summand& x : cur.certain) {
      if (x.is_line()) {
        line_children(step, x.twist, next.certain);
      } else {
        add_spinors(next.certain, ctx.n, -spinor_source_spinor_twist(step, x.twist));
      }
    }
    for (const Summand& x : cur.possible) {
      if (x.is_line()) {
        line_children(step, x.twist, next.possible);
        continue;
      }
      add_spinors(next.possible, ctx.n, -spinor_source_spinor_twist(step, x.twist));
      // Lines allowed by the necessary window 1 <= tp + a <= n(p-1).
      for (long t = floor_div(-x.twist, p); t * p + x.twist <= ctx.n * (p - 1); ++t) {
        if (necessary_window(step, SourceKind::Spinor, x.twist, t)) next.possible.insert(Summand::line(-t));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace pushforward
}  // namespace quadfrob
