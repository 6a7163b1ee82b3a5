#include <doctest.h>

#include "quadfrob/graded_pieces.hpp"
#include "quadfrob/pushforward.hpp"

using namespace quadfrob;
using namespace quadfrob::pushforward;

namespace {

BigInt multiplicity_of(const Decomposition& d, const Summand& s) {
  for (const auto& sd : d.summands) {
    if (sd.summand == s) return sd.multiplicity.value_or(-1);
  }
  return 0;
}

std::set<Summand> spinors(const std::set<Summand>& all) {
  std::set<Summand> out;
  for (const auto& s : all) {
    if (!s.is_line()) out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("summand names round trip") {
  CHECK(Summand::line(-1).to_string() == "O(-1)");
  CHECK(Summand::spinor(Species::Plus, 0).to_string() == "S+(0)");
  for (const char* text : {"O(3)", "O(-12)", "S(0)", "S+(-1)", "S-(7)"}) CHECK(parse_summand(text).to_string() == text);
  for (const char* bad : {"", "O", "O()", "O(1", "T(1)", "O(1x)", "S*(1)"}) CHECK_THROWS_AS(parse_summand(bad), PreconditionError);
  CHECK_THROWS_AS(check_summand(Summand::spinor(Species::Plus, 0), 3), PreconditionError);
  CHECK_THROWS_AS(check_summand(Summand::spinor(Species::S, 0), 4), PreconditionError);
  CHECK_NOTHROW(check_summand(Summand::line(5), 4));
  CHECK(spinor_rank(3) == 2);
  CHECK(spinor_rank(4) == 2);
  CHECK(spinor_rank(5) == 4);
  CHECK(spinor_rank(6) == 4);
  CHECK(summand_rank(Summand::spinor(Species::S, 1), 7) == 8);
  CHECK(species_of(4).size() == 2);
  CHECK(species_of(5) == std::vector<Species>{Species::S});
}

TEST_CASE("twist normalization") {
  const auto ctx = QuadricContext::make(3, 3);
  for (long t = -20; t <= 20; ++t) {
    const auto nt = normalize_twist(ctx, t);
    CHECK(nt.j >= 0);
    CHECK(nt.j < 3);
    CHECK(ctx.dN() + nt.j + 3 * nt.c == t);
  }
}

TEST_CASE("one-step decompositions on Q3 over F3") {
  const auto ctx = QuadricContext::make(3, 3);

  const auto d3 = decompose_one_step(ctx, 3);
  CHECK(d3.exact);
  CHECK(multiplicity_of(d3, Summand::line(1)) == 1);
  CHECK(multiplicity_of(d3, Summand::line(0)) == 25);
  CHECK(multiplicity_of(d3, Summand::line(-1)) == 1);
  CHECK(d3.spinor_multiplicity() == 0);
  CHECK_FALSE(d3.spinor_twist().has_value());
  CHECK(d3.total_rank() == 27);

  const auto d4 = decompose_one_step(ctx, 4);
  CHECK(multiplicity_of(d4, Summand::line(1)) == 5);
  CHECK(multiplicity_of(d4, Summand::line(0)) == 14);
  CHECK(multiplicity_of(d4, Summand::spinor(Species::S, 1)) == 4);
  CHECK(d4.spinor_twist() == std::optional<long>(1));
  CHECK(d4.line_rank() == 19);
  CHECK(d4.total_rank() == 27);

  // Twisting the source by p twists every summand by one.
  const auto d7 = decompose_one_step(ctx, 7);
  CHECK(multiplicity_of(d7, Summand::line(2)) == 5);
  CHECK(multiplicity_of(d7, Summand::spinor(Species::S, 2)) == 4);
}

TEST_CASE("line multiplicities match the brute-force C table") {
  // An independent route: dim C_k computed by Macaulay matrices.
  const auto ctx = QuadricContext::make(3, 3);
  for (long t = 0; t < 3; ++t) {
    const auto d = decompose_one_step(ctx, t);
    const auto nt = normalize_twist(ctx, t);
    for (long tp = -3; tp <= 3; ++tp) {
      const long deg = ctx.dN() + tp * 3 + nt.j;
      const BigInt expected = std::abs(tp * 3 + nt.j) <= ctx.dN() ? graded::brute_force_dim(ctx, Algebra::C, deg) : 0;
      CHECK(multiplicity_of(d, Summand::line(nt.c - tp)) == expected);
    }
  }
}

TEST_CASE("rank identity on the grid") {
  for (int n = 3; n <= 6; ++n) {
    for (unsigned p : {3u, 5u, 7u}) {
      const auto ctx = QuadricContext::make(n, p);
      for (long t = -static_cast<long>(p); t <= 2 * static_cast<long>(p); ++t) {
        const auto d = decompose_one_step(ctx, t);
        CHECK(d.total_rank() == BigInt(ipow(p, static_cast<unsigned>(n))));
        // No spinor part exactly when t = d_N mod p.
        CHECK((d.spinor_multiplicity() == 0) == (floor_mod(t - ctx.dN(), p) == 0));
        if (n % 2 == 0 && d.spinor_multiplicity() > 0) {
          CHECK(multiplicity_of(d, Summand::spinor(Species::Plus, *d.spinor_twist())) ==
                multiplicity_of(d, Summand::spinor(Species::Minus, *d.spinor_twist())));
        }
      }
    }
  }
}

TEST_CASE("windows") {
  const auto q3 = QuadricContext::make(3, 3);
  CHECK(line_presence(q3, 0, 0));
  CHECK(line_presence(q3, 0, 2));
  CHECK_FALSE(line_presence(q3, 0, 3));
  CHECK_FALSE(line_presence(q3, 0, -1));
  CHECK(line_presence(QuadricContext::make(3, 3, 2), 4, 0));

  CHECK(spinor_window_line_source(q3, 4, -1));
  CHECK_FALSE(spinor_window_line_source(q3, 4, 0));
  for (long t = -3; t <= 3; ++t) CHECK_FALSE(spinor_window_line_source(q3, 0, t));
  CHECK(spinor_window_spinor_source(q3, 0, 1));
  CHECK(spinor_source_spinor_twist(q3, 0) == 1);
  for (long j = 0; j < 3; ++j) {
    int hits = 0;
    for (long t = -5; t <= 5; ++t) hits += spinor_window_spinor_source(q3, j, t) ? 1 : 0;
    CHECK(hits == 1);
    CHECK(spinor_window_spinor_source(q3, j, spinor_source_spinor_twist(q3, j)));
  }

  const auto q4 = QuadricContext::make(4, 3, 2);
  CHECK_FALSE(necessary_window(q4, SourceKind::Line, 0, 4));
  CHECK(necessary_window(q4, SourceKind::Line, 0, 0));
  CHECK_FALSE(necessary_window(q4, SourceKind::Spinor, 0, 0));
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(decompose_one_step(QuadricContext::make(2, 3), 0), PreconditionError);
  CHECK_THROWS_AS(decompose_one_step(QuadricContext::make(3, 3, 2), 0), PreconditionError);
  CHECK_THROWS_AS(summand_closure(QuadricContext::make(3, 3), Summand::spinor(Species::Plus, 0)), PreconditionError);
  CHECK_THROWS_AS(QuadricContext::make(3, 2), PreconditionError);
  CHECK_THROWS_AS(QuadricContext::make(3, 9), PreconditionError);
  CHECK_THROWS_AS(QuadricContext::make(1, 3), PreconditionError);
  CHECK_THROWS_AS(QuadricContext::make(3, 3, 0), PreconditionError);
}

TEST_CASE("closure of iterated push-forwards") {
  // One step from a line bundle reproduces the exact decomposition.
  const auto q3 = QuadricContext::make(3, 3);
  const auto one = summand_closure(q3, Summand::line(4));
  const auto d4 = decompose_one_step(q3, 4);
  std::set<Summand> exact;
  for (const auto& sd : d4.summands) exact.insert(sd.summand);
  CHECK(one.certain == exact);
  CHECK(one.possible == exact);

  const auto c432 = summand_closure(QuadricContext::make(4, 3, 2), Summand::line(0));
  CHECK(spinors(c432.certain) ==
        std::set<Summand>{Summand::spinor(Species::Plus, -1), Summand::spinor(Species::Minus, -1)});

  const auto c433 = summand_closure(QuadricContext::make(4, 3, 3), Summand::line(0));
  CHECK(spinors(c433.certain).size() == 4);
  CHECK(c433.certain.count(Summand::spinor(Species::Plus, -2)) == 1);
  CHECK(c433.certain.count(Summand::spinor(Species::Minus, -1)) == 1);

  const auto c532 = summand_closure(QuadricContext::make(5, 3, 2), Summand::line(0));
  CHECK(spinors(c532.certain) ==
        std::set<Summand>{Summand::spinor(Species::S, -1), Summand::spinor(Species::S, -2)});

  const auto c352 = summand_closure(QuadricContext::make(3, 5, 2), Summand::line(0));
  CHECK(spinors(c352.possible) == std::set<Summand>{Summand::spinor(Species::S, -1)});

  // certain is always inside possible.
  for (int n = 3; n <= 6; ++n) {
    for (unsigned p : {3u, 5u}) {
      for (unsigned s = 1; s <= 3; ++s) {
        const auto c = summand_closure(QuadricContext::make(n, p, s), Summand::line(0));
        CHECK(std::includes(c.possible.begin(), c.possible.end(), c.certain.begin(), c.certain.end()));
        CHECK(c.certain.count(Summand::line(0)) == 1);
      }
    }
  }
}
