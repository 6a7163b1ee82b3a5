#include "quadfrob/graded_pieces.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

namespace quadfrob::graded {
namespace {

// Linear algebra of one degree-D slice of S / (generators).
//
// Monomial generators are handled combinatorially: a monomial divisible by
// one of them lies in the ideal, so only the remaining "standard" monomials
// become matrix columns. When every other generator is parity-homogeneous
// (all its terms have the same exponent parities, as x_0^2 + ... + x_N^2
// does), each standard monomial's parity mask is preserved by the ideal, so
// the Macaulay matrix is block diagonal with one block per mask.
class SliceEngine {
 public:
  struct Block {
    std::vector<std::size_t> columns;  // ambient indices, increasing
    FpMatrix ideal;                    // reduced basis of the ideal's part
    std::vector<std::size_t> pivots;   // pivot (block-local) column per ideal row
  };

  SliceEngine(const std::vector<Polynomial>& generators, bool want_parity, unsigned degree, ColumnBudget budget)
      : field_(ring_of(generators).first), nvars_(ring_of(generators).second), degree_(degree) {
    bool parity = want_parity && nvars_ <= 64;
    for (const auto& g : generators) {
      if (!g.is_homogeneous()) throw PreconditionError("generator " + g.to_string() + " is not homogeneous");
      if (g.is_zero()) continue;
      if (g.is_monomial()) {
        monomial_gens_.push_back(g.terms().begin()->first);
      } else {
        if (!g.parity_mask()) parity = false;
        other_gens_.push_back(&g);
      }
    }
    parity_ = parity;
    build(budget);
  }

  bool parity_graded() const { return parity_; }
  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& ambient() const { return ambient_; }
  std::size_t killed_count() const { return killed_.size(); }
  const std::vector<std::size_t>& killed() const { return killed_; }
  const std::map<std::uint64_t, Block>& blocks() const { return blocks_; }

  std::size_t ideal_dimension() const {
    std::size_t dim = killed_.size();
    for (const auto& [mask, b] : blocks_) dim += b.ideal.rows();
    return dim;
  }

  bool is_killed(const Monomial& m) const {
    return std::any_of(monomial_gens_.begin(), monomial_gens_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
  }

  std::uint64_t mask_of(const Monomial& m) const { return parity_ ? m.parity_mask() : 0; }

  // Block and block-local column of a standard monomial of this degree.
  std::optional<std::pair<std::uint64_t, std::size_t>> locate(const Monomial& m) const {
    auto it = standard_.find(m);
    if (it == standard_.end()) return std::nullopt;
    return it->second;
  }

  // Reduce a block vector modulo the ideal rows of that block.
  void reduce_modulo_ideal(const Block& b, std::span<std::uint32_t> v) const {
    const std::uint64_t p = field_.modulus();
    for (std::size_t r = 0; r < b.ideal.rows(); ++r) {
      const std::uint32_t f = v[b.pivots[r]];
      if (f == 0) continue;
      auto row = b.ideal.row(r);
      for (std::size_t k = b.pivots[r]; k < v.size(); ++k) {
        if (row[k] != 0) v[k] = static_cast<std::uint32_t>((v[k] + (p - f) * row[k]) % p);
      }
    }
  }

 private:
  static std::pair<PrimeField, std::size_t> ring_of(const std::vector<Polynomial>& generators) {
    if (generators.empty()) throw PreconditionError("empty generator list");
    const auto& first = generators.front();
    for (const auto& g : generators) {
      if (!(g.field() == first.field()) || g.nvars() != first.nvars()) {
        throw PreconditionError("generators live in different polynomial rings");
      }
    }
    return {first.field(), first.nvars()};
  }

  void build(ColumnBudget budget) {
    const BigInt ambient_size = binomial_truncated(static_cast<long>(degree_ + nvars_ - 1),
                                                   static_cast<long>(nvars_ - 1));
    if (ambient_size > BigInt(budget.max_columns) * 64) {
      throw PreconditionError("degree " + std::to_string(degree_) + " slice has " + to_string(ambient_size) +
                              " monomials; raise the column budget to proceed");
    }
    ambient_ = monomials_of_degree(nvars_, degree_);
    for (std::size_t idx = 0; idx < ambient_.size(); ++idx) {
      const Monomial& m = ambient_[idx];
      if (is_killed(m)) {
        killed_.push_back(idx);
        continue;
      }
      const std::uint64_t mask = mask_of(m);
      Block& b = blocks_.try_emplace(mask, Block{{}, FpMatrix(field_, 0, 0), {}}).first->second;
      standard_.emplace(m, std::make_pair(mask, b.columns.size()));
      b.columns.push_back(idx);
    }
    for (auto& [mask, b] : blocks_) {
      if (b.columns.size() > budget.max_columns) {
        throw PreconditionError("dense block with " + std::to_string(b.columns.size()) +
                                " columns exceeds the column budget of " + std::to_string(budget.max_columns));
      }
      b.ideal = FpMatrix(field_, 0, b.columns.size());
    }

    std::vector<std::uint32_t> scratch;
    for (const Polynomial* g : other_gens_) {
      const unsigned k = *g->degree();
      if (k > degree_) continue;
      for (const Monomial& m : monomials_of_degree(nvars_, degree_ - k)) {
        if (is_killed(m)) continue;
        std::optional<std::uint64_t> target;
        std::vector<std::pair<std::size_t, std::uint32_t>> entries;
        for (const auto& [t, c] : g->terms()) {
          auto loc = locate(m * t);
          if (!loc) continue;
          target = loc->first;
          entries.emplace_back(loc->second, c);
        }
        if (entries.empty()) continue;
        Block& b = blocks_.at(*target);
        scratch.assign(b.columns.size(), 0);
        for (auto [col, c] : entries) scratch[col] = field_.add(scratch[col], c);
        b.ideal.append_row(scratch);
      }
    }
    for (auto& [mask, b] : blocks_) {
      b.ideal = b.ideal.row_basis();
      b.pivots = b.ideal.pivot_columns();
    }
  }

  PrimeField field_;
  std::size_t nvars_;
  unsigned degree_;
  bool parity_ = false;
  std::vector<Monomial> monomial_gens_;
  std::vector<const Polynomial*> other_gens_;
  std::vector<Monomial> ambient_;
  std::vector<std::size_t> killed_;
  std::map<std::uint64_t, Block> blocks_;
  std::unordered_map<Monomial, std::pair<std::uint64_t, std::size_t>, MonomialHash> standard_;
};

// Rows supported on disjoint increasing index sets, each group already in
// reduced echelon form over its own support, merged into one reduced basis
// of the full ambient space.
struct SupportedRows {
  std::vector<std::size_t> support;
  FpMatrix rows;
};

FpMatrix merge_reduced(const PrimeField& field, std::size_t ambient_size, const std::vector<SupportedRows>& groups) {
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> keyed;
  for (const auto& g : groups) {
    for (std::size_t r = 0; r < g.rows.rows(); ++r) {
      std::vector<std::uint32_t> full(ambient_size, 0);
      std::optional<std::size_t> pivot;
      for (std::size_t k = 0; k < g.support.size(); ++k) {
        const std::uint32_t v = g.rows.at(r, k);
        if (v == 0) continue;
        full[g.support[k]] = v;
        if (!pivot) pivot = g.support[k];
      }
      if (pivot) keyed.emplace_back(*pivot, std::move(full));
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  FpMatrix out(field, 0, ambient_size);
  for (const auto& [pivot, row] : keyed) out.append_row(row);
  return out;
}

void check_homogeneous(const Polynomial& g) {
  if (!g.is_homogeneous()) throw PreconditionError("multiplier " + g.to_string() + " is not homogeneous");
}

// Images of the monomials of S_d under multiplication by g, reduced modulo
// the ideal, grouped by the block they land in. Sources whose image is zero
// are collected separately.
struct ColonSystem {
  std::vector<Monomial> sources;  // ambient basis of S_d
  std::vector<std::size_t> zero_image;
  struct Group {
    std::vector<std::size_t> sources;  // increasing ambient indices into S_d
    FpMatrix images;                   // one row per source, block columns
  };
  std::map<std::uint64_t, Group> groups;
};

ColonSystem build_colon_system(const SliceEngine& engine, const Polynomial& g, unsigned d) {
  ColonSystem sys;
  sys.sources = monomials_of_degree(engine.nvars(), d);
  const PrimeField& field = engine.field();
  std::vector<std::uint32_t> row;
  for (std::size_t idx = 0; idx < sys.sources.size(); ++idx) {
    const Monomial& m = sys.sources[idx];
    std::optional<std::uint64_t> target;
    std::vector<std::pair<std::size_t, std::uint32_t>> entries;
    for (const auto& [t, c] : g.terms()) {
      auto loc = engine.locate(m * t);
      if (!loc) continue;
      if (target && *target != loc->first) {
        throw InternalMismatch("colon image spans several parity blocks");
      }
      target = loc->first;
      entries.emplace_back(loc->second, c);
    }
    if (entries.empty()) {
      sys.zero_image.push_back(idx);
      continue;
    }
    const auto& block = engine.blocks().at(*target);
    row.assign(block.columns.size(), 0);
    for (auto [col, c] : entries) row[col] = field.add(row[col], c);
    engine.reduce_modulo_ideal(block, row);
    if (std::all_of(row.begin(), row.end(), [](std::uint32_t v) { return v == 0; })) {
      sys.zero_image.push_back(idx);
      continue;
    }
    auto [it, inserted] = sys.groups.try_emplace(*target, ColonSystem::Group{{}, FpMatrix(field, 0, row.size())});
    it->second.sources.push_back(idx);
    it->second.images.append_row(row);
  }
  return sys;
}

bool wants_parity(const Polynomial& g) { return g.parity_mask().has_value(); }

void check_budget_ambient(std::size_t nvars, unsigned d, ColumnBudget budget) {
  const BigInt size = binomial_truncated(static_cast<long>(d + nvars - 1), static_cast<long>(nvars - 1));
  if (size > BigInt(budget.max_columns)) {
    throw PreconditionError("S_" + std::to_string(d) + " has " + to_string(size) +
                            " monomials, above the column budget of " + std::to_string(budget.max_columns));
  }
}

}  // namespace

GradedPiece ideal_piece(const std::vector<Polynomial>& generators, unsigned d, ColumnBudget budget) {
  SliceEngine engine(generators, true, d, budget);
  check_budget_ambient(engine.nvars(), d, budget);
  const std::size_t size = engine.ambient().size();
  std::vector<SupportedRows> groups;
  for (std::size_t idx : engine.killed()) {
    FpMatrix unit(engine.field(), 1, 1);
    unit.set_raw(0, 0, 1);
    groups.push_back({{idx}, std::move(unit)});
  }
  for (const auto& [mask, b] : engine.blocks()) groups.push_back({b.columns, b.ideal});
  return GradedPiece{d, engine.ambient(), merge_reduced(engine.field(), size, groups)};
}

BigInt quotient_dim(const std::vector<Polynomial>& generators, unsigned d, ColumnBudget budget) {
  SliceEngine engine(generators, true, d, budget);
  return BigInt(engine.ambient().size()) - BigInt(engine.ideal_dimension());
}

GradedPiece colon_piece(const std::vector<Polynomial>& generators, const Polynomial& g, unsigned d,
                        ColumnBudget budget) {
  check_homogeneous(g);
  if (generators.empty()) throw PreconditionError("empty generator list");
  const std::size_t nvars = generators.front().nvars();
  if (g.nvars() != nvars || !(g.field() == generators.front().field())) {
    throw PreconditionError("multiplier lives in a different polynomial ring");
  }
  check_budget_ambient(nvars, d, budget);
  const PrimeField field = g.field();
  if (g.is_zero()) {
    auto ambient = monomials_of_degree(nvars, d);
    return GradedPiece{d, ambient, FpMatrix::identity(field, ambient.size())};
  }
  SliceEngine engine(generators, wants_parity(g), d + *g.degree(), budget);
  ColonSystem sys = build_colon_system(engine, g, d);

  std::vector<SupportedRows> groups;
  for (std::size_t idx : sys.zero_image) {
    FpMatrix unit(field, 1, 1);
    unit.set_raw(0, 0, 1);
    groups.push_back({{idx}, std::move(unit)});
  }
  for (const auto& [mask, grp] : sys.groups) {
    // Left kernel of the image matrix: coefficient vectors c with c * images = 0.
    FpMatrix left = kernel_basis(grp.images.transpose()).transpose();
    groups.push_back({grp.sources, left.row_basis()});
  }
  return GradedPiece{d, sys.sources, merge_reduced(field, sys.sources.size(), groups)};
}

BigInt multiplication_rank(const std::vector<Polynomial>& generators, const Polynomial& g, unsigned d,
                           ColumnBudget budget) {
  check_homogeneous(g);
  if (g.is_zero()) return 0;
  SliceEngine engine(generators, wants_parity(g), d + *g.degree(), budget);
  ColonSystem sys = build_colon_system(engine, g, d);
  BigInt rank = 0;
  for (const auto& [mask, grp] : sys.groups) rank += grp.images.rank();
  return rank;
}

std::vector<Polynomial> quadric_ideal(const PrimeField& field, int N, long q) {
  const std::size_t nvars = static_cast<std::size_t>(N) + 1;
  std::vector<Polynomial> gens{sum_of_squares(field, nvars)};
  for (std::size_t i = 1; i < nvars; ++i) {
    gens.push_back(Polynomial::term(field, Monomial::variable(nvars, i, static_cast<std::uint32_t>(q))));
  }
  return gens;
}

BigInt brute_force_dim(const QuadricContext& ctx, Algebra algebra, long i, ColumnBudget budget) {
  if (i < 0) return 0;
  const PrimeField field = ctx.field();
  auto gens = quadric_ideal(field, ctx.N, ctx.q);
  const std::size_t nvars = static_cast<std::size_t>(ctx.N) + 1;
  const Polynomial x0q = Polynomial::term(field, Monomial::variable(nvars, 0, static_cast<std::uint32_t>(ctx.q)));
  const unsigned d = static_cast<unsigned>(i);
  switch (algebra) {
    case Algebra::A:
      return quotient_dim(gens, d, budget);
    case Algebra::B:
      gens.push_back(x0q);
      return quotient_dim(gens, d, budget);
    case Algebra::C:
      // C_i embeds in A_{i+q} as the image of multiplication by x_0^q.
      return multiplication_rank(gens, x0q, d, budget);
  }
  throw PreconditionError("unknown algebra");
}

bool quotient_statement_in_range(unsigned p, unsigned N, unsigned e, unsigned d) {
  return e < p && 2ul * (d + e) <= static_cast<unsigned long>(N + 1) * (p - 1);
}

namespace {

struct DiffSetup {
  PrimeField field;
  std::size_t nvars;
  std::vector<Polynomial> frobenius_gens;
  Polynomial squares;
};

DiffSetup diff_setup(unsigned p, unsigned N, unsigned e, unsigned d) {
  PrimeField field(p);
  if (!quotient_statement_in_range(p, N, e, d)) {
    throw PreconditionError("(e=" + std::to_string(e) + ", d=" + std::to_string(d) +
                            ") lies outside 0 <= e < p, d + e <= (N+1)(p-1)/2");
  }
  const std::size_t nvars = N + 1;
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < nvars; ++i) gens.push_back(Polynomial::term(field, Monomial::variable(nvars, i, p)));
  return DiffSetup{field, nvars, std::move(gens), sum_of_squares(field, nvars)};
}

}  // namespace

bool verify_diff_new(unsigned p, unsigned N, unsigned e, unsigned d, ColumnBudget budget) {
  DiffSetup s = diff_setup(p, N, e, d);
  const GradedPiece colon = colon_piece(s.frobenius_gens, s.squares.pow(e), d, budget);
  auto rhs_gens = s.frobenius_gens;
  rhs_gens.push_back(s.squares);
  const GradedPiece rhs = ideal_piece(rhs_gens, d, budget);
  return subspace_contains(rhs.basis, colon.basis);
}

bool verify_diff(unsigned p, unsigned N, unsigned e, unsigned d, ColumnBudget budget) {
  DiffSetup s = diff_setup(p, N, e, d);
  const GradedPiece colon = colon_piece(s.frobenius_gens, s.squares.pow(e), d, budget);
  auto rhs_gens = s.frobenius_gens;
  rhs_gens.push_back(s.squares.pow(p - e));
  const GradedPiece rhs = ideal_piece(rhs_gens, d, budget);
  return subspace_equal(colon.basis, rhs.basis);
}

}  // namespace quadfrob::graded
