#include "commands.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadfrob/cohomology.hpp"
#include "quadfrob/hilbert.hpp"
#include "quadfrob/matfac.hpp"
#include "quadfrob/pushforward.hpp"
#include "suites.hpp"

namespace quadfrob::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return to_string(v);
}

Json header(const std::string& command) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

void put_context(Json& j, const QuadricContext& ctx) {
  j["n"] = ctx.n;
  j["p"] = ctx.p;
  j["s"] = ctx.s;
  j["q"] = ctx.q;
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto fail = [&]() -> std::pair<long, long> {
    throw PreconditionError("range '" + text + "' is not of the form lo..hi");
  };
  if (dots == std::string::npos) return fail();
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo_s = text.substr(0, dots);
    const std::string hi_s = text.substr(dots + 2);
    const long lo = std::stol(lo_s, &used_lo);
    const long hi = std::stol(hi_s, &used_hi);
    if (used_lo != lo_s.size() || used_hi != hi_s.size() || lo > hi) return fail();
    return {lo, hi};
  } catch (const std::logic_error&) {
    return fail();
  }
}

Json terms_json(const Polynomial& f) {
  Json terms = Json::array();
  // Descending monomial order, the same order used for printing.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    terms.push_back({{"coeff", f.field().symmetric(it->second)}, {"exponents", it->first.exponents()}});
  }
  return terms;
}

Json matrix_json(const matfac::PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(terms_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json summand_json(const Summand& s, const std::optional<BigInt>& mult) {
  Json j;
  j["kind"] = s.is_line() ? "line" : "spinor";
  if (!s.is_line()) j["species"] = species_name(s.species);
  j["twist"] = s.twist;
  j["multiplicity"] = mult ? big(*mult) : Json("unknown");
  return j;
}

Json summand_list(const std::set<Summand>& set) {
  Json arr = Json::array();
  for (const auto& s : set) arr.push_back(s.to_string());
  return arr;
}

// Options shared by several subcommands.
struct Common {
  int n = 0;
  unsigned p = 0;
  unsigned s = 1;
  std::string format = "json";
  std::size_t max_columns = graded::ColumnBudget{}.max_columns;
};

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
}

// ---------------------------------------------------------------- hilbert

struct HilbertArgs {
  Common c;
  std::string algebra = "A";
  std::string range;
  std::string source = "formula";
};

int cmd_hilbert(const HilbertArgs& a, std::ostream& out) {
  const auto ctx = QuadricContext::make(a.c.n, a.c.p, a.c.s);
  const graded::ColumnBudget budget{a.c.max_columns};
  const bool is_gamma = a.algebra == "gamma";
  Algebra alg = Algebra::A;
  if (a.algebra == "B") alg = Algebra::B;
  if (a.algebra == "C") alg = Algebra::C;

  long lo = 0;
  long hi = is_gamma ? ctx.q - 1 : hilbert::top_degree(ctx, alg);
  if (!a.range.empty()) std::tie(lo, hi) = parse_range(a.range);

  struct Row {
    long degree;
    BigInt value;
    std::optional<BigInt> other;
  };
  std::vector<Row> rows;
  bool disagree = false;
  for (long i = lo; i <= hi; ++i) {
    Row row{i, 0, std::nullopt};
    if (is_gamma) {
      row.value = hilbert::gamma(ctx, i);
      if (a.source == "both" && i >= 1 && i <= (ctx.q - 1) / 2) row.other = hilbert::gamma_closed(ctx, i);
    } else if (a.source == "brute") {
      row.value = graded::brute_force_dim(ctx, alg, i, budget);
    } else {
      row.value = hilbert::dimension(ctx, alg, i);
      if (a.source == "both") row.other = graded::brute_force_dim(ctx, alg, i, budget);
    }
    if (row.other && *row.other != row.value) disagree = true;
    rows.push_back(std::move(row));
  }

  std::string tag = a.source == "brute" ? "brute-force" : "formula";
  if (a.source == "both") tag = disagree ? "disagree" : "both-agree";
  if (is_gamma && a.source == "both") tag = disagree ? "disagree" : "closed-form-agrees";

  if (a.c.format == "tsv") {
    out << "degree\t" << (is_gamma ? "gamma" : "dim") << "\tsource\n";
    for (const auto& r : rows) {
      std::string row_tag = tag;
      if (r.other && *r.other != r.value) row_tag = "disagree:" + to_string(*r.other);
      out << r.degree << '\t' << r.value << '\t' << row_tag << '\n';
    }
  } else {
    Json j = header("hilbert");
    put_context(j, ctx);
    j["algebra"] = a.algebra;
    j["source"] = tag;
    Json dims = Json::array();
    for (const auto& r : rows) {
      Json e{{"degree", r.degree}, {"value", big(r.value)}};
      if (r.other && *r.other != r.value) e["other"] = big(*r.other);
      dims.push_back(std::move(e));
    }
    j["values"] = std::move(dims);
    out << j.dump(2) << '\n';
  }
  return disagree ? kMismatch : kOk;
}

// ---------------------------------------------------------------- decompose

struct DecomposeArgs {
  Common c;
  long twist = 0;
  std::string start;
};

int cmd_decompose(const DecomposeArgs& a, std::ostream& out) {
  const auto ctx = QuadricContext::make(a.c.n, a.c.p, a.c.s);
  const Summand start = a.start.empty() ? Summand::line(a.twist) : parse_summand(a.start);
  check_summand(start, ctx.n);

  Json j = header("decompose");
  put_context(j, ctx);
  j["source"] = {{"summand", start.to_string()}, {"s", ctx.s}};

  if (ctx.s == 1 && start.is_line()) {
    const auto d = pushforward::decompose_one_step(ctx, start.twist);
    const BigInt expected = boost::multiprecision::pow(BigInt(ctx.p), static_cast<unsigned>(ctx.n));
    if (a.c.format == "tsv") {
      out << "summand\tmultiplicity\n";
      for (const auto& s : d.summands) out << s.summand.to_string() << '\t' << *s.multiplicity << '\n';
      out << "rank\t" << d.total_rank() << '\n';
      return kOk;
    }
    j["exact"] = true;
    Json arr = Json::array();
    for (const auto& s : d.summands) arr.push_back(summand_json(s.summand, s.multiplicity));
    j["summands"] = std::move(arr);
    j["rank_check"] = {{"total", big(d.total_rank())}, {"expected", big(expected)}, {"ok", d.total_rank() == expected}};
    out << j.dump(2) << '\n';
    return kOk;
  }

  const auto closure = pushforward::summand_closure(ctx, start);
  if (a.c.format == "tsv") {
    out << "summand\tstatus\n";
    for (const auto& s : closure.possible) {
      out << s.to_string() << '\t' << (closure.certain.count(s) ? "certain" : "possible") << '\n';
    }
    return kOk;
  }
  j["exact"] = false;
  Json arr = Json::array();
  for (const auto& s : closure.certain) arr.push_back(summand_json(s, std::nullopt));
  j["summands"] = std::move(arr);
  j["certain"] = summand_list(closure.certain);
  j["possible"] = summand_list(closure.possible);
  out << j.dump(2) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- matfac

struct MatfacArgs {
  int m = 1;
  std::string variant = "standard";
  unsigned p = 3;
  std::uint32_t q = 1;
  std::string format = "json";
};

int cmd_matfac(const MatfacArgs& a, std::ostream& out) {
  const PrimeField field(a.p);
  const auto v = a.variant == "primed" ? matfac::Variant::Primed : matfac::Variant::Standard;
  auto pair = matfac::build(field, a.m, v);
  if (a.q != 1) pair = matfac::frobenius_pullback(pair, a.q);
  const bool ok = matfac::verify(pair);
  if (a.format == "tsv") {
    out << "matrix\trow\tcol\tentry\n";
    for (const auto& [name, mat] : {std::pair{"phi", &pair.phi}, std::pair{"psi", &pair.psi}}) {
      for (std::size_t r = 0; r < mat->rows(); ++r) {
        for (std::size_t c = 0; c < mat->cols(); ++c) {
          out << name << '\t' << r << '\t' << c << '\t' << mat->at(r, c).to_string() << '\n';
        }
      }
    }
    out << "form\t\t\t" << pair.form.to_string() << '\n';
    out << "verified\t\t\t" << (ok ? "true" : "false") << '\n';
  } else {
    Json j = header("matfac");
    j["m"] = a.m;
    j["variant"] = matfac::variant_name(v);
    j["p"] = a.p;
    j["pullback_q"] = a.q;
    j["size"] = pair.size();
    j["nvars"] = pair.form.nvars();
    j["form"] = terms_json(pair.form);
    j["phi"] = matrix_json(pair.phi);
    j["psi"] = matrix_json(pair.psi);
    j["verified"] = ok;
    out << j.dump() << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------- ext

struct ExtArgs {
  int n = 0;
  std::string from;
  std::string to;
  std::optional<int> degree;
  std::string format = "json";
};

int cmd_ext(const ExtArgs& a, std::ostream& out) {
  if (a.n < 3) throw PreconditionError("ext needs n >= 3");
  const Summand from = parse_summand(a.from);
  const Summand to = parse_summand(a.to);
  check_summand(from, a.n);
  check_summand(to, a.n);
  int lo = 0;
  int hi = a.n;
  if (a.degree) {
    if (*a.degree < 0) throw PreconditionError("Ext degree must be non-negative");
    lo = hi = *a.degree;
  }
  if (a.format == "tsv") {
    out << "degree\tdim\n";
    for (int i = lo; i <= hi; ++i) out << i << '\t' << cohomology::ext_dim(a.n, from, to, i) << '\n';
    return kOk;
  }
  Json j = header("ext");
  j["n"] = a.n;
  j["from"] = from.to_string();
  j["to"] = to.to_string();
  Json arr = Json::array();
  for (int i = lo; i <= hi; ++i) arr.push_back({{"degree", i}, {"dim", big(cohomology::ext_dim(a.n, from, to, i))}});
  j["ext"] = std::move(arr);
  out << j.dump(2) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- tilting

int cmd_tilting(const Common& c, std::ostream& out) {
  const auto cv = cohomology::cross_validate_tilting(c.n, c.p, c.s);
  if (c.format == "tsv") {
    out << "n\tp\ts\tverdict\tconfirmed\tevidence\n";
    out << c.n << '\t' << c.p << '\t' << c.s << '\t' << cohomology::verdict_name(cv.decided) << '\t'
        << (cv.confirmed ? "true" : "false") << '\t' << cv.evidence << '\n';
  } else {
    Json j = header("tilting");
    put_context(j, QuadricContext::make(c.n, c.p, c.s));
    j["verdict"] = cohomology::verdict_name(cv.decided);
    j["confirmed"] = cv.confirmed;
    j["evidence"] = cv.evidence;
    j["certain"] = summand_list(cv.closure.certain);
    j["possible"] = summand_list(cv.closure.possible);
    out << j.dump(2) << '\n';
  }
  return cv.confirmed ? kOk : kMismatch;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  std::vector<unsigned> primes;
  std::optional<int> n_max;
  std::optional<int> m_max;
  bool j_below_e = false;
  std::size_t max_columns = graded::ColumnBudget{}.max_columns;
  unsigned jobs = 1;
  std::string format = "tsv";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<std::string> suites;
  if (a.suite == "all") {
    suites = suite_names();
  } else {
    if (!is_suite(a.suite)) throw PreconditionError("unknown suite '" + a.suite + "'");
    suites = {a.suite};
  }
  SuiteOptions opts;
  opts.primes = a.primes;
  opts.n_max = a.n_max;
  opts.m_max = a.m_max;
  opts.j_below_e = a.j_below_e;
  opts.budget.max_columns = a.max_columns;
  opts.jobs = std::max(1u, a.jobs);

  std::vector<SuiteResult> results;
  for (const auto& name : suites) results.push_back(run_suite(name, opts));

  std::size_t total = 0;
  std::size_t failed = 0;
  for (const auto& r : results) {
    total += r.cases.size();
    failed += r.failed();
  }
  if (a.format == "tsv") {
    for (const auto& r : results) {
      for (const auto& c : r.cases) {
        out << (c.pass ? "PASS" : "FAIL") << '\t' << r.suite << '\t' << c.label;
        if (!c.detail.empty()) out << '\t' << c.detail;
        out << '\n';
      }
      for (const auto& line : r.reports) out << "REPORT\t" << r.suite << '\t' << line << '\n';
    }
    out << "SUMMARY\t" << (total - failed) << " passed\t" << failed << " failed\n";
  } else {
    Json j = header("verify");
    Json arr = Json::array();
    for (const auto& r : results) {
      Json s{{"suite", r.suite}, {"passed", r.cases.size() - r.failed()}, {"failed", r.failed()}};
      Json cases = Json::array();
      for (const auto& c : r.cases) cases.push_back({{"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
      s["cases"] = std::move(cases);
      s["reports"] = r.reports;
      arr.push_back(std::move(s));
    }
    j["suites"] = std::move(arr);
    j["passed"] = total - failed;
    j["failed"] = failed;
    out << j.dump(2) << '\n';
  }
  return failed == 0 ? kOk : kVerificationFailed;
}

void add_context_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--n", c.n, "Quadric dimension")->required();
  cmd->add_option("--p", c.p, "Odd prime")->required();
  cmd->add_option("--s", c.s, "Frobenius iterations")->capture_default_str();
  add_format(cmd, c.format);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius push-forwards on quadrics: Hilbert functions, decompositions and verification suites",
               "quadfrob"};
  app.require_subcommand(1);

  HilbertArgs ha;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Dimensions of A, B, C or values of gamma by degree");
  add_context_options(hilbert_cmd, ha.c);
  hilbert_cmd->add_option("--algebra", ha.algebra)->check(CLI::IsMember({"A", "B", "C", "gamma"}))->capture_default_str();
  hilbert_cmd->add_option("--range", ha.range, "Degrees lo..hi (default: full support)");
  hilbert_cmd->add_option("--source", ha.source)->check(CLI::IsMember({"formula", "brute", "both"}))->capture_default_str();
  hilbert_cmd->add_option("--max-columns", ha.c.max_columns, "Column budget for brute force")->capture_default_str();

  DecomposeArgs da;
  auto* decompose_cmd = app.add_subcommand("decompose", "Summands of the Frobenius push-forward of O(t)");
  add_context_options(decompose_cmd, da.c);
  decompose_cmd->add_option("--twist,--j", da.twist, "Line bundle twist t")->capture_default_str();
  decompose_cmd->add_option("--start", da.start, "Start from a summand such as S(0) instead of O(t)");

  MatfacArgs ma;
  auto* matfac_cmd = app.add_subcommand("matfac", "Matrix factorizations of the quadric forms");
  matfac_cmd->add_option("--m", ma.m)->capture_default_str();
  matfac_cmd->add_option("--variant", ma.variant)->check(CLI::IsMember({"standard", "primed"}))->capture_default_str();
  matfac_cmd->add_option("--p", ma.p, "Coefficient field characteristic")->capture_default_str();
  matfac_cmd->add_option("--q", ma.q, "Frobenius pull-back exponent")->capture_default_str();
  add_format(matfac_cmd, ma.format);

  ExtArgs ea;
  auto* ext_cmd = app.add_subcommand("ext", "Ext dimensions between line and spinor bundles");
  ext_cmd->add_option("--n", ea.n, "Quadric dimension")->required();
  ext_cmd->add_option("--from", ea.from, "Source, e.g. O(-1), S(0), S+(1)")->required();
  ext_cmd->add_option("--to", ea.to, "Target")->required();
  ext_cmd->add_option("--degree", ea.degree, "Single Ext degree (default: 0..n)");
  add_format(ext_cmd, ea.format);

  Common ta;
  auto* tilting_cmd = app.add_subcommand("tilting", "Tilting verdict for the iterated push-forward of O");
  add_context_options(tilting_cmd, ta);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", va.suite, "Suite name or 'all'")->required();
  verify_cmd->add_option("--p", va.primes, "Comma separated primes (or q values)")->delimiter(',');
  verify_cmd->add_option("--n-max", va.n_max, "Upper bound on n (on N for diff suites)");
  verify_cmd->add_option("--m-max", va.m_max, "Upper bound on m for matfac");
  verify_cmd->add_flag("--j-below-e", va.j_below_e, "combination: only e >= 1 and j <= e - 1");
  verify_cmd->add_option("--max-columns", va.max_columns)->capture_default_str();
  verify_cmd->add_option("--jobs", va.jobs, "Worker threads")->capture_default_str();
  verify_cmd->add_option("--format", va.format)->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (hilbert_cmd->parsed()) return cmd_hilbert(ha, out);
    if (decompose_cmd->parsed()) return cmd_decompose(da, out);
    if (matfac_cmd->parsed()) return cmd_matfac(ma, out);
    if (ext_cmd->parsed()) return cmd_ext(ea, out);
    if (tilting_cmd->parsed()) return cmd_tilting(ta, out);
    if (verify_cmd->parsed()) return cmd_verify(va, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InternalMismatch& e) {
    err << "mismatch: " << e.what() << '\n';
    return kMismatch;
  }
  err << "error: no subcommand\n";
  return kUsageError;
}

}  // namespace quadfrob::cli
