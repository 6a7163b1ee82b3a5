#include "suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "quadfrob/cohomology.hpp"
#include "quadfrob/hilbert.hpp"
#include "quadfrob/matfac.hpp"
#include "quadfrob/pushforward.hpp"

namespace quadfrob::cli {

std::size_t SuiteResult::failed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
}

namespace {

struct Task {
  std::string label;
  std::function<CaseResult()> run;
};

struct Plan {
  std::vector<Task> tasks;
  std::vector<std::string> reports;
};

std::vector<CaseResult> execute(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<CaseResult> results(tasks.size());
  auto run_one = [&](std::size_t k) {
    try {
      results[k] = tasks[k].run();
    } catch (const std::exception& e) {
      results[k] = CaseResult{"", false, std::string("exception: ") + e.what()};
    }
    results[k].label = tasks[k].label;
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (workers <= 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) run_one(k);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < tasks.size(); k = next++) run_one(k);
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

std::vector<unsigned> primes_or(const SuiteOptions& o, std::vector<unsigned> fallback) {
  return o.primes.empty() ? fallback : o.primes;
}

std::string kv(const char* key, long v) { return std::string(key) + "=" + std::to_string(v); }

CaseResult verdict(bool pass, std::string detail = {}) { return CaseResult{"", pass, std::move(detail)}; }

// diff / diff-new: every in-range (e, d) for p, N.
Plan plan_diff(const SuiteOptions& o, bool full) {
  Plan plan;
  const int nmax = o.n_max.value_or(3);
  for (unsigned p : primes_or(o, {3, 5})) {
    for (int N = 1; N <= nmax; ++N) {
      for (unsigned e = 0; e < p; ++e) {
        for (unsigned d = 0; graded::quotient_statement_in_range(p, N, e, d); ++d) {
          const std::string label = kv("p", p) + " " + kv("N", N) + " " + kv("e", e) + " " + kv("d", d);
          plan.tasks.push_back({label, [=] {
                                  const bool ok = full ? graded::verify_diff(p, N, e, d, o.budget)
                                                       : graded::verify_diff_new(p, N, e, d, o.budget);
                                  return verdict(ok);
                                }});
        }
      }
    }
  }
  return plan;
}

Plan plan_c_equals_b(const SuiteOptions& o) {
  Plan plan;
  for (int n = 3; n <= o.n_max.value_or(4); ++n) {
    for (unsigned p : primes_or(o, {3, 5})) {
      const auto ctx = QuadricContext::make(n, p);
      plan.tasks.push_back({kv("n", n) + " " + kv("p", p), [=] {
                              std::ostringstream bad;
                              for (long d = 0; d <= ctx.dN(); ++d) {
                                const BigInt b = graded::brute_force_dim(ctx, Algebra::B, d, o.budget);
                                const BigInt c = graded::brute_force_dim(ctx, Algebra::C, d, o.budget);
                                if (b != c) bad << " d=" << d << ":B=" << b << ",C=" << c;
                              }
                              return verdict(bad.str().empty(), bad.str());
                            }});
    }
  }
  return plan;
}

// Formula against brute force for A, B, C in every degree of A's support,
// plus the support and symmetry statements for B and C.
Plan plan_hilb_b(const SuiteOptions& o) {
  Plan plan;
  for (int n = 3; n <= o.n_max.value_or(4); ++n) {
    for (unsigned p : primes_or(o, {3, 5})) {
      const auto ctx = QuadricContext::make(n, p);
      for (Algebra alg : {Algebra::A, Algebra::B, Algebra::C}) {
        plan.tasks.push_back({kv("n", n) + " " + kv("p", p) + " algebra=" + algebra_name(alg), [=] {
                                std::ostringstream bad;
                                const long top = hilbert::top_degree_A(ctx);
                                for (long i = 0; i <= top + 1; ++i) {
                                  const BigInt f = hilbert::dimension(ctx, alg, i);
                                  const BigInt b = graded::brute_force_dim(ctx, alg, i, o.budget);
                                  if (f != b) bad << " i=" << i << ":formula=" << f << ",brute=" << b;
                                  const bool in_support = alg == Algebra::A ? i <= top : i <= 2 * ctx.dN();
                                  if ((f != 0) != in_support) bad << " support@" << i;
                                  if (alg != Algebra::A && i >= ctx.dN() + static_cast<long>(p) &&
                                      f != hilbert::dimension(ctx, alg, 2 * ctx.dN() - i)) {
                                    bad << " symmetry@" << i;
                                  }
                                }
                                return verdict(bad.str().empty(), bad.str());
                              }});
      }
    }
  }
  return plan;
}

Plan plan_p_n(const SuiteOptions& o) {
  Plan plan;
  for (int N = 1; N <= o.n_max.value_or(6); ++N) {
    for (unsigned q : primes_or(o, {3, 5, 9})) {
      plan.tasks.push_back({kv("N", N) + " " + kv("q", q), [=] {
                              const long ql = q;
                              const long top = N * (ql - 1) + 1;
                              std::ostringstream bad;
                              BigInt total = 0;
                              for (long i = 0; i <= top; ++i) total += hilbert::dim_A(N, ql, i);
                              const BigInt qN = boost::multiprecision::pow(BigInt(ql), static_cast<unsigned>(N));
                              const BigInt qn = boost::multiprecision::pow(BigInt(ql), static_cast<unsigned>(N - 1));
                              if (total != 2 * qN) bad << " total=" << total;
                              for (long r = 0; r < ql; ++r) {
                                BigInt a_sum = 0;
                                BigInt alpha_sum = 0;
                                for (long i = r; i <= top; i += ql) {
                                  a_sum += hilbert::dim_A(N, ql, i);
                                  alpha_sum += hilbert::alpha(i, N, ql);
                                }
                                if (a_sum != 2 * qn) bad << " residue " << r << ": sum A=" << a_sum;
                                if (alpha_sum != qn) bad << " residue " << r << ": sum alpha=" << alpha_sum;
                              }
                              return verdict(bad.str().empty(), bad.str());
                            }});
    }
  }
  return plan;
}

Plan plan_sum_b(const SuiteOptions& o) {
  Plan plan;
  for (int n = 3; n <= o.n_max.value_or(5); ++n) {
    for (unsigned p : primes_or(o, {3, 5})) {
      const auto ctx = QuadricContext::make(n, p);
      for (long l = 0; l < static_cast<long>(p); ++l) {
        plan.tasks.push_back({kv("n", n) + " " + kv("p", p) + " " + kv("l", l), [=] {
                                const auto r = hilbert::sum_B_check(ctx, l);
                                std::ostringstream d;
                                d << "lhs=" << r.lhs << " rhs=" << r.rhs << " l0=" << r.l0;
                                return verdict(r.holds(), d.str());
                              }});
      }
    }
  }
  return plan;
}

Plan plan_bl_cl(const SuiteOptions& o) {
  Plan plan;
  for (int N = 1; N <= o.n_max.value_or(8); ++N) {
    for (unsigned q : primes_or(o, {3, 5, 7, 9})) {
      plan.tasks.push_back({kv("N", N) + " " + kv("q", q), [=] {
                              const long ql = q;
                              std::ostringstream bad;
                              for (long i = 1; i <= (ql - 1) / 2; ++i) {
                                const BigInt closed = hilbert::gamma_closed(N, ql, i);
                                const BigInt direct = hilbert::gamma(N, ql, i);
                                if (closed != direct) bad << " closed(" << i << ")=" << closed << "!=" << direct;
                              }
                              if (hilbert::gamma(N, ql, 0) != 0) bad << " gamma(0)!=0";
                              for (long i = 1; i < ql; ++i) {
                                const BigInt g = hilbert::gamma(N, ql, i);
                                if (g <= 0) bad << " gamma(" << i << ")<=0";
                                if (g != hilbert::gamma(N, ql, ql - i)) bad << " asym@" << i;
                              }
                              for (long i = -ql; i < 2 * ql; ++i) {
                                if (hilbert::gamma(N, ql, i + ql) != -hilbert::gamma(N, ql, i)) bad << " antiperiod@" << i;
                                if (N >= 2) {
                                  BigInt s = 0;
                                  for (long j = -(ql - 1) / 2; j <= (ql - 1) / 2; ++j) s += hilbert::gamma(N - 1, ql, i + j);
                                  if (2 * hilbert::gamma(N, ql, i) != s) bad << " recursion@" << i;
                                }
                              }
                              return verdict(bad.str().empty(), bad.str());
                            }});
    }
  }
  return plan;
}

Plan plan_combination(const SuiteOptions& o) {
  Plan plan;
  const long hi = 6;
  for (unsigned p : primes_or(o, {3, 5, 7, 11})) {
    for (long e = 0; e <= hi; ++e) {
      if (o.j_below_e && e < 1) continue;
      plan.tasks.push_back({kv("p", p) + " " + kv("e", e), [=] {
                              std::ostringstream bad;
                              for (long m = 0; m <= hi; ++m) {
                                if (e + m - 1 > static_cast<long>(p) - 1) continue;
                                for (long j = 0; j <= hi; ++j) {
                                  if (o.j_below_e && j > e - 1) continue;
                                  const auto r = hilbert::combination_determinant(e, m, j, p);
                                  if (!r.nonzero_mod_p) bad << " (m=" << m << ",j=" << j << ",det=" << r.det << ")";
                                }
                              }
                              return verdict(bad.str().empty(), bad.str().empty() ? "" : "det = 0 mod p at" + bad.str());
                            }});
    }
  }
  // Determinant against the closed product, independent of p.
  std::size_t compared = 0;
  std::size_t differ = 0;
  std::size_t undefined = 0;
  std::size_t orig_differ = 0;
  std::vector<std::string> examples;
  for (long e = 0; e <= hi; ++e) {
    for (long m = 0; m <= hi; ++m) {
      for (long j = 0; j <= hi; ++j) {
        if (o.j_below_e && (e < 1 || j > e - 1)) continue;
        const auto r = hilbert::combination_determinant(e, m, j, 3);
        ++compared;
        if (r.det != r.det_original) ++orig_differ;
        if (!r.product) {
          ++undefined;
          continue;
        }
        if (hilbert::BigRational(r.det) != *r.product) {
          ++differ;
          if (examples.size() < 4) {
            std::ostringstream s;
            s << "(e=" << e << ",m=" << m << ",j=" << j << ": det=" << r.det << ", product=" << *r.product << ")";
            examples.push_back(s.str());
          }
        }
      }
    }
  }
  std::ostringstream rep;
  rep << "det vs product: " << differ << " of " << compared << " triples differ, " << undefined
      << " with undefined product";
  for (const auto& ex : examples) rep << " " << ex;
  plan.reports.push_back(rep.str());
  plan.reports.push_back("transformed vs original matrix determinant: " + std::to_string(orig_differ) + " of " +
                         std::to_string(compared) + " triples differ");
  return plan;
}

bool entries_are_signed_variables(const matfac::PolyMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Polynomial& f = m.at(r, c);
      if (f.is_zero()) continue;
      if (f.size() != 1 || f.terms().begin()->first.degree() != 1) return false;
      const std::int64_t coeff = f.field().symmetric(f.terms().begin()->second);
      if (coeff != 1 && coeff != -1) return false;
    }
  }
  return true;
}

Plan plan_matfac(const SuiteOptions& o) {
  Plan plan;
  const int mmax = o.m_max.value_or(6);
  const PrimeField field(primes_or(o, {3}).front());
  for (auto variant : {matfac::Variant::Standard, matfac::Variant::Primed}) {
    for (int m = 0; m <= mmax; ++m) {
      plan.tasks.push_back({std::string(matfac::variant_name(variant)) + " " + kv("m", m), [=] {
                              const auto pair = matfac::build(field, m, variant);
                              std::string bad;
                              if (!matfac::verify(pair)) bad += " product";
                              if (pair.size() != (std::size_t{1} << m)) bad += " size";
                              if (!entries_are_signed_variables(pair.phi) || !entries_are_signed_variables(pair.psi)) {
                                bad += " entries";
                              }
                              return verdict(bad.empty(), bad);
                            }});
      if (m > std::min(mmax, 4)) continue;
      for (std::uint32_t q : {3u, 9u}) {
        plan.tasks.push_back({std::string(matfac::variant_name(variant)) + " " + kv("m", m) + " " + kv("pullback", q),
                              [=] {
                                const auto pulled = matfac::frobenius_pullback(matfac::build(field, m, variant), q);
                                const bool ok = matfac::verify(pulled) &&
                                                pulled.form == substitute_power(matfac::quadric_form(field, m, variant), q);
                                return verdict(ok);
                              }});
      }
    }
  }
  return plan;
}

Plan plan_decomposition_rank(const SuiteOptions& o) {
  Plan plan;
  for (int n = 3; n <= o.n_max.value_or(6); ++n) {
    for (unsigned p : primes_or(o, {3, 5, 7})) {
      const auto ctx = QuadricContext::make(n, p);
      for (long j = 0; j < static_cast<long>(p); ++j) {
        plan.tasks.push_back({kv("n", n) + " " + kv("p", p) + " " + kv("j", j), [=] {
                                std::ostringstream bad;
                                const BigInt expected = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(n));
                                for (long c = -1; c <= 1; ++c) {
                                  const long t = ctx.dN() + j + c * static_cast<long>(p);
                                  const auto d = pushforward::decompose_one_step(ctx, t);
                                  const BigInt rank = d.line_rank() + (BigInt(1) << (n / 2)) * d.spinor_multiplicity();
                                  if (rank != expected) bad << " t=" << t << " rank=" << rank;
                                  std::set<long> spinor_twists;
                                  for (const auto& s : d.summands) {
                                    if (*s.multiplicity <= 0) bad << " t=" << t << " empty summand";
                                    if (s.summand.is_line()) {
                                      if (!pushforward::line_presence(ctx, t, -s.summand.twist) ||
                                          !pushforward::necessary_window(ctx, pushforward::SourceKind::Line, t,
                                                                         -s.summand.twist)) {
                                        bad << " t=" << t << " line outside window";
                                      }
                                    } else {
                                      spinor_twists.insert(s.summand.twist);
                                      if (!pushforward::spinor_window_line_source(ctx, t, -s.summand.twist)) {
                                        bad << " t=" << t << " spinor outside window";
                                      }
                                    }
                                  }
                                  if (spinor_twists.size() > 1) bad << " t=" << t << " several spinor twists";
                                }
                                return verdict(bad.str().empty(), bad.str());
                              }});
      }
    }
  }
  return plan;
}

Plan plan_dir_sum_lb(const SuiteOptions& o) {
  Plan plan;
  for (int n = 3; n <= o.n_max.value_or(6); ++n) {
    for (unsigned p : primes_or(o, {3, 5, 7})) {
      const auto ctx = QuadricContext::make(n, p);
      plan.tasks.push_back({kv("n", n) + " " + kv("p", p), [=] {
                              std::ostringstream bad;
                              const long pl = p;
                              for (long t = ctx.dN() - 2 * pl; t < ctx.dN() + 2 * pl; ++t) {
                                const auto d = pushforward::decompose_one_step(ctx, t);
                                const bool no_spinor = d.spinor_multiplicity() == 0;
                                const bool divisible = floor_mod(t - ctx.dN(), pl) == 0;
                                if (no_spinor != divisible) bad << " t=" << t;
                              }
                              return verdict(bad.str().empty(), bad.str());
                            }});
    }
  }
  return plan;
}

// Tilting iff s = 1 and p > n, or s = 2, n = 4, p = 3, or s >= 2, n odd, p >= n.
bool tilting_by_case_list(int n, unsigned p, unsigned s) {
  const long pl = p;
  return (s == 1 && pl > n) || (s == 2 && n == 4 && p == 3) || (s >= 2 && n % 2 == 1 && pl >= n);
}

Plan plan_tilting_grid(const SuiteOptions& o) {
  Plan plan;
  for (int n = 3; n <= o.n_max.value_or(6); ++n) {
    for (unsigned p : primes_or(o, {3, 5, 7})) {
      for (unsigned s = 1; s <= 3; ++s) {
        plan.tasks.push_back({kv("n", n) + " " + kv("p", p) + " " + kv("s", s), [=] {
                                const auto cv = cohomology::cross_validate_tilting(n, p, s);
                                std::string bad;
                                const bool tilting = cv.decided == cohomology::TiltingVerdict::Tilting;
                                if (tilting != tilting_by_case_list(n, p, s)) bad += " verdict disagrees with case list;";
                                if (!cv.confirmed) bad += " not confirmed;";
                                if (cv.decided == cohomology::TiltingVerdict::NotQuasiExceptional) {
                                  const auto obs = cohomology::find_ext_obstruction(n, cv.closure.certain);
                                  if (!obs || obs->degree != 1) bad += " no Ext^1 obstruction;";
                                }
                                return verdict(bad.empty(),
                                               std::string(cohomology::verdict_name(cv.decided)) + ": " + cv.evidence + bad);
                              }});
      }
    }
  }
  return plan;
}

using Planner = Plan (*)(const SuiteOptions&);

const std::map<std::string, Planner>& planners() {
  static const std::map<std::string, Planner> table = {
      {"diff", [](const SuiteOptions& o) { return plan_diff(o, true); }},
      {"diff-new", [](const SuiteOptions& o) { return plan_diff(o, false); }},
      {"C=B", plan_c_equals_b},
      {"hilb-B", plan_hilb_b},
      {"sum-B", plan_sum_b},
      {"p^n", plan_p_n},
      {"bl-cl", plan_bl_cl},
      {"combination", plan_combination},
      {"matfac", plan_matfac},
      {"decomposition-rank", plan_decomposition_rank},
      {"dir-sum-lb", plan_dir_sum_lb},
      {"tilting-grid", plan_tilting_grid},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"diff",        "diff-new", "C=B",
                                                 "hilb-B",      "sum-B",    "p^n",
                                                 "bl-cl",       "combination", "matfac",
                                                 "decomposition-rank", "dir-sum-lb", "tilting-grid"};
  return names;
}

bool is_suite(const std::string& name) { return planners().count(name) > 0; }

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  auto it = planners().find(name);
  if (it == planners().end()) throw PreconditionError("unknown suite '" + name + "'");
  if (options.n_max && *options.n_max < 1) throw PreconditionError("--n-max must be positive");
  if (options.m_max && *options.m_max < 0) throw PreconditionError("--m-max must be non-negative");
  Plan plan = it->second(options);
  return SuiteResult{name, execute(plan.tasks, options.jobs), std::move(plan.reports)};
}

}  // namespace quadfrob::cli
