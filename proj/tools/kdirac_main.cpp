// Command-line workbench: dimension tables, filtration/Cartan tables, the
// extension solver, and the verification suites, emitting deterministic
// machine-readable reports.

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "kdirac/dirac.hpp"
#include "kdirac/ivp.hpp"
#include "kdirac/spencer.hpp"

using namespace kdirac;

namespace {

struct RunConfig {
  int n = 2;
  int k = 2;
  int max_degree = 3;
  std::string sigma_str;
  unsigned long long seed = 42;
  std::string format = "json";
  int jobs = 1;
  std::string out;

  Params params() const { return Params(n, k); }

  Permutation sigma() const {
    if (sigma_str.empty()) return Permutation::identity(n);
    std::vector<int> images;
    std::stringstream ss(sigma_str);
    std::string tok;
    while (std::getline(ss, tok, ',')) images.push_back(std::stoi(tok));
    if (static_cast<int>(images.size()) != n)
      throw std::invalid_argument("--sigma must list exactly n images");
    return Permutation::from_list(images);
  }

  nlohmann::json to_json() const {
    nlohmann::json s = nlohmann::json::array();
    for (int r = 1; r <= n; ++r) s.push_back(sigma()(r));
    return {{"n", n}, {"k", k},         {"max_degree", max_degree},
            {"sigma", s}, {"seed", seed}, {"jobs", jobs}};
  }
};

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--n", cfg.n, "rows of the x-block minus one")->check(CLI::Range(2, 16));
  cmd->add_option("--k", cfg.k, "number of operator components")->check(CLI::Range(2, 16));
  cmd->add_option("--max-degree", cfg.max_degree, "largest weighted degree")
      ->check(CLI::Range(0, 64));
  cmd->add_option("--sigma", cfg.sigma_str, "permutation of 1..n, e.g. \"2,1\"");
  cmd->add_option("--seed", cfg.seed, "seed for randomized sweeps");
  cmd->add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--jobs", cfg.jobs, "parallel check dispatch")->check(CLI::Range(1, 256));
  cmd->add_option("--out", cfg.out, "write the report to a file instead of stdout");
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(cfg.out);
  if (!os) throw std::invalid_argument("cannot open output file: " + cfg.out);
  os << text;
}

int finish(const RunConfig& cfg, Report& report,
           std::chrono::steady_clock::time_point start) {
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  emit(cfg, cfg.format == "csv" ? report.to_csv() : report.to_json().dump(2) + "\n");
  return report.all_pass() ? 0 : 1;
}

// Order-stable parallel dispatch: results land in the slot of their task no
// matter which thread finishes first; the first exception is rethrown.
std::vector<Check> run_tasks(const std::vector<std::function<Check()>>& tasks, int jobs) {
  std::vector<Check> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) {
      try {
        results[t] = tasks[t]();
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  int nthreads = std::min<int>(jobs, static_cast<int>(tasks.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

// Random polynomial in the slice variables only, one term per monomial with
// probability 1/3, coefficients small rationals.
SliceFunction random_slice(std::mt19937_64& rng, const Context& ctx, int d) {
  const Params& p = ctx.params();
  PolySpinor P(ctx.dimS());
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (const Monomial& m : ctx.basis(d).monomials) {
    bool slice = true;
    for (int e : m.yexp) slice &= e == 0;
    for (int i = 1; i <= p.k && slice; ++i) slice &= m.xexp[p.xindex(p.n + 1, i)] == 0;
    if (!slice) continue;
    for (int s = 0; s < ctx.dimS(); ++s)
      if (rng() % 3 == 0) P.add_term(s, m, GaussRat(num(rng), den(rng)));
  }
  return SliceFunction::from_poly(p, P);
}

// ---- suites ---------------------------------------------------------------

void suite_clifford(const RunConfig&, std::vector<std::function<Check()>>& tasks) {
  for (int m = 3; m <= 5; ++m)
    tasks.push_back([m] {
      GammaRep rep = build_gamma(m);
      SparseMat two_id = SparseMat::identity(rep.dimS) + SparseMat::identity(rep.dimS);
      for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
          SparseMat anti = rep.gamma(a) * rep.gamma(b) + rep.gamma(b) * rep.gamma(a);
          SparseMat want = a == b ? two_id : SparseMat(rep.dimS, rep.dimS);
          if (!(anti == want))
            return Check::fail("clifford(m=" + std::to_string(m) + ")",
                               "anticommutators 2*delta*I", "mismatch",
                               {{"a", a}, {"b", b}});
        }
      return Check::ok("clifford(m=" + std::to_string(m) + ")",
                       "anticommutators 2*delta*I", {{"dimS", rep.dimS}});
    });
}

void suite_brackets(const RunConfig& cfg, const Context& ctx,
                    std::vector<std::function<Check()>>& tasks) {
  for (int d = 0; d <= std::min(3, cfg.max_degree); ++d)
    tasks.push_back([&ctx, d] {
      std::string bad = bracket_report(ctx.params(), ctx.dimS(), d);
      std::string name = "brackets(d=" + std::to_string(d) + ")";
      if (bad.empty()) return Check::ok(name, "all bracket relations", "all bracket relations");
      return Check::fail(name, "all bracket relations", bad);
    });
}

void suite_ses(const RunConfig& cfg, const Context& ctx,
               std::vector<std::function<Check()>>& tasks) {
  Permutation sigma = cfg.sigma();
  const Params& p = ctx.params();
  for (int i = 0; i + 2 <= cfg.max_degree; ++i) {
    for (int j = 1; j <= p.k * (p.n + 1); ++j)
      tasks.push_back([&ctx, i, j, sigma] { return verify_ses(ctx, i, j, sigma); });
    tasks.push_back([&ctx, i, sigma] {
      CartanTest t = cartan_test(ctx, i, sigma);
      return Check::of("cartan-equality(i=" + std::to_string(i) + ")", t.lhs, t.rhs);
    });
  }
}

void suite_lemma_dy(const RunConfig& cfg, const Context& ctx,
                    std::vector<std::function<Check()>>& tasks) {
  for (int i = 0; i + 2 <= cfg.max_degree; ++i)
    for (int r = 1; r <= cfg.k - 1; ++r)
      tasks.push_back([&ctx, i, r] { return verify_lemma_dy(ctx, i, r); });
}

void suite_spencer(const RunConfig& cfg, const Context& ctx,
                   std::vector<std::function<Check()>>& tasks) {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; a + b <= 2; ++b)
      for (int m = 0; m <= 2; ++m)
        tasks.push_back([&ctx, a, b, m] {
          return Check::of("delta2(a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                               ",m=" + std::to_string(m) + ")",
                           true, verify_delta_squared(ctx, a, b, m));
        });
  unsigned long long seed = cfg.seed;
  tasks.push_back([&ctx, seed] {
    return Check::of("cartan-formula(samples=10)", true, verify_cartan_formula(ctx, 10, seed));
  });
  for (int i = 0; i <= std::min(2, cfg.max_degree - 1); ++i)
    for (int pos = 0; pos <= i + 1; ++pos)
      tasks.push_back([&ctx, i, pos] { return verify_exactness_at(ctx, i, pos); });
}

void suite_flat_compat(const RunConfig& cfg, const Context& ctx,
                       std::vector<std::function<Check()>>& tasks) {
  tasks.push_back([&ctx] {
    const Params& p = ctx.params();
    for (const PolySpinor& P : flat_monogenic_polys(ctx, 2)) {
      for (const auto& row : flat_compatibility(ctx, restrict_to_slice(P, p)))
        for (const auto& r : row)
          if (!r.is_zero())
            return Check::fail("flat-compat(restrictions)", "all residuals zero",
                               "nonzero residual");
    }
    return Check::ok("flat-compat(restrictions)", "all residuals zero",
                     "all residuals zero");
  });
  unsigned long long seed = cfg.seed;
  tasks.push_back([&ctx, seed] {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 10; ++trial) {
      for (const auto& row : flat_compatibility(ctx, random_slice(rng, ctx, 2)))
        for (const auto& r : row)
          if (!r.is_zero())
            return Check::ok("flat-compat(generic)", "some residual nonzero",
                             {{"trials", trial + 1}});
    }
    return Check::fail("flat-compat(generic)", "some residual nonzero",
                       "all residuals zero on 10 random data");
  });
}

void suite_pullback(const RunConfig& cfg, const Context& ctx,
                    std::vector<std::function<Check()>>& tasks) {
  unsigned long long seed = cfg.seed;
  int dmax = std::min(3, cfg.max_degree);
  tasks.push_back([&ctx, seed, dmax] {
    std::mt19937_64 rng(seed);
    int trials = 0;
    for (int d = 0; d <= dmax; ++d)
      for (int t = 0; t < 50 / (dmax + 1) + 1; ++t, ++trials)
        if (!pullback_consistency(ctx, random_slice(rng, ctx, d).poly))
          return Check::fail("pullback", "D equals E on y-independent input",
                             "mismatch", {{"degree", d}, {"trial", t}});
    return Check::ok("pullback", "D equals E on y-independent input",
                     {{"trials", trials}});
  });
}

void suite_uniqueness(const RunConfig& cfg, const Context& ctx,
                      std::vector<std::function<Check()>>& tasks) {
  for (int d = 0; d <= cfg.max_degree; ++d)
    tasks.push_back([&ctx, d] {
      return Check::of("uniqueness(d=" + std::to_string(d) + ")", true,
                       verify_uniqueness(ctx, d));
    });
}

// ---- commands -------------------------------------------------------------

int cmd_dims(const RunConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  Params p = cfg.params();
  Context ctx(p);
  Report report{cfg.to_json(), "dims", {}, 0};
  std::vector<std::function<Check()>> tasks;
  for (int d = 0; d <= cfg.max_degree; ++d)
    tasks.push_back([&ctx, &p, d] {
      long long expected = binomial(p.n * p.k + d - 1, d) * ctx.dimS();
      long long actual = monogenic_basis(ctx, d).dim();
      return Check::of("dims(d=" + std::to_string(d) + ")", expected, actual);
    });
  report.checks = run_tasks(tasks, cfg.jobs);
  return finish(cfg, report, start);
}

int cmd_cartan(const RunConfig& cfg, int i) {
  auto start = std::chrono::steady_clock::now();
  Params p = cfg.params();
  Context ctx(p);
  Permutation sigma = cfg.sigma();
  Report report{cfg.to_json(), "cartan", {}, 0};
  report.params["i"] = i;

  std::vector<long long> dims = filtration_dims(ctx, i, sigma);
  for (int j = 0; j < static_cast<int>(dims.size()); ++j) {
    long long expected = binomial(p.n * p.k - j + i, i + 1) * ctx.dimS();
    report.checks.push_back(
        Check::of("filtration(j=" + std::to_string(j) + ")", expected, dims[j]));
  }
  CartanTest t = cartan_test(ctx, i, sigma);
  report.checks.push_back(Check::of("cartan-equality", t.lhs, t.rhs));
  return finish(cfg, report, start);
}

int cmd_extend(const RunConfig& cfg, const std::string& in_file) {
  auto start = std::chrono::steady_clock::now();
  Params p = cfg.params();
  Context ctx(p);

  std::ifstream is(in_file);
  if (!is) throw std::invalid_argument("cannot open input file: " + in_file);
  nlohmann::json j = nlohmann::json::parse(is);  // malformed JSON -> exit 2
  const nlohmann::json& jpoly = j.is_object() && j.contains("poly") ? j.at("poly") : j;
  PolySpinor input = poly_from_json(p, ctx.dimS(), jpoly);
  SliceFunction psi = SliceFunction::from_poly(p, input);
  int d = input.wdeg();
  if (d < 0) d = 0;  // the zero polynomial extends to zero at degree 0

  PolySpinor result = extend(ctx, psi, d);  // re-verifies D = 0 and restriction

  nlohmann::json out = {{"params", cfg.to_json()},
                        {"command", "extend"},
                        {"degree", d},
                        {"input", poly_to_json(psi.poly)},
                        {"output", poly_to_json(result)},
                        {"verification",
                         {{"D_residual", 0}, {"restriction_match", true}}},
                        {"elapsed_ms",
                         std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count()}};
  emit(cfg, out.dump(2) + "\n");
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& which) {
  auto start = std::chrono::steady_clock::now();
  Params p = cfg.params();
  Context ctx(p);
  Report report{cfg.to_json(), "verify " + which, {}, 0};
  std::vector<std::function<Check()>> tasks;

  bool all = which == "all";
  if (all || which == "clifford") suite_clifford(cfg, tasks);
  if (all || which == "brackets") suite_brackets(cfg, ctx, tasks);
  if (all || which == "ses") suite_ses(cfg, ctx, tasks);
  if (all || which == "lemma-dy") suite_lemma_dy(cfg, ctx, tasks);
  if (all || which == "spencer") suite_spencer(cfg, ctx, tasks);
  if (all || which == "flat-compat") suite_flat_compat(cfg, ctx, tasks);
  if (all || which == "pullback") suite_pullback(cfg, ctx, tasks);
  if (all || which == "uniqueness") suite_uniqueness(cfg, ctx, tasks);

  report.checks = run_tasks(tasks, cfg.jobs);
  return finish(cfg, report, start);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for a weighted system of Dirac-type operators"};
  app.require_subcommand(1);

  RunConfig cfg;
  int cartan_i = 0;
  std::string in_file;
  std::string which;

  CLI::App* dims = app.add_subcommand("dims", "per-degree kernel dimension table");
  add_common_flags(dims, cfg);

  CLI::App* cartan = app.add_subcommand("cartan", "filtration dimension table");
  add_common_flags(cartan, cfg);
  cartan->add_option("--i", cartan_i, "prolongation level")->check(CLI::Range(0, 16));

  CLI::App* extend = app.add_subcommand("extend", "unique kernel extension of slice data");
  add_common_flags(extend, cfg);
  extend->add_option("--in", in_file, "serialized slice polynomial (JSON)")->required();

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common_flags(verify, cfg);
  verify
      ->add_option("which", which, "suite to run")
      ->required()
      ->check(CLI::IsMember({"clifford", "brackets", "ses", "spencer", "lemma-dy",
                             "flat-compat", "pullback", "uniqueness", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dims->parsed()) return cmd_dims(cfg);
    if (cartan->parsed()) return cmd_cartan(cfg, cartan_i);
    if (extend->parsed()) return cmd_extend(cfg, in_file);
    return cmd_verify(cfg, which);
  } catch (const CellLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  }
}
