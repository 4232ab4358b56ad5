#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "polybranch/cli.hpp"
#include "polybranch/closed_form.hpp"
#include "polybranch/complexity.hpp"
#include "polybranch/fractal.hpp"
#include "polybranch/newton.hpp"
#include "polybranch/power_iter.hpp"
#include "polybranch/solve.hpp"

namespace acceptance {

using namespace polybranch;

namespace {

constexpr double kSeparation = 0.05;
constexpr double kPi = std::numbers::pi;

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(4);
  s << x;
  return s.str();
}

// Greedy nearest matching; exact when both lists are separated by more than
// twice the distances being measured.
double matched_distance(std::vector<Complex> a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) {
    return std::numeric_limits<double>::infinity();
  }
  double worst = 0.0;
  for (const Complex& z : b) {
    auto it = std::min_element(a.begin(), a.end(), [&](Complex x, Complex y) {
      return std::abs(x - z) < std::abs(y - z);
    });
    worst = std::max(worst, std::abs(*it - z));
    a.erase(it);
  }
  return worst;
}

double coefficient_scale(const MonicPolynomial& p) {
  double s = 1.0;
  for (const Complex& a : p.coeffs()) {
    s = std::max(s, std::abs(a));
  }
  return s;
}

// One random suite per degree, shared by criteria 1 to 3.
struct SuiteStats {
  int degree = 0;
  std::size_t cases = 0;
  std::size_t worst_default = 0;  // branch count at threshold 0.1
  std::size_t worst_tight = 0;    // branch count at threshold 1e-8
  bool every_path_exact = true;   // every trace has length worst_default
  std::size_t failures = 0;       // exceptions from Newton
  double worst_relative_residual = 0.0;
  double worst_oracle_distance = 0.0;
};

struct Suites {
  std::vector<SuiteStats> closed;  // d = 2, 3, 4
  std::vector<SuiteStats> pure;    // d = 2 .. 16
  double seconds = 0.0;
};

SuiteStats run_closed_suite(int d, const Options& opts) {
  std::mt19937_64 rng(opts.rng_seed + static_cast<std::uint64_t>(d));
  NewtonConfig loose;
  NewtonConfig tight;
  tight.threshold_r = 1e-8;
  SuiteStats st;
  st.degree = d;
  std::optional<std::size_t> first_len;
  while (st.cases < static_cast<std::size_t>(opts.suite_size)) {
    const MonicPolynomial p = oracle::random_polynomial(rng, d, 10.0);
    const auto ref = oracle::durand_kerner(p);
    if (min_separation(ref) < kSeparation) {
      continue;
    }
    ++st.cases;
    try {
      BranchTrace t;
      solve_closed_form(p, loose, t);
      st.worst_default = std::max(st.worst_default, t.size());
      if (!first_len) {
        first_len = t.size();
      }
      st.every_path_exact = st.every_path_exact && t.size() == *first_len;

      BranchTrace tt;
      const ClosedFormSolution s = solve_closed_form(p, tight, tt);
      st.worst_tight = std::max(st.worst_tight, tt.size());
      const double scale = coefficient_scale(p);
      for (const Complex& r : s.roots) {
        st.worst_relative_residual =
            std::max(st.worst_relative_residual, std::abs(evaluate(p, r)) / scale);
      }
      st.worst_oracle_distance = std::max(st.worst_oracle_distance, matched_distance(s.roots, ref));
    } catch (const std::exception&) {
      ++st.failures;
    }
  }
  return st;
}

SuiteStats run_pure_suite(int d, const Options& opts) {
  std::mt19937_64 rng(opts.rng_seed + 1000 + static_cast<std::uint64_t>(d));
  NewtonConfig loose;
  NewtonConfig tight;
  tight.threshold_r = 1e-8;
  SuiteStats st;
  st.degree = d;
  while (st.cases < static_cast<std::size_t>(opts.suite_size)) {
    const Complex S = oracle::disk_sample(rng, 10.0);
    std::vector<Complex> coeffs(static_cast<std::size_t>(d));
    coeffs[0] = -S;
    const MonicPolynomial p(coeffs);
    // The roots of t^d - S are spaced 2 |S|^{1/d} sin(pi/d) apart.
    if (2.0 * std::pow(std::abs(S), 1.0 / d) * std::sin(kPi / d) < kSeparation) {
      continue;
    }
    ++st.cases;
    try {
      BranchTrace t;
      solve_pure_power(d, S, loose, t);
      st.worst_default = std::max(st.worst_default, t.size());
      BranchTrace tt;
      const RootTuple roots = solve_pure_power(d, S, tight, tt);
      st.worst_tight = std::max(st.worst_tight, tt.size());
      const double scale = coefficient_scale(p);
      for (const Complex& r : roots) {
        st.worst_relative_residual =
            std::max(st.worst_relative_residual, std::abs(evaluate(p, r)) / scale);
      }
      st.worst_oracle_distance =
          std::max(st.worst_oracle_distance, matched_distance(roots, oracle::durand_kerner(p)));
    } catch (const std::exception&) {
      ++st.failures;
    }
  }
  return st;
}

Suites run_suites(const Options& opts) {
  const auto start = std::chrono::steady_clock::now();
  Suites s;
  for (int d = 2; d <= 4; ++d) {
    s.closed.push_back(run_closed_suite(d, opts));
  }
  for (int d = 2; d <= 16; ++d) {
    s.pure.push_back(run_pure_suite(d, opts));
  }
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

CriterionResult criterion_branch_counts(const Suites& s) {
  CriterionResult r{"1", "branch-count reproduction", true, "", s.seconds};
  const std::size_t ceilings[] = {kQuadraticBranches, kCubicBranchCeiling, kQuarticBranchCeiling};
  std::ostringstream detail;
  for (std::size_t i = 0; i < s.closed.size(); ++i) {
    const SuiteStats& st = s.closed[i];
    const bool ok = st.failures == 0 && st.worst_default <= ceilings[i] &&
                    st.worst_tight <= ceilings[i] && (i != 0 || (st.every_path_exact &&
                                                                 st.worst_default == 1));
    r.passed = r.passed && ok;
    detail << "d=" << st.degree << " worst " << st.worst_default << "/" << ceilings[i] << " over "
           << st.cases << "; ";
  }
  std::size_t pure_largest = 0;
  bool pure_ok = true;
  for (const SuiteStats& st : s.pure) {
    const bool ok = st.failures == 0 && st.worst_default <= static_cast<std::size_t>(st.degree) &&
                    st.worst_tight <= static_cast<std::size_t>(st.degree);
    pure_ok = pure_ok && ok;
    pure_largest = std::max(pure_largest, st.worst_default);
  }
  r.passed = r.passed && pure_ok && s.seconds < 60.0;
  detail << "t^d-S d=2..16 " << (pure_ok ? "within d" : "ceiling exceeded")
         << " (largest count " << pure_largest << ")";
  if (s.seconds >= 60.0) {
    detail << "; runtime over 60 s";
  }
  r.detail = detail.str();
  return r;
}

CriterionResult criterion_strict_bound(const Suites& s) {
  CriterionResult r{"2", "strict bound chain", true, "", 0.0};
  std::ostringstream detail;
  for (const SuiteStats& st : s.closed) {
    const ComplexityReport rep = make_report(st.degree, st.worst_default);
    r.passed = r.passed && rep.bound_satisfied;
    detail << "d=" << st.degree << " " << rep.measured_branches << " > "
           << fmt(rep.smale_lower_bound) << "; ";
  }
  const bool zero = smale_bound(2) == 0.0;
  r.passed = r.passed && zero;
  detail << "bound(2) " << (zero ? "== 0 exactly" : "!= 0");
  r.detail = detail.str();
  return r;
}

CriterionResult criterion_accuracy(const Suites& s) {
  CriterionResult r{"3", "root accuracy", true, "", 0.0};
  double worst_res = 0.0;
  double worst_dist = 0.0;
  std::size_t failures = 0;
  for (const auto* group : {&s.closed, &s.pure}) {
    for (const SuiteStats& st : *group) {
      worst_res = std::max(worst_res, st.worst_relative_residual);
      worst_dist = std::max(worst_dist, st.worst_oracle_distance);
      failures += st.failures;
    }
  }
  r.passed = failures == 0 && worst_res < 1e-6 && worst_dist < 1e-4;
  r.detail = "max |f(root)|/max(1,|a|) " + fmt(worst_res) + " (< 1e-6), max oracle distance " +
             fmt(worst_dist) + " (< 1e-4), failures " + std::to_string(failures);
  return r;
}

CriterionResult criterion_fractal(const Options& opts) {
  CriterionResult r{"4", "fractal figure reproduction", true, "", 0.0};
  const NewtonConfig cfg;
  const FractalWindow window;
  const Resolution res{512, 512};
  std::ostringstream detail;

  double slowest = 0.0;
  for (const Complex seed : {Complex{1.0, 0.0}, Complex{0.0, 1.0}}) {
    const auto t0 = std::chrono::steady_clock::now();
    render(2, seed, cfg, window, res, opts.workers);
    slowest = std::max(
        slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  const bool fast = slowest < 5.0;
  r.passed = fast;
  detail << "512x512 renders " << (fast ? "under" : "over") << " 5 s; ";

  const AnnulusFilter annulus{0.5, 2.0};
  for (int d : {2, 3, 5}) {
    const FractalGrid g = render(d, {1.0, 0.0}, cfg, window, res, opts.workers);
    const SectorStatistics st = sector_statistics(g, annulus);
    const SectorSummary& home = st.sectors[static_cast<std::size_t>(st.home_sector)];
    double other = 0.0;
    for (const auto& sec : st.sectors) {
      if (sec.sector != st.home_sector) {
        other = std::max(other, sec.rapid_fraction);
      }
    }
    const bool ok = home.converged_fraction >= 0.99 && home.rapid_fraction >= 0.99 && other <= 0.6;
    r.passed = r.passed && ok;
    detail << "d=" << d << " home " << fmt(home.rapid_fraction) << " other max "
           << fmt(other) << " within " << st.uniform_budget << " steps; ";
  }
  r.seconds = slowest;
  r.detail = detail.str();
  return r;
}

CriterionResult criterion_rotation(const Options& opts) {
  CriterionResult r{"5", "rotation equivariance", true, "", 0.0};
  const int d = 3;
  const NewtonConfig cfg;
  const FractalWindow window;
  const Resolution res{64, 64};
  std::size_t analytic_mismatch = 0;
  std::size_t float_outside = 0;
  std::size_t cells = 0;
  for (int k : {1, 2}) {
    const FractalGrid g = render(d, sector_seed(d, k), cfg, window, res, opts.workers);
    const double turn = 2.0 * kPi * k / d;
    for (int y = 0; y < g.height; ++y) {
      for (int x = 0; x < g.width; ++x) {
        const Complex S = g.sample(x, y);
        const FractalCell& cell = g.at(x, y);
        const FractalCell analytic =
            escape_time(d, std::polar(std::abs(S), std::arg(S) - turn), {1.0, 0.0}, cfg);
        const FractalCell floating = escape_time(d, S * std::polar(1.0, -turn), {1.0, 0.0}, cfg);
        ++cells;
        analytic_mismatch += analytic == cell ? 0 : 1;
        const bool near = floating.converged == cell.converged &&
                          std::abs(floating.iterations - cell.iterations) <= 1;
        float_outside += near ? 0 : 1;
      }
    }
  }
  const double float_ok = 1.0 - static_cast<double>(float_outside) / cells;
  r.passed = analytic_mismatch == 0 && float_ok >= 0.999;
  r.detail = "analytic mismatches " + std::to_string(analytic_mismatch) + "/" +
             std::to_string(cells) + ", floating within 1 step on " + fmt(100.0 * float_ok) + "%";
  return r;
}

struct RateCase {
  double ratio = 0.0;
  PowerIterResult result;
};

constexpr double kRateTol = 1e-10;

std::vector<RateCase> rate_suite(const Options& opts) {
  std::mt19937_64 rng(opts.rng_seed + 5000);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::vector<RateCase> cases;
  for (int i = 0; i < 50; ++i) {
    const double ratio = 0.3 + 0.6 * i / 49.0;
    const std::vector<Complex> roots{std::polar(2.0, angle(rng)), std::polar(2.0 * ratio, angle(rng)),
                                     std::polar(0.6 * ratio, angle(rng))};
    const MonicPolynomial p = roots_to_poly(roots);
    cases.push_back({ratio, power_iterate(companion(p), kDefaultPowerIters, kRateTol)});
  }
  return cases;
}

CriterionResult criterion_rate(const std::vector<RateCase>& cases) {
  CriterionResult r{"6", "power-iteration rate", true, "", 0.0};
  double worst_rel = 0.0;
  int worst_slack = std::numeric_limits<int>::max();
  std::size_t bad = 0;
  for (const RateCase& c : cases) {
    const int predicted =
        static_cast<int>(std::ceil(std::log(kRateTol) / std::log(c.ratio))) + 50;
    const double rel = c.result.rate_estimate
                           ? std::abs(*c.result.rate_estimate - c.ratio) / c.ratio
                           : std::numeric_limits<double>::infinity();
    worst_rel = std::max(worst_rel, rel);
    worst_slack = std::min(worst_slack, predicted - c.result.iterations);
    if (!c.result.converged || rel > 0.1 || c.result.iterations > predicted) {
      ++bad;
    }
  }
  r.passed = bad == 0;
  r.detail = std::to_string(cases.size() - bad) + "/" + std::to_string(cases.size()) +
             " within bounds; max relative rate error " + fmt(worst_rel) +
             ", min iteration slack " + std::to_string(worst_slack);
  return r;
}

CriterionResult criterion_equal_magnitude(const std::vector<RateCase>& cases) {
  CriterionResult r{"7", "equal-magnitude detection", true, "", 0.0};
  std::ostringstream detail;
  for (const auto& [name, coeffs] :
       {std::pair<const char*, std::vector<Complex>>{"t^2-1", {-1.0, 0.0}},
        std::pair<const char*, std::vector<Complex>>{"t^2+1", {1.0, 0.0}}}) {
    const MonicPolynomial p(coeffs);
    const PowerIterResult res = power_iterate(companion(p), kDefaultPowerIters, kRateTol);
    const RootReport rep = solve_by_power_iteration(p, kDefaultPowerIters, kRateTol);
    const bool flagged = !res.converged && res.equal_magnitude && !rep.complete() &&
                         rep.status[0] == RootStatus::equal_magnitude;
    r.passed = r.passed && flagged;
    detail << name << (flagged ? " flagged; " : " NOT flagged; ");
  }
  const auto false_flags = std::count_if(cases.begin(), cases.end(), [](const RateCase& c) {
    return c.result.equal_magnitude || !c.result.converged;
  });
  r.passed = r.passed && false_flags == 0;
  detail << false_flags << " false flags on the separated suite";
  r.detail = detail.str();
  return r;
}

// Exhaustive maximum of sum c_w subject to sum c_w * w <= budget, 0 <= c_w <= w
// (weight class w has exactly w distinct pairs).
int exhaustive_cup_length(int budget, int w = 1) {
  if (w > budget) {
    return 0;
  }
  int best = 0;
  for (int c = 0; c <= w && c * w <= budget; ++c) {
    best = std::max(best, c + exhaustive_cup_length(budget - c * w, w + 1));
  }
  return best;
}

CriterionResult criterion_pairs() {
  CriterionResult r{"8a", "pair counting N(N+1)/2", true, "", 0.0};
  std::uint64_t mismatches = 0;
  for (std::uint64_t N = 0; N <= 1000; ++N) {
    std::uint64_t count = 0;
    for (std::uint64_t m = 1; m <= N; ++m) {
      count += N - m + 1;  // k = 0 .. N - m
    }
    mismatches += count == pairs_within_weight(N) ? 0 : 1;
  }
  r.passed = mismatches == 0;
  r.detail = "N = 0..1000, mismatches " + std::to_string(mismatches);
  return r;
}

CriterionResult criterion_greedy() {
  CriterionResult r{"8b", "greedy cup length optimal", true, "", 0.0};
  int mismatches = 0;
  for (int B = 1; B <= 20; ++B) {
    const auto cert = max_cup_length(std::uint64_t{1} << B);
    const bool ok = static_cast<int>(cert.cardinality()) == exhaustive_cup_length(B) &&
                    certificate_valid(cert);
    mismatches += ok ? 0 : 1;
  }
  r.passed = mismatches == 0;
  r.detail = "budgets 1..20, mismatches " + std::to_string(mismatches);
  return r;
}

CriterionResult criterion_lemma_sweep() {
  CriterionResult r{"8c", "cup length >= (log2 d)^(2/3) for d = 2^j, j = 1..60", true, "", 0.0};
  std::vector<int> failing;
  for (int j = 1; j <= 60; ++j) {
    if (!verify_lemma_claim(std::uint64_t{1} << j)) {
      failing.push_back(j);
    }
  }
  r.passed = failing.empty();
  std::ostringstream detail;
  detail << failing.size() << " of 60 exponents fail";
  if (!failing.empty()) {
    const int j = failing.front();
    detail << " (first j=" << j << ": cardinality "
           << max_cup_length(std::uint64_t{1} << j).cardinality() << " < " << fmt(std::cbrt(j * j))
           << "); j =";
    for (int f : failing) {
      detail << ' ' << f;
    }
  }
  r.detail = detail.str();
  return r;
}

CriterionResult criterion_smale_256() {
  CriterionResult r{"8d", "smale_bound(256) == 3", true, "", 0.0};
  r.passed = smale_bound(256) == 3.0;
  r.detail = r.passed ? "exact" : "got " + fmt(smale_bound(256));
  return r;
}

struct CliRun {
  int code = 0;
  std::string out;
  std::vector<std::string> files;
};

CliRun run_with_threads(const std::vector<std::string>& args, const char* threads,
                        const std::vector<std::filesystem::path>& outputs) {
  if (threads) {
    ::setenv("POLYBRANCH_THREADS", threads, 1);
  } else {
    ::unsetenv("POLYBRANCH_THREADS");
  }
  std::ostringstream out, err;
  CliRun run;
  run.code = run_cli(args, out, err);
  run.out = out.str();
  for (const auto& f : outputs) {
    std::ifstream in(f, std::ios::binary);
    run.files.emplace_back(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return run;
}

CriterionResult criterion_determinism(const Options& opts) {
  CriterionResult r{"9", "determinism", true, "", 0.0};
  const auto dir = std::filesystem::temp_directory_path() /
                   ("polybranch_det_" + std::to_string(opts.rng_seed));
  std::filesystem::create_directories(dir);
  const auto ppm = dir / "f.ppm";
  const auto pgm = dir / "f.pgm";
  const std::string seed = std::to_string(opts.rng_seed);

  const std::vector<std::pair<std::vector<std::string>, std::vector<std::filesystem::path>>>
      commands{
          {{"solve", "--coeffs", "-1,0", "--method", "closed-form"}, {}},
          {{"solve", "--coeffs", "1,0;2,-1;0,3", "--method", "closed-form", "--epsilon", "1e-10"},
           {}},
          {{"solve", "--coeffs", "2,-3", "--method", "power-iteration"}, {}},
          {{"solve", "--coeffs", "-1,0", "--method", "power-iteration"}, {}},
          {{"solve", "--pure-power", "--d", "3", "--S", "8,0"}, {}},
          {{"bound", "--degrees", "2,3,4,256", "--rng-seed", seed, "--suite-size", "200"}, {}},
          {{"bound", "--degrees", "2", "--json", "--rng-seed", seed}, {}},
          {{"fractal", "--d", "3", "--seed", "0.77,0.64", "--resolution", "96x80", "--out",
            ppm.string(), "--pgm", pgm.string()},
           {ppm, pgm}},
      };

  const char* saved = std::getenv("POLYBRANCH_THREADS");
  const std::string saved_value = saved ? saved : "";
  std::size_t differing = 0;
  for (const auto& [args, outputs] : commands) {
    const CliRun a = run_with_threads(args, "1", outputs);
    const CliRun b = run_with_threads(args, "1", outputs);
    const CliRun c = run_with_threads(args, "7", outputs);
    const CliRun e = run_with_threads(args, nullptr, outputs);
    for (const CliRun* other : {&b, &c, &e}) {
      if (other->code != a.code || other->out != a.out || other->files != a.files) {
        ++differing;
        break;
      }
    }
  }
  if (saved) {
    ::setenv("POLYBRANCH_THREADS", saved_value.c_str(), 1);
  } else {
    ::unsetenv("POLYBRANCH_THREADS");
  }
  std::filesystem::remove_all(dir);
  r.passed = differing == 0;
  r.detail = std::to_string(commands.size() - differing) + "/" + std::to_string(commands.size()) +
             " commands byte-identical across repeats and thread counts 1, 7, default";
  return r;
}

}  // namespace

std::vector<CriterionResult> run_all(const Options& opts, Progress progress) {
  std::vector<CriterionResult> results;
  auto add = [&](CriterionResult r) {
    if (progress) {
      progress(r);
    }
    results.push_back(std::move(r));
  };
  auto timed = [&](const std::function<CriterionResult()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r = f();
    if (r.seconds == 0.0) {
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    add(std::move(r));
  };

  const Suites suites = run_suites(opts);
  add(criterion_branch_counts(suites));
  add(criterion_strict_bound(suites));
  add(criterion_accuracy(suites));
  timed([&] { return criterion_fractal(opts); });
  timed([&] { return criterion_rotation(opts); });
  const auto t0 = std::chrono::steady_clock::now();
  const auto rate_cases = rate_suite(opts);
  const double rate_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CriterionResult rate = criterion_rate(rate_cases);
  rate.seconds = rate_seconds;
  add(std::move(rate));
  timed([&] { return criterion_equal_magnitude(rate_cases); });
  timed(criterion_pairs);
  timed(criterion_greedy);
  timed(criterion_lemma_sweep);
  timed(criterion_smale_256);
  timed([&] { return criterion_determinism(opts); });
  return results;
}

nlohmann::json to_json(const std::vector<CriterionResult>& results) {
  nlohmann::json list = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  return {{"criteria", list}, {"all_passed", all}};
}

}  // namespace acceptance
