#include "polybranch/cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance.hpp"
#include "polybranch/closed_form.hpp"
#include "polybranch/complexity.hpp"
#include "polybranch/fractal.hpp"
#include "polybranch/solve.hpp"

namespace polybranch {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) {
    throw std::invalid_argument("empty number");
  }
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    parts.push_back(cur);
  }
  if (!s.empty() && s.back() == sep) {
    parts.emplace_back();
  }
  return parts;
}

std::vector<double> parse_reals(const std::string& s, std::size_t expected, const char* what) {
  const auto parts = split(s, ',');
  if (parts.size() != expected) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                " comma-separated numbers");
  }
  std::vector<double> v;
  for (const auto& p : parts) {
    v.push_back(parse_real(p));
  }
  return v;
}

std::uint64_t parse_degree(const std::string& raw) {
  const std::string s = trim(raw);
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (s.empty() || s[0] == '-' || end != s.c_str() + s.size() || errno == ERANGE) {
    throw std::invalid_argument("not a degree: '" + s + "'");
  }
  return v;
}

Resolution parse_resolution(const std::string& s) {
  const auto x = s.find_first_of("xX");
  if (x == std::string::npos) {
    throw std::invalid_argument("resolution must look like WxH");
  }
  const auto w = parse_degree(s.substr(0, x));
  const auto h = parse_degree(s.substr(x + 1));
  if (w < 1 || h < 1 || w > 65536 || h > 65536) {
    throw std::invalid_argument("resolution out of range");
  }
  return {static_cast<int>(w), static_cast<int>(h)};
}

nlohmann::json real_or_null(double x) {
  return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json();
}

void print(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

// Worst recorded branch count of the closed-form solver over `n` random
// polynomials with coefficients uniform in the disk |a| <= 10.
std::size_t measure_closed_form(int d, std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(d));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const NewtonConfig cfg;
  std::size_t worst = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<Complex> a(static_cast<std::size_t>(d));
    for (auto& c : a) {
      const double r = 10.0 * std::sqrt(u(rng));
      c = std::polar(r, 2.0 * std::numbers::pi * u(rng));
    }
    BranchTrace trace;
    solve_closed_form(MonicPolynomial(a), cfg, trace);
    worst = std::max(worst, trace.size());
  }
  return worst;
}

struct SolveArgs {
  std::string coeffs;
  std::string method = "closed-form";
  bool pure_power = false;
  int d = 0;
  std::string S;
  double epsilon = 1e-8;
  int max_iters = 0;
};

int cmd_solve(const SolveArgs& a, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  SolveRequest req;
  try {
    if (a.pure_power) {
      if (sub.count("--coeffs") > 0) {
        throw std::invalid_argument("--pure-power takes --d and --S, not --coeffs");
      }
      if (a.d < 2 || a.S.empty()) {
        throw std::invalid_argument("--pure-power needs --d >= 2 and --S");
      }
      req.method = SolveMethod::pure_power;
      req.coefficients.assign(static_cast<std::size_t>(a.d), Complex{});
      req.coefficients[0] = -parse_complex(a.S);
    } else {
      if (a.coeffs.empty()) {
        throw std::invalid_argument("--coeffs is required");
      }
      const auto m = parse_method(a.method);
      if (!m) {
        throw std::invalid_argument("unknown method '" + a.method + "'");
      }
      req.method = *m;
      req.coefficients = parse_coefficients(a.coeffs);
    }
    req.epsilon = a.epsilon;
    if (sub.count("--max-iters") > 0) {
      req.max_iters = a.max_iters;
    }
    validate(req);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    const RootReport report = solve(req);
    print(out, to_json(report));
    return report.warnings.empty() ? 0 : 2;
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << " after " << e.outcome().iterations << " iterations\n";
    return 1;
  }
}

struct FractalArgs {
  int d = 2;
  std::string seed = "1,0";
  std::string out;
  std::string pgm;
  double threshold = 0.1;
  int max_iters = 100;
  std::string window = "-2,2,-2,2";
  std::string resolution = "512x512";
  std::string annulus = "0.1,inf";
};

int cmd_fractal(const FractalArgs& a, std::ostream& out, std::ostream& err) {
  NewtonConfig cfg;
  FractalWindow window;
  Resolution res;
  Complex seed;
  AnnulusFilter filter;
  try {
    if (a.d < 2) {
      throw std::invalid_argument("--d must be >= 2");
    }
    seed = parse_complex(a.seed);
    if (seed == Complex{}) {
      throw std::invalid_argument("--seed must be nonzero");
    }
    cfg.threshold_r = a.threshold;
    cfg.max_iters_N = a.max_iters;
    cfg.validate();
    const auto w = parse_reals(a.window, 4, "--window");
    window = {w[0], w[1], w[2], w[3]};
    window.validate();
    res = parse_resolution(a.resolution);
    const auto ann = parse_reals(a.annulus, 2, "--annulus");
    filter = {ann[0], ann[1]};
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const FractalGrid grid = render(a.d, seed, cfg, window, res);
  try {
    write_ppm(grid, a.out);
    if (!a.pgm.empty()) {
      write_pgm(grid, a.pgm);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  nlohmann::json j{{"schema", 1},
                   {"d", a.d},
                   {"seed", complex_to_json(seed)},
                   {"threshold_r", cfg.threshold_r},
                   {"max_iters_N", cfg.max_iters_N},
                   {"window", {window.re_min, window.re_max, window.im_min, window.im_max}},
                   {"resolution", {res.width, res.height}},
                   {"annulus", {filter.min_modulus, real_or_null(filter.max_modulus)}},
                   {"image", a.out},
                   {"sector_statistics", to_json(sector_statistics(grid, filter))}};
  if (!a.pgm.empty()) {
    j["pgm"] = a.pgm;
  }
  print(out, j);
  return 0;
}

struct BoundArgs {
  std::string degrees;
  bool json = false;
  std::uint64_t rng_seed = 20240601;
  int suite_size = 1000;
};

int cmd_bound(const BoundArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::uint64_t> degrees;
  try {
    for (const auto& part : split(a.degrees, ',')) {
      const auto d = parse_degree(part);
      if (d < 2) {
        throw std::invalid_argument("degrees must be >= 2");
      }
      degrees.push_back(d);
    }
    if (degrees.empty()) {
      throw std::invalid_argument("--degrees is empty");
    }
    if (a.suite_size < 1) {
      throw std::invalid_argument("--suite-size must be >= 1");
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  nlohmann::json rows = nlohmann::json::array();
  for (const auto d : degrees) {
    const double bound = smale_bound(d);
    std::optional<std::size_t> measured;
    if (d >= 2 && d <= 4) {
      measured = measure_closed_form(static_cast<int>(d), a.rng_seed, a.suite_size);
    }
    nlohmann::json row;
    if (measured) {
      row = to_json(make_report(static_cast<int>(d), *measured));
    } else {
      row = {{"degree", d},
             {"measured_branches", nullptr},
             {"smale_lower_bound", bound},
             {"bound_satisfied", nullptr}};
    }
    if (!a.json) {
      const CupLengthCertificate cert = max_cup_length(d);
      row["solver"] = measured ? nlohmann::json("closed-form") : nlohmann::json();
      row["suite_size"] = measured ? nlohmann::json(a.suite_size) : nlohmann::json();
      row["certificate"] = to_json(cert);
      row["lemma_claim_holds"] = verify_lemma_claim(d);
    }
    rows.push_back(row);
  }
  nlohmann::json j{{"schema", 1}, {"rows", rows}};
  if (!a.json) {
    j["rng_seed"] = a.rng_seed;
  }
  print(out, j);
  return 0;
}

struct VerifyArgs {
  std::uint64_t rng_seed = 20240601;
  int suite_size = 10000;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.suite_size < 1) {
    err << "error: --suite-size must be >= 1\n";
    return 1;
  }
  acceptance::Options opts;
  opts.rng_seed = a.rng_seed;
  opts.suite_size = a.suite_size;
  opts.workers = default_workers();
  const auto results = acceptance::run_all(opts);
  nlohmann::json j = acceptance::to_json(results);
  j["schema"] = 1;
  print(out, j);
  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const acceptance::CriterionResult& r) { return r.passed; });
  return ok ? 0 : 2;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) {
    return {parse_real(parts[0]), 0.0};
  }
  if (parts.size() == 2) {
    return {parse_real(parts[0]), parse_real(parts[1])};
  }
  throw std::invalid_argument("complex number must be 're,im': '" + text + "'");
}

std::vector<Complex> parse_coefficients(const std::string& text) {
  std::vector<Complex> out;
  if (text.find(';') != std::string::npos) {
    for (const auto& part : split(text, ';')) {
      out.push_back(parse_complex(part));
    }
  } else {
    for (const auto& part : split(text, ',')) {
      out.emplace_back(parse_real(part), 0.0);
    }
  }
  if (out.empty()) {
    throw std::invalid_argument("no coefficients given");
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Branch-accounted polynomial root finding"};
  app.name("polybranch");
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one monic polynomial, JSON on stdout");
  solve_cmd->add_option("--coeffs", sa.coeffs,
                        "a_0..a_{d-1}, low to high: '2,-3' or complex '1,0;0,1'");
  solve_cmd->add_option("--method", sa.method, "closed-form | power-iteration | pure-power")
      ->capture_default_str();
  solve_cmd->add_flag("--pure-power", sa.pure_power, "Solve t^d - S (use --d and --S)");
  solve_cmd->add_option("--d", sa.d, "Degree for --pure-power");
  solve_cmd->add_option("--S", sa.S, "S as 're,im' for --pure-power");
  solve_cmd->add_option("--epsilon", sa.epsilon, "Newton radius / power-iteration tolerance")
      ->capture_default_str();
  solve_cmd->add_option("--max-iters", sa.max_iters,
                        "Iteration cap (default 100 for Newton, 5000 for power iteration)");

  FractalArgs fa;
  auto* fractal_cmd = app.add_subcommand("fractal", "Render a Newton escape-time diagram");
  fractal_cmd->add_option("--d", fa.d, "Degree of t^d - S")->required();
  fractal_cmd->add_option("--seed", fa.seed, "Newton seed 're,im'")->capture_default_str();
  fractal_cmd->add_option("--out", fa.out, "PPM output path")->required();
  fractal_cmd->add_option("--pgm", fa.pgm, "Optional plain PGM of raw step counts");
  fractal_cmd->add_option("--threshold", fa.threshold, "Convergence radius r")
      ->capture_default_str();
  fractal_cmd->add_option("--max-iters", fa.max_iters, "Step cap N")->capture_default_str();
  fractal_cmd->add_option("--window", fa.window, "re0,re1,im0,im1")->capture_default_str();
  fractal_cmd->add_option("--resolution", fa.resolution, "WxH")->capture_default_str();
  fractal_cmd->add_option("--annulus", fa.annulus, "min,max |S| for sector statistics")
      ->capture_default_str();

  BoundArgs ba;
  auto* bound_cmd = app.add_subcommand("bound", "Lower bound versus measured branch counts");
  bound_cmd->add_option("--degrees", ba.degrees, "Comma-separated degrees")->required();
  bound_cmd->add_flag("--json", ba.json, "Only the four-field complexity report per degree");
  bound_cmd->add_option("--rng-seed", ba.rng_seed, "Seed of the random suite")
      ->capture_default_str();
  bound_cmd->add_option("--suite-size", ba.suite_size, "Random inputs per degree")
      ->capture_default_str();

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");
  verify_cmd->add_option("--rng-seed", va.rng_seed, "Seed of the random suites")
      ->capture_default_str();
  verify_cmd->add_option("--suite-size", va.suite_size, "Random inputs per degree")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  if (*solve_cmd) {
    return cmd_solve(sa, *solve_cmd, out, err);
  }
  if (*fractal_cmd) {
    return cmd_fractal(fa, out, err);
  }
  if (*bound_cmd) {
    return cmd_bound(ba, out, err);
  }
  return cmd_verify(va, out, err);
}

}  // namespace polybranch
