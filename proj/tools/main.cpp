// dkps3: spin-1 particle in a uniform magnetic field on the 3-sphere.
// Subcommands expose the exact matrix-algebra checks, geometry verification,
// the radial spectrum, the indicial (Frobenius/Cardano) analysis, and the
// coupled z-system eigensolver. Payload goes to stdout (or --out) and is
// byte-deterministic for a given config; the manifest line goes to stderr.

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dkps3/algebra.hpp"
#include "dkps3/geometry.hpp"
#include "dkps3/radial.hpp"
#include "dkps3/version.hpp"
#include "dkps3/zsystem.hpp"

#include "checks.hpp"
#include "output.hpp"

namespace {

using namespace dkps3;
using cli::Table;

enum ExitCode { kOk = 0, kChecksFailed = 1, kUsage = 2, kNoConvergence = 3 };

struct RunResult {
  Table table;
  int passed = 0;
  int total = 0;
  bool converged = true;
};

template <class F>
void parallel_for(int n, F&& f) {
  const unsigned workers =
      std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  if (workers == 1 || n < 8) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) f(i);
    });
  for (auto& t : pool) t.join();
}

// ----------------------------------------------------------------------------
// algebra-check

RunResult run_algebra_check() {
  RunResult res;
  res.table.columns = {"check_name", "pass", "detail"};
  for (const auto& c : algebra::run_identity_checks()) {
    res.table.add_row({c.name, c.pass, c.detail});
    res.passed += c.pass ? 1 : 0;
    ++res.total;
  }
  // Float-conversion residual of the trilinear identity.
  const auto rep = algebra::check_dkp_algebra(algebra::build_dkp_set());
  const bool float_ok = rep.max_float_residual <= 1e-14;
  res.table.add_row({std::string("trilinear float residual <= 1e-14"), float_ok,
                     cli::format_double(rep.max_float_residual)});
  res.passed += float_ok ? 1 : 0;
  ++res.total;
  return res;
}

// ----------------------------------------------------------------------------
// geometry-check

RunResult run_geometry_check(int samples, unsigned seed, const cli::Tolerances& tol) {
  RunResult res;
  res.table.columns = {"check_name", "max_residual", "tolerance", "pass"};
  std::mt19937_64 rng(seed);

  double christoffel = 0, tetrad = 0, compat = 0, field = 0;
  for (int i = 0; i < samples; ++i) {
    const double r = cli::pinned_uniform(rng, 0.15, M_PI - 0.15);
    const double z = cli::pinned_uniform(rng, -M_PI_2 + 0.15, M_PI_2 - 0.15);
    christoffel = std::max(christoffel, cli::christoffel_fd_residual(r, z, 1e-4));
    tetrad = std::max(tetrad, geometry::tetrad_orthonormality_residual(r, z));
    compat = std::max(compat, geometry::metric_compatibility_residual(r, z));
    const double B = cli::pinned_uniform(rng, -3.0, 3.0);
    field = std::max(field, cli::field_strength_fd_residual({B, 0}, r, 1e-5));
  }
  const double origin = std::abs(geometry::FieldConfig{1.5, 0}.a_phi(0.0));

  auto add = [&res](const std::string& name, double value, double tolerance) {
    const bool pass = value <= tolerance;
    res.table.add_row({name, value, tolerance, pass});
    res.passed += pass ? 1 : 0;
    ++res.total;
  };
  add("christoffel_fd", christoffel, tol.get("christoffel-fd"));
  add("tetrad_orthonormality", tetrad, tol.get("tetrad"));
  add("metric_compatibility", compat, tol.get("metric-compat"));
  add("field_strength_fd", field, tol.get("field-fd"));
  add("potential_origin_gauge", origin, 0.0);
  return res;
}

// ----------------------------------------------------------------------------
// spectrum

RunResult run_spectrum(int m_max, const std::vector<double>& b_values, int n_max) {
  RunResult res;
  res.table.columns = {"m",      "B",      "n",      "a_r",
                       "b_r",    "lambda", "lambda_prime", "Lambda",
                       "N",      "check_2Lambda_plus_B2", "N_times_Nplus1"};
  struct Item {
    int m, n;
    double B;
  };
  std::vector<Item> items;
  for (int m = -m_max; m <= m_max; ++m)
    for (double B : b_values)
      for (int n = 0; n <= n_max; ++n) items.push_back({m, n, B});

  std::vector<std::vector<cli::Cell>> rows(items.size());
  std::atomic<int> failures{0};
  parallel_for(static_cast<int>(items.size()), [&](int i) {
    const auto& it = items[i];
    const auto sol = radial::quantize<Rational>(it.m, Rational::from_double(it.B), it.n);
    const Rational check =
        Rational(2) * sol.Lambda + sol.B * sol.B - sol.N * (sol.N + Rational(1));
    if (!check.is_zero()) failures.fetch_add(1);
    rows[i] = {static_cast<long long>(it.m),
               it.B,
               static_cast<long long>(it.n),
               sol.a_r.value(),
               sol.b_r.value(),
               sol.lambda.value(),
               sol.lambda_prime.value(),
               sol.Lambda.value(),
               sol.N.value(),
               check.value(),
               (sol.N * (sol.N + Rational(1))).value()};
  });
  for (auto& row : rows) res.table.add_row(std::move(row));
  res.total = static_cast<int>(items.size());
  res.passed = res.total - failures.load();
  return res;
}

// ----------------------------------------------------------------------------
// radial-eval

RunResult run_radial_eval(int m, double B, int n, int points) {
  RunResult res;
  res.table.columns = {"r", "R"};
  const auto sol = radial::to_double(radial::quantize<Rational>(m, Rational::from_double(B), n));
  const auto grid = radial::uniform_open_grid(0.0, M_PI, points);
  const auto R = radial::radial_wavefunction(sol, grid);
  for (int j = 0; j < points; ++j) res.table.add_row({grid[j], R[j]});
  res.passed = res.total = 1;
  return res;
}

// ----------------------------------------------------------------------------
// indicial

RunResult run_indicial(double Lambda, double B) {
  RunResult res;
  const auto spec = zsystem::indicial_cubic(Lambda, B);
  const auto exps = zsystem::frobenius_exponents(spec);

  res.table.columns = {"Lambda", "B", "lambda", "lambda_prime", "a_c", "b_c", "c_c",
                       "p",      "q", "branch", "phi"};
  std::vector<cli::Cell> row{Lambda,   B,        spec.lambda, spec.lambda_prime,
                             spec.a_c, spec.b_c, spec.c_c,    spec.p,
                             spec.q,   zsystem::branch_name(spec.branch),
                             spec.phi};
  for (int k = 0; k < 3; ++k) {
    const std::string p = "root" + std::to_string(k + 1) + "_";
    const auto ratios = zsystem::amplitude_ratios(spec, k);
    for (const auto& suffix : {"re", "im", "exp_regular", "exp_singular"})
      res.table.columns.push_back(p + suffix);
    res.table.columns.push_back(p + "oscillatory");
    res.table.columns.push_back(p + "degenerate");
    for (const auto& suffix : {"a1_over_a2", "a3_over_a2", "b1_over_b2", "b3_over_b2"})
      res.table.columns.push_back(p + suffix);
    row.insert(row.end(), {spec.roots[k].real(), spec.roots[k].imag(), exps[k].regular,
                           exps[k].singular, exps[k].oscillatory, ratios.degenerate,
                           ratios.a1_over_a2, ratios.a3_over_a2, ratios.b1_over_b2,
                           ratios.b3_over_b2});
  }
  res.table.add_row(std::move(row));
  res.passed = res.total = 1;
  return res;
}

// ----------------------------------------------------------------------------
// zsolve

RunResult run_zsolve(double lambda, double B, int grid, int nev, int refinements,
                     const cli::Tolerances& tol) {
  RunResult res;
  res.table.columns = {"index", "eps2M", "left_exp_fit", "right_exp_fit", "grid", "converged"};
  zsystem::ZSolveOptions opt;
  opt.refinements = refinements;
  opt.imag_tol = tol.get("eigen-imag");
  const auto sols = zsystem::solve_z_eigenproblem(lambda, B, grid, nev, opt);
  for (const auto& s : sols) {
    res.table.add_row({static_cast<long long>(s.index), s.eps2M, s.left_fit, s.right_fit,
                       static_cast<long long>(s.refinement_history.back().first), s.converged});
  }
  res.total = nev;
  res.passed = static_cast<int>(sols.size());
  res.converged = static_cast<int>(sols.size()) == nev;
  return res;
}

// ----------------------------------------------------------------------------
// verify-all

RunResult run_verify_all(unsigned seed, const cli::Tolerances& tol) {
  RunResult res;
  res.table.columns = {"check_name", "value", "tolerance", "pass", "detail"};
  auto add = [&res](const std::string& name, double value, double tolerance, bool pass,
                    const std::string& detail = "") {
    res.table.add_row({name, value, tolerance, pass, detail});
    res.passed += pass ? 1 : 0;
    ++res.total;
  };
  auto add_le = [&add](const std::string& name, double value, double tolerance,
                       const std::string& detail = "") {
    add(name, value, tolerance, value <= tolerance, detail);
  };

  {  // exact matrix algebra
    int failing = 0;
    for (const auto& c : algebra::run_identity_checks())
      if (!c.pass) ++failing;
    add("algebra_exact_identities_failing", failing, 0.0, failing == 0);
    const auto rep = algebra::check_dkp_algebra(algebra::build_dkp_set());
    add_le("algebra_trilinear_float_residual", rep.max_float_residual, tol.get("float-algebra"));
  }

  {  // geometry at 100 seeded samples
    const RunResult geo = run_geometry_check(100, seed, tol);
    for (const auto& row : geo.table.rows)
      res.table.add_row({std::get<std::string>(row[0]), row[1], row[2], row[3], std::string()});
    res.passed += geo.passed;
    res.total += geo.total;
  }

  {  // radial lattice: exact rule, degeneracy, mirror, ODE residual
    int rule_fail = 0, degeneracy_fail = 0, mirror_fail = 0;
    double worst_ode = 0.0;
    std::map<std::pair<std::pair<long long, long long>, std::pair<long long, long long>>,
             Rational>
        by_class;  // key: (B num/den, N num/den) -> lambda
    const std::vector<Rational> lattice = {Rational(0),  Rational(1, 2), Rational(-1, 2),
                                           Rational(1),  Rational(-1),   Rational(2)};
    for (int m = -3; m <= 3; ++m)
      for (const auto& B : lattice)
        for (int n = 0; n <= 4; ++n) {
          const auto sol = radial::quantize<Rational>(m, B, n);
          const Rational check =
              Rational(2) * sol.Lambda + sol.B * sol.B - sol.N * (sol.N + Rational(1));
          if (!check.is_zero()) ++rule_fail;
          const auto key = std::make_pair(std::make_pair(B.num(), B.den()),
                                          std::make_pair(sol.N.num(), sol.N.den()));
          auto [it, inserted] = by_class.emplace(key, sol.lambda);
          if (!inserted && !(it->second == sol.lambda)) ++degeneracy_fail;
          const auto mirror = radial::quantize<Rational>(-m, -B, n);
          if (!(mirror.Lambda == sol.Lambda) || !(mirror.lambda == sol.lambda_prime))
            ++mirror_fail;
          worst_ode = std::max(worst_ode, cli::ode_residual_y(radial::to_double(sol), 2000));
        }
    add("radial_quantization_rule_exact_failures", rule_fail, 0.0, rule_fail == 0);
    add("radial_degeneracy_class_failures", degeneracy_fail, 0.0, degeneracy_fail == 0);
    add("radial_mirror_symmetry_failures", mirror_fail, 0.0, mirror_fail == 0);
    add_le("radial_ode_residual", worst_ode, tol.get("ode-resid"));
  }

  {  // eigenrelation residual at the reference point (m=1, B=1, n=0)
    const auto sol = radial::to_double(radial::quantize<Rational>(1, Rational(1), 0));
    const auto rep = radial::verify_eigenrelation(sol, 1e-3);
    add_le("radial_eigenrelation_residual",
           std::max(rep.resid_lambda, rep.resid_lambda_prime), tol.get("eigenrel"));
  }

  {  // discretized-operator oracle: error ratio between grid halvings
    double min_ratio = std::numeric_limits<double>::max();
    for (const auto& [m, B] : std::vector<std::pair<int, double>>{{1, 0.0}, {1, 1.0}, {2, 1.0}}) {
      const double target =
          radial::quantize<double>(m, B, 0).lambda;
      double prev_err = -1.0;
      for (int K : {100, 200, 400}) {
        const double err =
            std::abs(radial::discretized_ground_eigenvalue({B, m}, K) - target);
        if (prev_err > 0.0) min_ratio = std::min(min_ratio, prev_err / err);
        prev_err = err;
      }
    }
    add("radial_operator_oracle_min_ratio", min_ratio, 3.0, min_ratio >= 3.0);
  }

  {  // cubic sampling
    const auto rep = cli::sample_cubics(200, seed);
    add_le("cubic_poly_residual", rep.max_poly_residual, tol.get("cubic-resid"));
    add_le("cubic_vieta", rep.max_vieta, tol.get("vieta"));
    add_le("cubic_triple_angle", rep.max_triple_angle, tol.get("triple-angle"));
    add_le("cubic_b0_lambda_root", rep.max_b0_root_gap, tol.get("cubic-resid"));
    add("cubic_inequality_p_gt_q_violations", rep.inequality_violations, 0.0, true,
        rep.first_violation);  // recorded, not failed
  }

  {  // z-system: decoupled oracle + coupled D-family fits + parity
    zsystem::ZSolveOptions opt;
    opt.refinements = 2;
    const auto sols = zsystem::solve_z_eigenproblem(0.0, 0.0, 200, 6, opt);
    const auto oracle = cli::decoupled_oracle(6);
    double worst = 0.0, worst_parity = 0.0;
    for (std::size_t k = 0; k < sols.size(); ++k)
      worst = std::max(worst, std::abs(sols[k].eps2M - oracle[k]) / oracle[k]);
    add_le("z_decoupled_vs_oracle", worst, tol.get("z-decoupled-rel"));

    const auto coupled = zsystem::solve_z_eigenproblem(1.0, 0.0, 200, 8, opt);
    double worst_fit = -1.0;
    int dmodes = 0;
    for (const auto& s : coupled) {
      double z2 = 0, sup = 0;
      for (double v : s.Z2bar) z2 = std::max(z2, std::abs(v));
      for (const auto* ch : {&s.Z1, &s.Z2bar, &s.Z3})
        for (double v : *ch) sup = std::max(sup, std::abs(v));
      const int K = static_cast<int>(s.x.size());
      double dplus = 0, dminus = 0;
      for (int j = 0; j < K; ++j) {
        const int mj = K - 1 - j;
        dplus = std::max({dplus, std::abs(s.Z3[mj] - s.Z1[j]),
                          std::abs(-s.Z2bar[mj] - s.Z2bar[j]), std::abs(s.Z1[mj] - s.Z3[j])});
        dminus = std::max({dminus, std::abs(s.Z3[mj] + s.Z1[j]),
                           std::abs(-s.Z2bar[mj] + s.Z2bar[j]), std::abs(s.Z1[mj] + s.Z3[j])});
      }
      worst_parity = std::max(worst_parity, std::min(dplus, dminus) / sup);
      if (z2 <= 1e-6 * sup) {  // D-family: designated exponents are exact
        ++dmodes;
        for (int c : {0, 2}) {
          const double a = s.channel_exponent[c];
          worst_fit = std::max({worst_fit, std::abs(s.left_exponent[c] - a) / a,
                                std::abs(s.right_exponent[c] - a) / a});
        }
      }
    }
    add("z_coupled_dmode_count", dmodes, 1.0, dmodes >= 1);
    add_le("z_coupled_dmode_fit_error", worst_fit < 0 ? 1.0 : worst_fit, tol.get("fit-rel"));
    add_le("z_parity_defect", worst_parity, tol.get("parity"));
  }

  return res;
}

// ----------------------------------------------------------------------------

std::string config_echo(const CLI::App* sub) {
  std::string echo;
  for (const auto* opt : sub->get_options()) {
    if (opt->get_name().empty() || opt->count() == 0) continue;
    if (!echo.empty()) echo += " ";
    echo += opt->get_name() + "=";
    for (std::size_t i = 0; i < opt->results().size(); ++i)
      echo += (i ? "," : "") + opt->results()[i];
  }
  return echo;
}

// The sampling seed is always part of the manifest, defaulted or not.
std::string echo_with_seed(const CLI::App* sub, unsigned seed_value) {
  std::string echo = config_echo(sub);
  if (echo.find("--seed") == std::string::npos) {
    if (!echo.empty()) echo += " ";
    echo += "--seed=" + std::to_string(seed_value) + " (default)";
  }
  return echo;
}

template <class T>
void config_override(const nlohmann::json& cfg, const CLI::App* sub, const std::string& key,
                     T& var) {
  const CLI::Option* opt = sub->get_option_no_throw("--" + key);
  if (opt && opt->count() > 0) return;  // explicit flag wins
  const auto section = cfg.find(sub->get_name());
  if (section != cfg.end() && section->contains(key)) {
    section->at(key).get_to(var);
    return;
  }
  if (cfg.contains(key) && !cfg.at(key).is_object()) cfg.at(key).get_to(var);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum mechanics of a spin-1 particle in a magnetic field on the 3-sphere"};
  app.require_subcommand(1);

  std::string format = "csv", out_path, config_path;
  std::vector<std::string> tol_flags;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "write payload to file instead of stdout");
  app.add_option("--config", config_path, "JSON config file with option defaults");
  app.add_option("--tol", tol_flags, "tolerance override NAME=VALUE (repeatable)");

  auto* algebra_cmd = app.add_subcommand("algebra-check", "exact matrix identities");

  auto* geometry_cmd = app.add_subcommand("geometry-check", "metric/tetrad/connection residuals");
  int samples = 100;
  unsigned seed = 0;
  geometry_cmd->add_option("--samples", samples, "number of random interior points");
  geometry_cmd->add_option("--seed", seed, "sampling seed");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "radial bound-state sweep");
  int m_max = 2, n_max = 3;
  std::vector<double> b_values{1.0};
  spectrum_cmd->add_option("--m-max", m_max, "sweep m in [-m-max, m-max]");
  spectrum_cmd->add_option("--b", b_values, "field values")->delimiter(',');
  spectrum_cmd->add_option("--n-max", n_max, "sweep n in [0, n-max]");

  auto* radial_cmd = app.add_subcommand("radial-eval", "sampled bound-state wavefunction");
  int rm = 0, rn = 0, points = 512;
  double rB = 0.0;
  radial_cmd->add_option("--m", rm, "azimuthal quantum number");
  radial_cmd->add_option("--b", rB, "field value");
  radial_cmd->add_option("--n", rn, "radial quantum number");
  radial_cmd->add_option("--points", points, "grid size");

  auto* indicial_cmd = app.add_subcommand("indicial", "indicial cubic and Frobenius exponents");
  double Lambda = 1.0, iB = 0.0;
  indicial_cmd->add_option("--Lambda", Lambda, "spectral parameter");
  indicial_cmd->add_option("--b", iB, "field value");

  auto* zsolve_cmd = app.add_subcommand("zsolve", "coupled z-system eigenproblem");
  double zlambda = 0.0, zB = 0.0;
  int zgrid = 400, nev = 5, refinements = 2;
  zsolve_cmd->add_option("--lambda", zlambda, "radial eigenvalue");
  zsolve_cmd->add_option("--b", zB, "field value (lambda' = lambda + B)");
  zsolve_cmd->add_option("--grid", zgrid, "base interior grid size");
  zsolve_cmd->add_option("--nev", nev, "number of eigenvalues");
  zsolve_cmd->add_option("--refinements", refinements, "x2 grid refinements");

  auto* verify_cmd = app.add_subcommand("verify-all", "run every check suite");
  unsigned vseed = 0;
  verify_cmd->add_option("--seed", vseed, "sampling seed");

  for (auto* s : app.get_subcommands(nullptr)) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  CLI::App* sub = app.get_subcommands().front();
  std::string status = "ok";
  int exit_code = kOk;
  RunResult res;

  try {
    cli::Tolerances tol;
    nlohmann::json cfg = nlohmann::json::object();
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw std::invalid_argument("cannot read config file: " + config_path);
      f >> cfg;
      if (cfg.contains("tol"))
        for (const auto& [k, v] : cfg.at("tol").items()) tol.set(k, v.get<double>());
      config_override(cfg, &app, "format", format);
      config_override(cfg, &app, "out", out_path);
    }
    for (const auto& s : tol_flags) tol.apply_flag(s);

    if (sub == algebra_cmd) {
      res = run_algebra_check();
    } else if (sub == geometry_cmd) {
      config_override(cfg, sub, "samples", samples);
      config_override(cfg, sub, "seed", seed);
      res = run_geometry_check(samples, seed, tol);
    } else if (sub == spectrum_cmd) {
      config_override(cfg, sub, "m-max", m_max);
      config_override(cfg, sub, "n-max", n_max);
      config_override(cfg, sub, "b", b_values);
      if (m_max < 0 || n_max < 0) throw std::invalid_argument("m-max and n-max must be >= 0");
      res = run_spectrum(m_max, b_values, n_max);
    } else if (sub == radial_cmd) {
      config_override(cfg, sub, "m", rm);
      config_override(cfg, sub, "b", rB);
      config_override(cfg, sub, "n", rn);
      config_override(cfg, sub, "points", points);
      if (rn < 0) throw std::invalid_argument("n must be >= 0");
      if (points < 8) throw std::invalid_argument("points must be >= 8");
      res = run_radial_eval(rm, rB, rn, points);
    } else if (sub == indicial_cmd) {
      config_override(cfg, sub, "Lambda", Lambda);
      config_override(cfg, sub, "b", iB);
      res = run_indicial(Lambda, iB);
    } else if (sub == zsolve_cmd) {
      config_override(cfg, sub, "lambda", zlambda);
      config_override(cfg, sub, "b", zB);
      config_override(cfg, sub, "grid", zgrid);
      config_override(cfg, sub, "nev", nev);
      config_override(cfg, sub, "refinements", refinements);
      if (zgrid < 16 || nev < 1 || refinements < 0)
        throw std::invalid_argument("zsolve: grid >= 16, nev >= 1, refinements >= 0");
      res = run_zsolve(zlambda, zB, zgrid, nev, refinements, tol);
      if (!res.converged) {
        status = "noconv";
        exit_code = kNoConvergence;
      }
    } else if (sub == verify_cmd) {
      config_override(cfg, sub, "seed", vseed);
      res = run_verify_all(vseed, tol);
    }

    cli::OutputSink sink{format, out_path};
    sink.emit(res.table);
    if (exit_code == kOk && res.passed < res.total) {
      status = "fail";
      exit_code = kChecksFailed;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    status = "usage";
    exit_code = kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    status = "usage";
    exit_code = kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    status = "usage";
    exit_code = kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    status = "noconv";
    exit_code = kNoConvergence;
  }

  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::string echo = config_echo(sub);
  if (sub == geometry_cmd) echo = echo_with_seed(sub, seed);
  if (sub == verify_cmd) echo = echo_with_seed(sub, vseed);
  cli::manifest(sub->get_name(), echo, wall_ms, status, res.passed, res.total);
  return exit_code;
}
