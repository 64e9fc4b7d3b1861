#include "entspec/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "entspec/asymptotics.hpp"
#include "entspec/errors.hpp"
#include "entspec/oracle.hpp"
#include "entspec/spectrum.hpp"

namespace entspec {
namespace {

constexpr double kVerifyTolerance = 1e-10;
constexpr std::size_t kVerifyOracleBlock = 32;
constexpr std::size_t kVerifyOracleEigenvalues = 10;
// A 32-site block still splits boundary pairs at the 1e-6 level, so the
// quick check groups and compares more loosely than the L = 64 protocol.
constexpr double kVerifyOracleTolerance = 1e-4;
constexpr double kVerifyOracleGrouping = 1e-3;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Representation parse_representation(const std::string& s) {
  if (s == "theta") return Representation::Theta;
  if (s == "lambda") return Representation::Lambda;
  if (s == "qseries") return Representation::QSeries;
  if (s == "spectrum") return Representation::SpectrumSum;
  throw UsageError("unknown representation '" + s + "'");
}

Table spectrum_table(const RunConfig& c) {
  const EntanglementSpectrum s = exact_spectrum(classify(c.gamma, c.h), c.n_max + 1);
  Table t{"spectrum", {"n", "lambda", "degeneracy", "ln_lambda"}, {}};
  for (std::size_t n = 0; n <= c.n_max; ++n)
    t.rows.push_back({integer_cell((long long)n), number_cell(s.eigenvalues[n], c.precision),
                      big_integer_cell(s.degeneracies[n]),
                      number_cell(s.log_eigenvalues[n], c.precision)});
  return t;
}

Table entropy_table(const RunConfig& c) {
  const ModelPoint p = classify(c.gamma, c.h);
  std::vector<Representation> reps;
  if (c.representation == "all")
    reps = {Representation::Theta, Representation::Lambda, Representation::QSeries,
            Representation::SpectrumSum};
  else
    reps = {parse_representation(c.representation)};
  Table t{"entropy", {"alpha", "representation", "entropy"}, {}};
  for (double a : c.alpha) {
    if (a == 1.0) {
      t.rows.push_back({number_cell(a, c.precision), text_cell("von_neumann"),
                        number_cell(von_neumann_entropy(p), c.precision)});
      continue;
    }
    for (Representation r : reps)
      t.rows.push_back({number_cell(a, c.precision), text_cell(std::string(to_string(r))),
                        number_cell(renyi_entropy(p, a, r).value, c.precision)});
  }
  return t;
}

struct Check {
  std::string name;
  bool pass;
  double value;
  double tolerance;
};

Table verify_table(const RunConfig& c, bool& passed) {
  const ModelPoint p = classify(c.gamma, c.h);
  std::vector<Check> checks;

  const double trace = std::max(std::abs(log_zeta_product(p, 1.0)),
                                std::abs(log_zeta_spectrum_sum(p, 1.0)));
  checks.push_back({"trace_normalization", trace < kVerifyTolerance, trace, kVerifyTolerance});

  double spread = 0.0;
  for (double a : {0.5, 2.0, 3.0, 5.0}) {
    std::vector<double> v;
    for (Representation r : {Representation::Theta, Representation::Lambda,
                             Representation::QSeries, Representation::SpectrumSum})
      v.push_back(renyi_entropy(p, a, r).value);
    spread = std::max(spread, *std::max_element(v.begin(), v.end()) -
                                  *std::min_element(v.begin(), v.end()));
  }
  checks.push_back({"representation_agreement", spread < kVerifyTolerance, spread, kVerifyTolerance});

  const auto tables = shared_tables(1000);
  std::size_t euler_bad = 0;
  for (std::size_t n = 0; n <= 1000; ++n)
    if (tables->p_distinct[n] != tables->p_odd[n]) ++euler_bad;
  checks.push_back({"euler_identity", euler_bad == 0, double(euler_bad), 0.0});

  const EntanglementSpectrum s = exact_spectrum(p, 21);
  double cauchy_err = 0.0;
  bool cauchy_ok = true;
  for (std::size_t n = 0; n <= 20; ++n) {
    const double g = cauchy_degeneracy(p, n, default_quadrature_points(n));
    const double exact = s.degeneracies[n].get_d();
    cauchy_err = std::max(cauchy_err, std::abs(g - exact));
    cauchy_ok = cauchy_ok && std::llround(g) == std::llround(exact);
  }
  checks.push_back({"cauchy_degeneracies", cauchy_ok && cauchy_err < 1e-6, cauchy_err, 1e-6});

  if (c.with_oracle) {
    const OracleSpectrum o = free_fermion_spectrum(p, kVerifyOracleBlock, 4 * kVerifyOracleEigenvalues);
    const EntanglementSpectrum deep = exact_spectrum(p, 64);
    const SpectrumComparison cmp = compare_spectra(o, deep, kVerifyOracleEigenvalues, kVerifyOracleGrouping);
    checks.push_back({"oracle_levels", cmp.max_relative_error < kVerifyOracleTolerance,
                      cmp.max_relative_error, kVerifyOracleTolerance});
    checks.push_back({"oracle_degeneracies", cmp.all_counts_match && cmp.complete,
                      double(cmp.levels_compared), 0.0});
  }

  passed = std::all_of(checks.begin(), checks.end(), [](const Check& k) { return k.pass; });
  Table t{"verify", {"check", "status", "value", "tolerance"}, {}};
  for (const auto& k : checks)
    t.rows.push_back({text_cell(k.name), text_cell(k.pass ? "pass" : "fail"),
                      number_cell(k.value, c.precision), number_cell(k.tolerance, c.precision)});
  return t;
}

Table asymptotics_table(const RunConfig& c) {
  const ModelPoint p = classify(c.gamma, c.h);
  if (!is_gapped(p)) throw CriticalInputError("asymptotics: point lies on a critical line");
  const Regime regime = regime_of(p);
  if (c.mode == "singularity") {
    Table t{"singularity", {"z", "log_f_exact", "log_f_asymptotic", "residual", "predicted", "resolution"}, {}};
    for (const auto& r : generating_function_singularity_check(p, c.z_values))
      t.rows.push_back({number_cell(r.z, c.precision), number_cell(r.log_f_exact, c.precision),
                        number_cell(r.log_f_asymptotic, c.precision), number_cell(r.residual, c.precision),
                        number_cell(r.predicted, c.precision), number_cell(r.resolution, c.precision)});
    return t;
  }
  if (c.mode == "angular") {
    Table t{"angular", {"theta", "re_log_integrand_exact", "re_log_integrand_asymptotic"}, {}};
    for (const auto& r : angular_scan(p, std::max<std::size_t>(c.n_max, 1), c.samples))
      t.rows.push_back({number_cell(r.theta, c.precision), number_cell(r.exact, c.precision),
                        number_cell(r.asymptotic, c.precision)});
    return t;
  }
  if (c.mode != "degeneracy") throw UsageError("unknown asymptotics mode '" + c.mode + "'");

  const EntanglementSpectrum s = exact_spectrum(p, c.n_max + 1);
  Table t{"asymptotics",
          {"n", "g_exact", "g_asymptotic", "ln_g_exact", "ln_g_asymptotic", "relative_log_error", "rho_n",
           "g_cauchy"},
          {}};
  for (std::size_t n = 1; n <= c.n_max; ++n) {
    const SaddleData sd = saddle_radius(n, regime);
    const double le = log_bigint(s.degeneracies[n]);
    std::vector<Cell> row{integer_cell((long long)n), big_integer_cell(s.degeneracies[n]),
                          number_cell(sd.g_asymptotic, c.precision), number_cell(le, c.precision),
                          number_cell(sd.log_g_asymptotic, c.precision),
                          number_cell(le > 0 ? (le - sd.log_g_asymptotic) / le : NAN, c.precision),
                          number_cell(sd.rho_n, c.precision)};
    row.push_back(c.cauchy ? number_cell(cauchy_degeneracy(p, n, default_quadrature_points(n)), c.precision)
                           : empty_cell());
    t.rows.push_back(std::move(row));
  }
  return t;
}

struct SweepRow {
  double gamma, h;
  std::vector<Cell> cells;
};

Table sweep_table(const RunConfig& c) {
  if (c.gamma_steps == 0 || c.h_steps == 0) throw UsageError("sweep: step counts must be >= 1");
  const auto axis = [](double lo, double hi, std::size_t steps) {
    std::vector<double> v;
    for (std::size_t i = 0; i < steps; ++i)
      v.push_back(steps == 1 ? lo : lo + (hi - lo) * double(i) / double(steps - 1));
    return v;
  };
  const auto gammas = axis(c.gamma_min, c.gamma_max, c.gamma_steps);
  const auto hs = axis(c.h_min, c.h_max, c.h_steps);
  std::vector<std::pair<double, double>> points;
  for (double g : gammas)
    for (double h : hs) points.emplace_back(g, h);
  std::sort(points.begin(), points.end());

  std::vector<std::vector<std::vector<Cell>>> rows(points.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      const auto [g, h] = points[i];
      const ModelPoint p = classify(g, h);
      const bool gapped = is_gapped(p);
      for (double a : c.alpha) {
        std::vector<Cell> row{number_cell(g, c.precision), number_cell(h, c.precision),
                              text_cell(std::string(to_string(p.region))), number_cell(a, c.precision)};
        if (!gapped) {
          row.insert(row.end(), {text_cell("critical"), empty_cell(), empty_cell(), empty_cell()});
        } else {
          const bool product = is_product_state(p);
          row.push_back(text_cell(std::string(to_string(regime_of(p)))));
          try {
            const double tau0 = product ? INFINITY : elliptic_data(p).tau0;
            const double value =
                a == 1.0 ? von_neumann_entropy(p) : renyi_entropy(p, a, Representation::QSeries).value;
            row.insert(row.end(), {number_cell(elliptic_moduli(p).k, c.precision),
                                   number_cell(tau0, c.precision), number_cell(value, c.precision)});
          } catch (const CriticalInputError&) {
            row.insert(row.end(), {number_cell(elliptic_moduli(p).k, c.precision), empty_cell(), empty_cell()});
          }
        }
        rows[i].push_back(std::move(row));
      }
    }
  };
  const unsigned n_threads = std::min<unsigned>(worker_threads(), unsigned(points.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n_threads; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  Table t{"sweep", {"gamma", "h", "region", "alpha", "regime", "k", "tau0", "entropy"}, {}};
  for (auto& block : rows)
    for (auto& row : block) t.rows.push_back(std::move(row));
  return t;
}

Table oracle_table(const RunConfig& c) {
  const ModelPoint p = classify(c.gamma, c.h);
  OracleSpectrum o;
  const std::size_t listed = std::max<std::size_t>(c.levels, 1);
  if (c.source == "free-fermion")
    o = free_fermion_spectrum(p, c.block_size, std::min<std::size_t>(4 * listed, kMaxOracleLevels));
  else if (c.source == "ring")
    o = ring_free_fermion(c.gamma, c.h, c.chain_size, c.block_size, 4 * listed);
  else if (c.source == "ed")
    o = exact_diagonalization(c.gamma, c.h, c.chain_size, c.block_size);
  else
    throw UsageError("unknown oracle source '" + c.source + "'");

  if (c.compare) {
    const EntanglementSpectrum s = exact_spectrum(p, std::max<std::size_t>(listed + 1, 64));
    const SpectrumComparison cmp = compare_spectra(o, s, listed);
    Table t{"oracle_comparison",
            {"n", "lambda_exact", "lambda_oracle", "relative_error", "max_member_deviation",
             "degeneracy_exact", "count_oracle", "count_match"},
            {}};
    for (const auto& l : cmp.levels)
      t.rows.push_back({integer_cell((long long)l.n), number_cell(std::exp(l.exact_log_lambda), c.precision),
                        number_cell(std::exp(l.oracle_log_lambda), c.precision),
                        number_cell(l.relative_error, c.precision),
                        number_cell(l.max_member_deviation, c.precision), big_integer_cell(l.exact_degeneracy),
                        integer_cell((long long)l.oracle_count), boolean_cell(l.count_match)});
    return t;
  }
  Table t{"oracle", {"index", "lambda", "ln_lambda"}, {}};
  for (std::size_t i = 0; i < std::min(listed, o.eigenvalues.size()); ++i)
    t.rows.push_back({integer_cell((long long)i), number_cell(o.eigenvalues[i], c.precision),
                      number_cell(o.log_eigenvalues[i], c.precision)});
  return t;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("cannot parse number '" + item + "'");
    }
    if (used != item.size() || !std::isfinite(v)) throw UsageError("cannot parse number '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty number list");
  return out;
}

}  // namespace

unsigned worker_threads() {
  if (const char* env = std::getenv("ENTSPEC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return unsigned(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Table build_table(const RunConfig& config, bool& verification_passed) {
  verification_passed = true;
  if (!std::isfinite(config.gamma) || !std::isfinite(config.h))
    throw UsageError("gamma and h must be finite");
  if (config.precision < 1 || config.precision > 17) throw UsageError("precision must lie in 1..17");
  switch (config.command) {
    case Command::Spectrum: return spectrum_table(config);
    case Command::Entropy: return entropy_table(config);
    case Command::Verify: return verify_table(config, verification_passed);
    case Command::Asymptotics: return asymptotics_table(config);
    case Command::Sweep: return sweep_table(config);
    case Command::Oracle: return oracle_table(config);
  }
  throw UsageError("unknown command");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    bool passed = true;
    const Table table = build_table(config, passed);
    std::ofstream file;
    if (config.output_path) {
      file.open(*config.output_path, std::ios::binary);
      if (!file) {
        err << "error: io: cannot open " << *config.output_path << '\n';
        return kExitUsage;
      }
    }
    std::ostream& sink = config.output_path ? static_cast<std::ostream&>(file) : out;
    if (config.format == OutputFormat::Json)
      write_json(sink, table);
    else
      write_csv(sink, table);
    if (!passed) {
      err << "error: verification: one or more checks failed\n";
      return kExitVerifyFailed;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CriticalInputError& e) {
    err << "error: critical_input: " << e.what() << '\n';
    return kExitDomain;
  } catch (const DomainError& e) {
    err << "error: domain: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ResourceError& e) {
    err << "error: resource: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    err << "error: convergence: " << e.what() << '\n';
    return kExitDomain;
  } catch (const NumericError& e) {
    err << "error: numeric: " << e.what() << '\n';
    return kExitDomain;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact entanglement spectrum of the XY chain"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print help");
  RunConfig c;
  std::string alpha = "2";
  std::string z_list = "0.5,0.9,0.99,0.999";
  std::string format = "csv";
  std::string output;

  const auto point_flags = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "Print help");  // -h is the field
    sub->add_option("--gamma", c.gamma, "Anisotropy")->required();
    sub->add_option("--h", c.h, "Transverse field")->required();
  };
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", output, "Write to this file instead of stdout");
    sub->add_option("--precision", c.precision, "Significant digits")->check(CLI::Range(1, 17));
  };

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and degeneracies");
  point_flags(spectrum);
  spectrum->add_option("--n-max", c.n_max, "Highest level index");
  common(spectrum);

  auto* entropy = app.add_subcommand("entropy", "Renyi / von Neumann entropy");
  point_flags(entropy);
  entropy->add_option("--alpha", alpha, "Comma separated alpha values (1 = von Neumann)");
  entropy->add_option("--representation", c.representation, "theta|lambda|qseries|spectrum|all")
      ->check(CLI::IsMember({"theta", "lambda", "qseries", "spectrum", "all"}));
  common(entropy);

  auto* verify = app.add_subcommand("verify", "Run the consistency checks at one point");
  point_flags(verify);
  verify->add_flag("--with-oracle", c.with_oracle, "Add the L = 32 free-fermion comparison");
  common(verify);

  auto* asym = app.add_subcommand("asymptotics", "Degeneracy asymptotics and generating-function scans");
  point_flags(asym);
  asym->add_option("--n-max", c.n_max, "Largest n (degeneracy) or saddle index (angular)");
  asym->add_option("--mode", c.mode, "degeneracy|singularity|angular")
      ->check(CLI::IsMember({"degeneracy", "singularity", "angular"}));
  asym->add_flag("--cauchy", c.cauchy, "Include contour-integral values");
  asym->add_option("--z", z_list, "Comma separated z values (singularity mode)");
  asym->add_option("--samples", c.samples, "Angular samples");
  common(asym);

  auto* sweep = app.add_subcommand("sweep", "Entropy over a (gamma, h) grid");
  sweep->set_help_flag("--help", "Print help");
  sweep->add_option("--gamma-min", c.gamma_min);
  sweep->add_option("--gamma-max", c.gamma_max);
  sweep->add_option("--gamma-steps", c.gamma_steps);
  sweep->add_option("--h-min", c.h_min);
  sweep->add_option("--h-max", c.h_max);
  sweep->add_option("--h-steps", c.h_steps);
  sweep->add_option("--alpha", alpha, "Comma separated alpha values");
  common(sweep);

  auto* oracle = app.add_subcommand("oracle", "Numerical spectrum from free fermions or ED");
  point_flags(oracle);
  oracle->add_option("--block-size", c.block_size, "Block length L");
  oracle->add_option("--source", c.source, "free-fermion|ring|ed")
      ->check(CLI::IsMember({"free-fermion", "ring", "ed"}));
  oracle->add_option("--chain-size", c.chain_size, "Ring length N (ring, ed)");
  oracle->add_option("--levels", c.levels, "Number of eigenvalues listed or compared");
  oracle->add_flag("--compare", c.compare, "Compare against the closed-form levels");
  common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::map<CLI::App*, Command> commands{
      {spectrum, Command::Spectrum}, {entropy, Command::Entropy}, {verify, Command::Verify},
      {asym, Command::Asymptotics},  {sweep, Command::Sweep},     {oracle, Command::Oracle}};
  c.command = commands.at(app.get_subcommands().front());
  c.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (!output.empty()) c.output_path = output;
  try {
    c.alpha = parse_list(alpha);
    c.z_values = parse_list(z_list);
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  }
  return run(c, out, err);
}

}  // namespace entspec
