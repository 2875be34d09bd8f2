#include "cli.hpp"

#include "io.hpp"

#include "favard/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>

namespace favard {
namespace {

constexpr int exit_ok = 0;
constexpr int exit_unknown = 1;
constexpr int exit_validation = 2;
constexpr int exit_resource = 3;
constexpr int exit_numeric = 4;

struct DigitOptions {
  std::int64_t base = 4;
  std::vector<std::int64_t> a{0, 3};
  std::vector<std::int64_t> b{0, 3};

  DigitSystem system() const { return validate_digit_system(base, a, b); }
};

void add_digit_options(CLI::App* app, DigitOptions& d) {
  app->add_option("--K", d.base, "base K")->capture_default_str();
  app->add_option("--A", d.a, "digits A, comma separated")->delimiter(',')->capture_default_str();
  app->add_option("--B", d.b, "digits B, comma separated")->delimiter(',')->capture_default_str();
}

Window parse_window(const std::string& w) {
  if (w == "F" || w == "unit") return Window::unit;
  if (w == "f" || w == "squares") return Window::squares;
  throw ConfigError("unknown window '" + w + "' (expected F or f)");
}

NodePlacement parse_placement(const std::string& p) {
  if (p == "theta") return NodePlacement::uniform_theta;
  if (p == "t") return NodePlacement::uniform_t;
  if (p == "farey") return NodePlacement::farey;
  throw ConfigError("unknown node placement '" + p + "' (expected theta, t or farey)");
}

Transform parse_transform(const std::string& t) {
  if (t == "nu-hat") return Transform::nu_hat;
  if (t == "f-hat") return Transform::f_hat;
  throw ConfigError("unknown transform '" + t + "' (expected nu-hat or f-hat)");
}

// Writes to the named file, or to `out` when the path is empty.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file '" + path + "'");
  body(file);
  if (!file) throw ConfigError("failed writing '" + path + "'");
}

void emit_json(const std::string& path, std::ostream& out, const Json& j) {
  emit(path, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

void require_positive(long long v, const char* name) {
  if (v <= 0) throw ConfigError(std::string(name) + " must be positive");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Favard length of product Cantor sets"};
  app.set_config("--config", "", "TOML or INI file; command-line flags take precedence");
  app.require_subcommand(1);
  std::function<void()> action;

  // project
  DigitOptions project_digits;
  int project_n = 0;
  std::string project_t;
  std::string project_window = "F";
  std::string project_steps;
  bool project_json = false;
  auto* project = app.add_subcommand("project", "exact projection measure for a rational slope");
  add_digit_options(project, project_digits);
  project->add_option("--n", project_n, "level")->required();
  project->add_option("--t", project_t, "slope t = q/r (integer, fraction or decimal)")->required();
  project->add_option("--window", project_window, "counting function window for --step-function: F or f")
      ->capture_default_str();
  project->add_option("--step-function", project_steps, "write the counting function as CSV");
  project->add_flag("--json", project_json, "print JSON instead of text");
  project->callback([&] {
    action = [&] {
      const auto ds = project_digits.system();
      if (project_n < 0) throw ConfigError("--n must be nonnegative");
      const auto slope = Slope::parse(project_t);
      const auto pm = projection_measure(ds, project_n, slope);
      if (project_json) {
        emit_json("", out, {{"n", project_n},
                            {"t", slope.str()},
                            {"rational_part", to_json(pm.rational_part)},
                            {"cos_theta", pm.cos_theta},
                            {"measure", pm.measure}});
      } else if (slope.q() == 0) {
        out << to_string(pm.rational_part) << " = " << format_double(pm.measure) << '\n';
      } else {
        out << to_string(pm.rational_part) << " × cosθ = " << format_double(pm.measure) << '\n';
      }
      if (!project_steps.empty()) {
        const auto f = counting_function(ds, project_n, slope, parse_window(project_window));
        emit(project_steps, out, [&](std::ostream& os) { write_step_function_csv(os, f); });
      }
    };
  });

  // favard
  DigitOptions favard_digits;
  int n_max = 0;
  QuadratureSpec qspec;
  std::string placement = "theta";
  std::string favard_out;
  std::string favard_report;
  std::optional<double> p_min;
  bool all_refinements = false;
  auto* favard = app.add_subcommand("favard", "Favard length decay table as CSV");
  add_digit_options(favard, favard_digits);
  favard->add_option("--n-max", n_max, "largest level; 0 gives the unit square alone")->required();
  favard->add_option("--nodes", qspec.nodes, "nodes per quarter range")->capture_default_str();
  favard->add_option("--placement", placement, "theta, t or farey")->capture_default_str();
  favard->add_option("--refinements", qspec.refinements, "refinement count")->capture_default_str();
  favard->add_option("--farey-order", qspec.farey_order, "Farey order for --placement farey")
      ->capture_default_str();
  favard->add_option("--p-min", p_min, "adds an n^(-1/p) reference column to --report");
  favard->add_flag("--all-refinements", all_refinements, "one CSV row per (n, refinement)");
  favard->add_option("--out", favard_out, "CSV output path")->required();
  favard->add_option("--report", favard_report, "JSON decay report path");
  favard->callback([&] {
    action = [&] {
      const auto ds = favard_digits.system();
      qspec.placement = parse_placement(placement);
      if (n_max < 0) throw ConfigError("--n-max must be nonnegative");
      const int n_min = n_max == 0 ? 0 : 1;
      DecayReport report;
      if (n_max >= 2) {
        report = decay_experiment(ds, n_max, qspec, p_min);
      } else {
        report.rows = decay_rows(ds, n_min, n_max, qspec, p_min);
      }
      const auto rows = favard_csv_rows(report.rows, all_refinements);
      emit(favard_out, out, [&](std::ostream& os) { write_favard_csv(os, rows); });
      if (!favard_report.empty()) emit_json(favard_report, out, to_json(report));
    };
  });

  // tiling
  DigitOptions tiling_digits;
  std::int64_t tiling_q = 0;
  std::int64_t tiling_r = 1;
  int n_probe = 6;
  std::int64_t m_max = 256;
  std::string tiling_out;
  auto* tiling = app.add_subcommand("tiling", "direction analysis for slope q/r as JSON");
  add_digit_options(tiling, tiling_digits);
  tiling->add_option("--q", tiling_q, "slope numerator")->required();
  tiling->add_option("--r", tiling_r, "slope denominator")->required();
  tiling->add_option("--n-probe", n_probe, "probe levels")->capture_default_str();
  tiling->add_option("--m-max", m_max, "largest modulus searched")->capture_default_str();
  tiling->add_option("--out", tiling_out, "JSON output path (stdout if omitted)");
  tiling->callback([&] {
    action = [&] {
      const auto ds = tiling_digits.system();
      require_positive(n_probe, "--n-probe");
      require_positive(m_max, "--m-max");
      emit_json(tiling_out, out, to_json(direction_analysis(ds, tiling_q, tiling_r, n_probe, m_max)));
    };
  });

  // spectral
  auto* spectral = app.add_subcommand("spectral", "Fourier-side diagnostics");
  spectral->require_subcommand(1);

  DigitOptions point_digits;
  int point_n = 1;
  std::string point_t = "0";
  double point_xi = 0.0;
  auto add_point = [&](const char* name, const char* help, Transform which) {
    auto* sub = spectral->add_subcommand(name, help);
    add_digit_options(sub, point_digits);
    sub->add_option("--n", point_n, "level")->capture_default_str();
    sub->add_option("--t", point_t, "slope")->capture_default_str();
    sub->add_option("--xi", point_xi, "frequency")->required();
    sub->callback([&, which] {
      action = [&, which] {
        const auto ds = point_digits.system();
        const double t = Slope::parse(point_t).value();
        const auto v = which == Transform::nu_hat ? nu_hat(ds, point_n, t, point_xi)
                                                  : f_hat(ds, point_n, t, point_xi);
        out << format_complex(v) << '\n';
      };
    });
  };
  add_point("nu-hat", "transform of the projected measure at one frequency", Transform::nu_hat);
  add_point("f-hat", "transform of the counting function at one frequency", Transform::f_hat);

  DigitOptions spectrum_digits;
  int spectrum_n = 1;
  std::string spectrum_t = "0";
  double lo = 0.0;
  double hi = 10.0;
  std::optional<double> spectrum_step;
  std::string transform = "nu-hat";
  std::string spectrum_out;
  auto* spec_cmd = spectral->add_subcommand("spectrum", "transform sampled on a grid, as CSV");
  add_digit_options(spec_cmd, spectrum_digits);
  spec_cmd->add_option("--n", spectrum_n, "level")->capture_default_str();
  spec_cmd->add_option("--t", spectrum_t, "slope")->capture_default_str();
  spec_cmd->add_option("--lo", lo, "grid start")->capture_default_str();
  spec_cmd->add_option("--hi", hi, "grid end")->capture_default_str();
  spec_cmd->add_option("--step", spectrum_step, "grid spacing (default 0.02 / (1 + t))");
  spec_cmd->add_option("--transform", transform, "nu-hat or f-hat")->capture_default_str();
  spec_cmd->add_option("--out", spectrum_out, "CSV output path (stdout if omitted)");
  spec_cmd->callback([&] {
    action = [&] {
      const auto ds = spectrum_digits.system();
      const double t = Slope::parse(spectrum_t).value();
      const auto grid = spectrum(ds, spectrum_n, t, lo, hi, spectrum_step, parse_transform(transform));
      emit(spectrum_out, out, [&](std::ostream& os) { write_spectrum_csv(os, grid); });
    };
  });

  DigitOptions integral_digits;
  int big_n = 3;
  int integral_n = 1;
  int integral_m = 1;
  std::string integral_t = "0";
  std::optional<double> integral_step;
  std::optional<double> integral_delta;
  auto* integral = spectral->add_subcommand("integral", "I and I1 over [K^n, K^(m+n)], as JSON");
  add_digit_options(integral, integral_digits);
  integral->add_option("--N", big_n, "level of nu^N")->capture_default_str();
  integral->add_option("--n", integral_n, "level of nu^n")->capture_default_str();
  integral->add_option("--m", integral_m, "range exponent")->capture_default_str();
  integral->add_option("--t", integral_t, "slope")->capture_default_str();
  integral->add_option("--step", integral_step, "grid spacing");
  integral->add_option("--delta", integral_delta, "also report I2 on Z_delta");
  integral->callback([&] {
    action = [&] {
      const auto ds = integral_digits.system();
      const double t = Slope::parse(integral_t).value();
      emit_json("", out,
                to_json(integral_I(ds, big_n, integral_n, integral_m, t, integral_step, integral_delta)));
    };
  });

  DigitOptions plancherel_digits;
  int plancherel_n = 1;
  std::string plancherel_t = "0";
  double bound = 1000.0;
  std::optional<double> plancherel_step;
  auto* plancherel = spectral->add_subcommand("plancherel", "Fourier-side L2 norm against the exact value");
  add_digit_options(plancherel, plancherel_digits);
  plancherel->add_option("--n", plancherel_n, "level")->capture_default_str();
  plancherel->add_option("--t", plancherel_t, "rational slope")->capture_default_str();
  plancherel->add_option("--bound", bound, "numeric window |xi| <= bound")->capture_default_str();
  plancherel->add_option("--step", plancherel_step, "grid spacing");
  plancherel->callback([&] {
    action = [&] {
      const auto ds = plancherel_digits.system();
      emit_json("", out,
                to_json(plancherel_check(ds, plancherel_n, Slope::parse(plancherel_t), bound, plancherel_step)));
    };
  });

  DigitOptions zeros_digits;
  int zeros_m = 3;
  double delta = 0.05;
  std::optional<double> epsilon;
  std::int64_t zeros_q = 2;
  std::int64_t zeros_r = 1;
  std::optional<std::int64_t> modulus;
  ScanOptions scan;
  std::string zeros_out;
  auto* zeros = spectral->add_subcommand("zeros", "approximate zero set structure, as JSON");
  add_digit_options(zeros, zeros_digits);
  zeros->add_option("--m", zeros_m, "level")->capture_default_str();
  zeros->add_option("--delta", delta, "threshold")->capture_default_str();
  zeros->add_option("--epsilon", epsilon, "exponent (default (r+q)/(1+r+q))");
  zeros->add_option("--q", zeros_q, "slope numerator")->capture_default_str();
  zeros->add_option("--r", zeros_r, "slope denominator")->capture_default_str();
  zeros->add_option("--modulus", modulus, "lattice modulus (default from the tiling certificate)");
  zeros->add_option("--step", scan.step, "initial scan spacing")->capture_default_str();
  zeros->add_option("--resolution", scan.resolution_factor, "finest cell as a fraction of K^m")
      ->capture_default_str();
  zeros->add_option("--out", zeros_out, "JSON output path (stdout if omitted)");
  zeros->callback([&] {
    action = [&] {
      const auto ds = zeros_digits.system();
      std::int64_t M = 0;
      if (modulus) {
        M = *modulus;
      } else {
        const auto analysis = direction_analysis(ds, zeros_q, zeros_r);
        if (!analysis.lattice_modulus)
          throw ConfigError("no tiling certificate for this direction; pass --modulus");
        M = *analysis.lattice_modulus;
      }
      require_positive(M, "--modulus");
      const double eps = epsilon.value_or(default_epsilon(zeros_q, zeros_r));
      try {
        emit_json(zeros_out, out,
                  to_json(zero_set_structure_check(ds, zeros_m, delta, eps, zeros_q, zeros_r, M, scan)));
      } catch (const NoCoverError& e) {
        emit_json(zeros_out, out, to_json(e.report()));
        throw;
      }
    };
  });

  // x-lambda
  DigitOptions xl_digits;
  int xl_n = 1;
  std::string lambda_text;
  std::string xl_t;
  int farey_order = 0;
  std::string xl_window = "F";
  auto* xl = app.add_subcommand("x-lambda", "membership in X_lambda^N, as JSON");
  add_digit_options(xl, xl_digits);
  xl->add_option("--N", xl_n, "largest level")->capture_default_str();
  xl->add_option("--lambda", lambda_text, "threshold (exact decimal or p/q)")->required();
  auto* t_opt = xl->add_option("--t", xl_t, "single slope");
  xl->add_option("--farey-order", farey_order, "estimate the measure over Farey slopes in [0, 1]")
      ->excludes(t_opt);
  xl->add_option("--window", xl_window, "F or f")->capture_default_str();
  xl->callback([&] {
    action = [&] {
      const auto ds = xl_digits.system();
      require_positive(xl_n, "--N");
      const auto lambda = parse_rational(lambda_text);
      const auto window = parse_window(xl_window);
      if (farey_order > 0) {
        const auto est = x_lambda_measure_estimate(ds, xl_n, lambda, farey_sequence(farey_order), window);
        Json samples = Json::array();
        for (const auto& s : est.samples) samples.push_back(to_json(s));
        emit_json("", out, {{"fraction", est.fraction}, {"samples", samples}});
      } else {
        if (xl_t.empty()) throw ConfigError("x-lambda needs --t or --farey-order");
        emit_json("", out, to_json(x_lambda_member(ds, xl_n, Slope::parse(xl_t), lambda, window)));
      }
    };
  });

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("favard");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_validation;
  }

  try {
    if (action) action();
    return exit_ok;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::validation: return exit_validation;
      case ErrorKind::resource: return exit_resource;
      case ErrorKind::numeric: return exit_numeric;
    }
    return exit_unknown;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_unknown;
  }
}

}  // namespace favard
