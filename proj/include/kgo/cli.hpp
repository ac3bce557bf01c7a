#pragma once

// Command-line front end: frequency, spectrum, wavefunction and verify.
// Output is CSV with a header line; diagnostics go to the error stream.
// Exit codes: 0 success, 1 empty or failed result, 2 invalid input.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kgo/errors.hpp"
#include "kgo/oracle.hpp"
#include "kgo/params.hpp"
#include "kgo/quantization.hpp"
#include "kgo/wavefunction.hpp"

namespace kgo::cli {

enum ExitCode : int { kOk = 0, kEmpty = 1, kInvalid = 2 };

struct RunConfig {
  double mass = 1.0;
  double coupling = 0.0;
  int l = 0;
  int n = 1;
  // wavefunction
  double xi_max = kDefaultXiMax;
  int points = kDefaultQuadraturePoints;
  std::string out;
  std::size_t root = 0;
  // verify
  int grid_points = 4000;
  double tol = 1e-4;

  ModelParams model() const { return {mass, coupling, l, n}; }
};

/// 15 significant digits.
inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

inline std::vector<ModeSolution> modes_or_throw(const RunConfig& cfg) {
  return allowed_frequencies(cfg.model());
}

inline int cmd_frequency(const RunConfig& cfg, std::ostream& out) {
  const auto modes = modes_or_throw(cfg);
  out << "n,l,gamma,delta,omega\n";
  for (const auto& m : modes) {
    out << m.n << ',' << m.l << ',' << fmt(m.gamma_abs) << ',' << fmt(m.delta_root) << ',' << fmt(m.omega) << '\n';
  }
  return modes.empty() ? kEmpty : kOk;
}

inline int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const auto modes = modes_or_throw(cfg);
  out << "n,l,omega,E_plus,E_minus\n";
  for (const auto& m : modes) {
    out << m.n << ',' << m.l << ',' << fmt(m.omega) << ',' << fmt(m.energy_plus) << ',' << fmt(m.energy_minus)
        << '\n';
  }
  return modes.empty() ? kEmpty : kOk;
}

inline void write_table(const RadialTable& t, std::ostream& out) {
  out << "xi,rho,R\n";
  for (std::size_t i = 0; i < t.xi_values.size(); ++i) {
    out << fmt(t.xi_values[i]) << ',' << fmt(t.rho_values[i]) << ',' << fmt(t.r_values[i]) << '\n';
  }
}

inline int cmd_wavefunction(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto modes = modes_or_throw(cfg);
  if (modes.empty()) {
    err << "no admissible frequency for these quantum numbers\n";
    return kEmpty;
  }
  if (cfg.root >= modes.size()) {
    throw not_found("root index " + std::to_string(cfg.root) + " out of range (" + std::to_string(modes.size()) +
                    " admissible roots)");
  }
  auto wf = build_radial(modes[cfg.root], cfg.xi_max, std::max(cfg.points, kDefaultQuadraturePoints));
  const auto table = sample_to_table(wf, cfg.xi_max, cfg.points);
  if (cfg.out.empty()) {
    write_table(table, out);
    return kOk;
  }
  std::ofstream file(cfg.out);
  if (!file) {
    err << "cannot open output file: " << cfg.out << '\n';
    return kInvalid;
  }
  write_table(table, file);
  file.flush();
  if (!file) {
    err << "failed writing output file: " << cfg.out << '\n';
    return kInvalid;
  }
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GridSpec grid{cfg.xi_max, cfg.grid_points};
  validate(grid);
  if (!(cfg.tol > 0.0)) throw invalid_input("tolerance must be positive");
  const auto modes = modes_or_throw(cfg);
  out << "predicted_lambda,matched_lambda,relative_error,pass\n";
  bool all = !modes.empty();
  for (const auto& m : modes) {
    const auto r = verify_mode(m, grid, cfg.tol);
    out << fmt(r.predicted_lambda) << ',' << fmt(r.matched_lambda) << ',' << fmt(r.relative_error) << ','
        << (r.passed ? "true" : "false") << '\n';
    all = all && r.passed;
  }
  if (modes.empty()) err << "no admissible frequency for these quantum numbers\n";
  return all ? kOk : kEmpty;
}

/// Parses argv and runs one command. Flags override `--config` file keys.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantized frequencies, energies and wavefunctions of the Klein-Gordon oscillator "
               "with a Coulomb-type scalar potential"};
  app.name("kgo");
  app.set_config("--config", "", "key=value file; # starts a comment");
  RunConfig cfg;
  app.add_option("--mass", cfg.mass, "rest mass m > 0")->capture_default_str();
  app.add_option("--coupling", cfg.coupling, "Coulomb coupling f (signed)")->capture_default_str();
  app.add_option("--l", cfg.l, "azimuthal quantum number")->capture_default_str();
  app.add_option("--n", cfg.n, "radial quantum number (>= 1)")->capture_default_str();
  app.add_option("--xi-max", cfg.xi_max, "outer edge of the xi grid")->capture_default_str();
  app.add_option("--points", cfg.points, "wavefunction samples")->capture_default_str();
  app.add_option("--out", cfg.out, "wavefunction CSV path (stdout if omitted)");
  app.add_option("--root", cfg.root, "index among admissible roots (descending omega)")->capture_default_str();
  app.add_option("--grid-points", cfg.grid_points, "finite-difference grid size")->capture_default_str();
  app.add_option("--tol", cfg.tol, "relative eigenvalue tolerance")->capture_default_str();

  auto* frequency = app.add_subcommand("frequency", "allowed frequencies omega_{n,l}");
  auto* spectrum = app.add_subcommand("spectrum", "energy levels for each allowed frequency");
  auto* wavefunction = app.add_subcommand("wavefunction", "normalized radial wavefunction table");
  auto* verify = app.add_subcommand("verify", "finite-difference check of each mode");
  for (auto* sub : {frequency, spectrum, wavefunction, verify}) sub->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    if (*frequency) return cmd_frequency(cfg, out);
    if (*spectrum) return cmd_spectrum(cfg, out);
    if (*wavefunction) return cmd_wavefunction(cfg, out, err);
    return cmd_verify(cfg, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const tail_too_large& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInvalid;
}

}  // namespace kgo::cli
