// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kgo/cli.hpp"
#include "kgo/kgo.hpp"
#include "rational_oracle.hpp"

namespace {

using namespace kgo;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  int id;
  std::string title;
  double time_budget_s;  // <= 0: none
  std::function<Outcome()> body;
};

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

const std::vector<double> kMasses{0.5, 1.0, 2.0};
const std::vector<double> kCouplings{0.5, -0.5, 1.0, -1.0, 2.0, -2.0};
const std::vector<int> kAzimuthal{0, 1, -1, 2, -2, 5, -5};

template <class F>
void for_grid(F&& f) {
  for (double m : kMasses)
    for (double c : kCouplings)
      for (int l : kAzimuthal) f(m, c, l);
}

// independent closed forms
double gamma_of(int l, double f) { return std::sqrt(double(l) * l + f * f); }

Outcome ground_state_closed_form() {
  Outcome o;
  double worst_w = 0.0, worst_e = 0.0;
  for_grid([&](double m, double f, int l) {
    const auto modes = allowed_frequencies({m, f, l, 1});
    if (modes.size() != 1) {
      o.pass = false;
      return;
    }
    const double g = gamma_of(l, f);
    const double w = 2.0 * m * f * f / (2.0 * g + 1.0);
    const double e = m * std::sqrt(1.0 + 4.0 * f * f * (g + 1.5) / (2.0 * g + 1.0));
    worst_w = std::max(worst_w, rel(modes[0].omega, w));
    worst_e = std::max({worst_e, rel(modes[0].energy_plus, e), rel(modes[0].energy_minus, -e)});
  });
  o.pass = o.pass && worst_w <= 1e-12 && worst_e <= 1e-12;
  o.detail = "max rel err omega " + sci(worst_w) + ", energy " + sci(worst_e) + " (tol 1e-12)";
  return o;
}

Outcome first_excited_frequency() {
  Outcome o;
  // exact reduction: N_3 = delta (delta^2 - 4(2 alpha + 1)) over the integers
  const auto [c0, c2] = test::quadratic_in_delta_sq(2);
  const bool exact_identity = c2 == std::vector<test::cpp_int>{1} && c0 == std::vector<test::cpp_int>{-4, -8};
  double worst = 0.0, worst_oracle = 0.0;
  for_grid([&](double m, double f, int l) {
    const auto modes = allowed_frequencies({m, f, l, 2});
    if (modes.size() != 1) {
      o.pass = false;
      return;
    }
    const double g = gamma_of(l, f);
    worst = std::max(worst, rel(modes[0].omega, m * f * f / (4.0 * g + 3.0)));
    const double oracle = 4.0 * m * f * f / test::exact_delta_sq(2, 2.0 * g + 1.0);
    worst_oracle = std::max(worst_oracle, rel(modes[0].omega, oracle));
  });
  o.pass = o.pass && exact_identity && worst <= 1e-10 && worst_oracle <= 1e-10;
  o.detail = std::string("exact reduction delta^2 = 4(2 alpha + 1): ") + (exact_identity ? "yes" : "NO") +
             ", max rel err vs m f^2/(4|gamma|+3) " + sci(worst) + ", vs rational oracle " + sci(worst_oracle) +
             " (tol 1e-10)";
  return o;
}

Outcome termination_cascade() {
  Outcome o;
  std::mt19937_64 rng(20240901);
  std::uniform_real_distribution<double> ms(0.2, 5.0), fs(0.05, 3.0), sign(-1.0, 1.0);
  std::uniform_int_distribution<int> ls(-6, 6);
  double worst = 0.0;
  std::size_t checked = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int draw = 0; draw < 20; ++draw) {
      const double f = (sign(rng) < 0.0 ? -1.0 : 1.0) * fs(rng);
      const ModelParams p{ms(rng), f, ls(rng), n};
      for (const auto& mode : allowed_frequencies(p)) {
        const auto s = generate_coefficients(mode.alpha(), mode.theta(), mode.delta_root, std::size_t(n) + 6);
        double peak = 0.0;
        for (double a : s.coeffs) peak = std::max(peak, std::abs(a));
        for (int j = n + 1; j <= n + 5; ++j) worst = std::max(worst, std::abs(s.coeffs[std::size_t(j)]) / peak);
        ++checked;
      }
    }
  }
  o.pass = checked > 0 && worst < 1e-10;
  o.detail = std::to_string(checked) + " modes, max normalized |a_j| (n<j<=n+5) " + sci(worst) + " (tol 1e-10)";
  return o;
}

Outcome recurrence_fidelity() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> as(1.0, 10.0), ts(-10.0, 10.0), ds(-10.0, 10.0);
  double worst1 = 0.0, worst2 = 0.0, worst2_plain = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double alpha = as(rng), theta = ts(rng), delta = ds(rng);
    const auto s = generate_coefficients(alpha, theta, delta, 3);
    const double a1 = delta / alpha;
    const double t1 = delta * delta / (2.0 * alpha * (1.0 + alpha));
    const double t2 = theta / (2.0 * (1.0 + alpha));
    worst1 = std::max(worst1, rel(s.coeffs[1], a1));
    // relative to the closed form's term magnitudes: a_2 is a difference of two terms
    worst2 = std::max(worst2, std::abs(s.coeffs[2] - (t1 - t2)) / (std::abs(t1) + std::abs(t2)));
    worst2_plain = std::max(worst2_plain, rel(s.coeffs[2], t1 - t2));
  }
  o.pass = worst1 <= 1e-13 && worst2 <= 1e-13;
  o.detail = "1000 draws, max rel err a1 " + sci(worst1) + ", a2 " + sci(worst2) + " (tol 1e-13; plain |a2|-relative " +
             sci(worst2_plain) + ")";
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  double worst = 0.0, ratio_lo = INFINITY, ratio_hi = 0.0;
  int modes_checked = 0;
  for (double f : {1.0, -1.0}) {
    for (int l : {0, 1, 2}) {
      for (int n : {1, 2}) {
        for (const auto& mode : allowed_frequencies({1.0, f, l, n})) {
          const auto base = verify_mode(mode, {12.0, 4000}, 1e-4);
          const auto half = verify_mode(mode, {12.0, 8000}, 1e-4);
          const double ratio = base.relative_error / half.relative_error;
          worst = std::max(worst, base.relative_error);
          ratio_lo = std::min(ratio_lo, ratio);
          ratio_hi = std::max(ratio_hi, ratio);
          o.pass = o.pass && base.passed && ratio >= 3.0 && ratio <= 5.0;
          ++modes_checked;
        }
      }
    }
  }
  o.pass = o.pass && modes_checked == 12;
  o.detail = std::to_string(modes_checked) + " modes, max rel err " + sci(worst) +
             " (tol 1e-4), h-halving ratios in [" + sci(ratio_lo) + ", " + sci(ratio_hi) + "] (need [3, 5])";
  return o;
}

Outcome sign_invariance() {
  Outcome o;
  double worst = 0.0;
  for_grid([&](double m, double f, int l) {
    if (f < 0.0) return;
    for (int n : {1, 2}) {
      const auto plus = allowed_frequencies({m, f, l, n});
      const auto minus = allowed_frequencies({m, -f, l, n});
      if (plus.size() != minus.size()) {
        o.pass = false;
        return;
      }
      for (std::size_t i = 0; i < plus.size(); ++i) {
        worst = std::max({worst, rel(minus[i].omega, plus[i].omega), rel(minus[i].energy_plus, plus[i].energy_plus),
                          rel(minus[i].energy_minus, plus[i].energy_minus)});
      }
    }
  });
  o.pass = o.pass && worst <= 1e-12;
  o.detail = "max rel difference +f vs -f " + sci(worst) + " (tol 1e-12)";
  return o;
}

Outcome ground_state_and_degenerate_path() {
  Outcome o;
  bool rejected = false;
  try {
    allowed_frequencies({1.0, 1.0, 0, 0});
  } catch (const invalid_input&) {
    rejected = true;
  }
  std::ostringstream out, err;
  const char* argv[] = {"kgo", "frequency", "--coupling", "0.5", "--n", "0"};
  const bool cli_rejected = cli::run(6, argv, out, err) == cli::kInvalid;
  const auto report = verify_mode(pure_oscillator_mode(1.0, 1.0, 0, 0), {12.0, 4000}, 1e-4);
  o.pass = rejected && cli_rejected && report.predicted_lambda == 2.0 && report.passed;
  o.detail = std::string("n=0 with f!=0 rejected: ") + (rejected && cli_rejected ? "yes" : "NO") +
             "; f=0,l=0 oracle lambda " + std::to_string(report.matched_lambda) + " vs 2, rel err " +
             sci(report.relative_error) + " (tol 1e-4)";
  return o;
}

Outcome normalization() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "kgo_acceptance";
  std::filesystem::create_directories(dir);
  double worst_file = 0.0;
  int files = 0;
  for (double f : {1.0, -1.0}) {
    for (int l : {0, 2}) {
      for (int n : {1, 2, 3}) {
        const auto path = dir / ("wf_" + std::to_string(files) + ".csv");
        const std::vector<std::string> args{"kgo",       "wavefunction", "--mass", "1",  "--coupling",
                                            std::to_string(f), "--l", std::to_string(l), "--n", std::to_string(n),
                                            "--out",      path.string()};
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        if (cli::run(int(argv.size()), argv.data(), out, err) != 0) {
          o.pass = false;
          continue;
        }
        std::ifstream in(path);
        std::string line;
        std::getline(in, line);
        std::vector<double> xi, y;
        while (std::getline(in, line)) {
          double x, rho, r;
          char c1, c2;
          std::istringstream ls(line);
          ls >> x >> c1 >> rho >> c2 >> r;
          xi.push_back(x);
          y.push_back(r * r * x);
        }
        const double h = xi[1] - xi[0];
        double sum = y.front() + y.back();
        for (std::size_t i = 1; i + 1 < y.size(); ++i) sum += (i % 2 ? 4.0 : 2.0) * y[i];
        worst_file = std::max(worst_file, std::abs(sum * h / 3.0 - 1.0));
        ++files;
      }
    }
  }
  RadialWavefunction flat{0.0, {1.0}, 1.0, 1.0, 1.0};
  RadialWavefunction linear{1.0, {1.0}, 1.0, 1.0, 1.0};
  const double gauss = std::max(std::abs(normalize(flat, 12.0, 4001) - std::sqrt(2.0)),
                                std::abs(normalize(linear, 12.0, 4001) - std::sqrt(2.0)));
  o.pass = o.pass && files == 12 && worst_file <= 1e-6 && gauss <= 1e-10;
  o.detail = std::to_string(files) + " exported files, max |int R^2 xi dxi - 1| " + sci(worst_file) +
             " (tol 1e-6); Gaussian-moment N err " + sci(gauss) + " (tol 1e-10)";
  return o;
}

}  // namespace

int main() {
  const std::vector<Check> checks{
      {1, "ground-state frequency and energy match closed forms", 1.0, ground_state_closed_form},
      {2, "n=2 frequency equals m f^2/(4|gamma|+3)", 0.0, first_excited_frequency},
      {3, "termination cascade for n=1..8", 0.0, termination_cascade},
      {4, "recurrence reproduces a1, a2 closed forms", 0.0, recurrence_fidelity},
      {5, "finite-difference oracle agreement and second-order convergence", 30.0, oracle_agreement},
      {6, "spectra invariant under f -> -f", 0.0, sign_invariance},
      {7, "n=0 rejected with f!=0; f=0 oscillator lambda=2", 0.0, ground_state_and_degenerate_path},
      {8, "wavefunction normalization under xi dxi", 0.0, normalization},
  };
  int failures = 0;
  for (const auto& c : checks) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_budget_s > 0.0 && elapsed >= c.time_budget_s) {
      o.pass = false;
      o.detail += "; runtime " + sci(elapsed) + " s exceeds " + sci(c.time_budget_s) + " s";
    }
    std::printf("[%s] criterion %d: %s -- %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.c_str(), elapsed);
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", int(checks.size()) - failures, checks.size());
  return failures == 0 ? 0 : 1;
}
