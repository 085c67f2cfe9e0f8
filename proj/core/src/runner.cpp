#include "lsq/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "lsq/csv.hpp"
#include "lsq/dressed.hpp"
#include "lsq/errors.hpp"
#include "lsq/presets.hpp"
#include "lsq/spectrum.hpp"
#include "lsq/variance.hpp"

namespace lsq {

namespace {

std::vector<double> linspace(const GridSpec& grid) {
  std::vector<double> out(grid.points);
  for (int k = 0; k < grid.points; ++k) {
    out[k] = grid.min + (grid.max - grid.min) * k / (grid.points - 1);
  }
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string run_id_for(const RunConfig& config) {
  std::ostringstream key;
  key << mode_name(config.mode) << '|' << config.output << '|' << config.theta;
  if (config.preset) {
    key << '|' << *config.preset;
  }
  if (config.params) {
    const SystemParams& p = *config.params;
    key << '|' << p.gamma1 << ',' << p.gamma2 << ',' << p.delta1 << ','
        << p.delta2 << ',' << p.omega1 << ',' << p.omega2 << ',' << p.omega3
        << ',' << p.phi;
  }
  if (config.grid) {
    key << '|' << config.grid->min << ',' << config.grid->max << ','
        << config.grid->points;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(key.str())));
  return buf;
}

nlohmann::json params_json(const SystemParams& p) {
  return nlohmann::json{{"gamma1", p.gamma1},   {"gamma2", p.gamma2},
                        {"delta1", p.delta1},   {"delta2", p.delta2},
                        {"delta3", p.delta3},   {"omega1", p.omega1},
                        {"omega2", p.omega2},   {"omega3", p.omega3},
                        {"phi", p.phi}};
}

// Cheap post-run sanity: stationary residual, Hermiticity, populations.
bool steady_checks(const LiouvilleSystem& sys, const StateVector& psi) {
  const double residual = (sys.L * psi.psi + sys.drive).norm();
  const double scale = sys.drive.norm();
  const bool residual_ok = residual <= 1e-10 * std::max(scale, 1e-30);
  const bool pairing_ok = psi.pairing_error() <= 1e-8;
  const double r11 = std::real(psi.rho11());
  const double r22 = std::real(psi.rho22());
  const bool populations_ok =
      r11 >= -1e-10 && r22 >= -1e-10 && r11 + r22 <= 1.0 + 1e-10;
  return residual_ok && pairing_ok && populations_ok;
}

bool all_finite(const std::vector<double>& values) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      return false;
    }
  }
  return true;
}

void warn_if_slow_channel(const SystemParams& p) {
  if (p.gamma1 <= p.gamma2) {
    std::fprintf(stderr,
                 "warning: total-variance squeezing requires the detected "
                 "transition to decay faster (gamma1 > gamma2); expect f >= 0\n");
  }
}

StateVector steady_for(const SystemParams& p) {
  return steady_state(build_liouvillian(p));
}

std::vector<double> spectrum_grid(const RunConfig& config,
                                  const SystemParams& p) {
  if (config.grid) {
    return linspace(*config.grid);
  }
  return default_omega_grid(diagonalize(p).max_splitting());
}

CsvTable run_spectrum(const RunConfig& config, bool oracle, bool& checks) {
  const SystemParams& p = *config.params;
  const LiouvilleSystem sys = build_liouvillian(p);
  const StateVector psi = steady_state(sys);
  const std::vector<double> grid = spectrum_grid(config, p);
  const QuadraturePhase theta(config.theta);
  const SpectrumResult s =
      oracle ? time_domain_spectrum_oracle(sys, psi, theta, grid)
             : squeezing_spectrum(sys, psi, theta, grid);
  checks = steady_checks(sys, psi) && all_finite(s.values);
  CsvTable table;
  table.header = {"omega", "s"};
  for (std::size_t k = 0; k < s.omegas.size(); ++k) {
    table.rows.push_back({s.omegas[k], s.values[k]});
  }
  return table;
}

CsvTable run_dressed(const RunConfig& config, bool& checks) {
  const SystemParams& p = *config.params;
  const DressedBasis basis = diagonalize(p);
  const Mat3 H = hamiltonian(p);
  double residual = 0.0;
  for (int i = 0; i < 3; ++i) {
    residual = std::max(residual, (H * basis.coeffs.col(i) -
                                   basis.lambdas[i] * basis.coeffs.col(i))
                                      .norm());
  }
  checks = residual <= 1e-10 * std::max(1.0, H.norm());
  CsvTable table;
  table.header = {"state",      "lambda",     "a1_re",      "a1_im",
                  "a2_re",      "a2_im",      "a3_re",      "a3_im",
                  "gamma_to_1", "gamma_to_2", "gamma_to_3"};
  for (int i = 0; i < 3; ++i) {
    table.rows.push_back({static_cast<double>(i + 1), basis.lambdas[i],
                          std::real(basis.coeffs(0, i)),
                          std::imag(basis.coeffs(0, i)),
                          std::real(basis.coeffs(1, i)),
                          std::imag(basis.coeffs(1, i)),
                          std::real(basis.coeffs(2, i)),
                          std::imag(basis.coeffs(2, i)), basis.gammas(i, 0),
                          basis.gammas(i, 1), basis.gammas(i, 2)});
  }
  return table;
}

CsvTable run_variance(const RunConfig& config, bool& checks) {
  const SystemParams& p = *config.params;
  warn_if_slow_channel(p);
  const LiouvilleSystem sys = build_liouvillian(p);
  const StateVector psi = steady_state(sys);
  const SqueezingReport report = full_report(p, psi);
  checks = steady_checks(sys, psi);
  CsvTable table;
  table.header = {"f_numeric", "f_analytic", "theta_opt",
                  "rho11",     "abs_rho13",  "phi31"};
  table.rows.push_back({report.f_numeric,
                        report.f_analytic.value_or(std::nan("")),
                        report.theta_opt, report.rho11, report.rho13_abs,
                        report.phi31});
  return table;
}

CsvTable run_omega3_sweep(const RunConfig& config, bool& checks,
                          std::string& note) {
  const SystemParams& base = *config.params;
  warn_if_slow_channel(base);
  const GridSpec grid = config.grid.value_or(GridSpec{0.05, 20.0, 400});
  checks = true;
  CsvTable table;
  table.header = {"omega3", "f", "rho22", "abs_rho12"};
  for (double omega3 : linspace(grid)) {
    SystemParams p = base;
    p.omega3 = omega3;
    const LiouvilleSystem sys = build_liouvillian(p);
    const StateVector psi = steady_state(sys);
    checks = checks && steady_checks(sys, psi);
    table.rows.push_back({omega3,
                          squeezing_parameter(psi).f_numeric,
                          std::real(psi.rho22()), std::abs(psi.rho12())});
  }
  const Omega3Minimum min =
      minimize_over_omega3(base, std::max(grid.min, 1e-6), grid.max);
  std::ostringstream oss;
  oss << "minimum f = " << format_double(min.f_min) << " at omega3 = "
      << format_double(min.omega3_star) << " (rho22 = "
      << format_double(min.rho22) << ", |rho12| = "
      << format_double(min.abs_rho12) << ")";
  note = oss.str();
  return table;
}

CsvTable run_phi_sweep(const RunConfig& config, bool& checks) {
  const SystemParams& p = *config.params;
  warn_if_slow_channel(p);
  const GridSpec grid =
      config.grid.value_or(GridSpec{-M_PI + M_PI / 180.0, M_PI, 360});
  const auto curve = sweep_phase(p, linspace(grid));
  checks = true;
  CsvTable table;
  table.header = {"phi", "f"};
  for (const auto& [phi, f] : curve) {
    table.rows.push_back({phi, f});
  }
  return table;
}

CsvTable run_preset(const RunConfig& config, bool& checks) {
  const Preset& preset = find_preset(*config.preset);
  const std::vector<double> grid = linspace(preset.grid);
  CsvTable table;
  checks = true;

  if (preset.name == "fig2a" || preset.name == "fig2b") {
    // Solid: low-frequency field on. Dotted: field off.
    SystemParams off = preset.params;
    off.omega3 = 0.0;
    const LiouvilleSystem sys_on = build_liouvillian(preset.params);
    const LiouvilleSystem sys_off = build_liouvillian(off);
    const StateVector psi_on = steady_state(sys_on);
    const StateVector psi_off = steady_state(sys_off);
    const QuadraturePhase theta(preset.theta);
    const SpectrumResult on = squeezing_spectrum(sys_on, psi_on, theta, grid);
    const SpectrumResult dotted =
        squeezing_spectrum(sys_off, psi_off, theta, grid);
    checks = steady_checks(sys_on, psi_on) && steady_checks(sys_off, psi_off) &&
             all_finite(on.values) && all_finite(dotted.values);
    table.header = {"omega", "s_solid", "s_dotted"};
    for (std::size_t k = 0; k < grid.size(); ++k) {
      table.rows.push_back({grid[k], on.values[k], dotted.values[k]});
    }
    return table;
  }

  warn_if_slow_channel(preset.params);
  if (preset.name == "fig3") {
    table.header = {"omega3", "f_solid", "f_dotted"};
    for (double omega3 : grid) {
      SystemParams solid = preset.params;
      solid.omega3 = omega3;
      SystemParams dotted = solid;
      dotted.phi = M_PI / 2.0;
      table.rows.push_back(
          {omega3, squeezing_parameter(steady_for(solid)).f_numeric,
           squeezing_parameter(steady_for(dotted)).f_numeric});
    }
    return table;
  }
  if (preset.name == "fig4") {
    table.header = {"omega3", "rho11", "rho22", "abs_rho12", "abs_rho13"};
    for (double omega3 : grid) {
      SystemParams p = preset.params;
      p.omega3 = omega3;
      const StateVector psi = steady_for(p);
      table.rows.push_back({omega3, std::real(psi.rho11()),
                            std::real(psi.rho22()), std::abs(psi.rho12()),
                            std::abs(psi.rho13())});
    }
    return table;
  }
  // fig5
  table.header = {"phi", "f"};
  for (const auto& [phi, f] : sweep_phase(preset.params, grid)) {
    table.rows.push_back({phi, f});
  }
  return table;
}

}  // namespace

int run(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  bool checks_passed = false;
  std::string note;
  try {
    CsvTable table;
    switch (config.mode) {
      case RunMode::spectrum:
        table = run_spectrum(config, /*oracle=*/false, checks_passed);
        break;
      case RunMode::spectrum_oracle:
        table = run_spectrum(config, /*oracle=*/true, checks_passed);
        break;
      case RunMode::dressed:
        table = run_dressed(config, checks_passed);
        break;
      case RunMode::variance:
        table = run_variance(config, checks_passed);
        break;
      case RunMode::omega3_sweep:
        table = run_omega3_sweep(config, checks_passed, note);
        break;
      case RunMode::phi_sweep:
        table = run_phi_sweep(config, checks_passed);
        break;
      case RunMode::preset:
        table = run_preset(config, checks_passed);
        break;
    }
    write_text_file(config.output, to_csv(table));

    const double duration =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    nlohmann::json entry;
    entry["run_id"] = run_id_for(config);
    entry["mode"] = mode_name(config.mode);
    entry["params"] = config.params
                          ? params_json(*config.params)
                          : params_json(find_preset(*config.preset).params);
    if (config.preset) {
      entry["params"]["preset"] = *config.preset;
    }
    entry["duration_s"] = duration;
    entry["checks_passed"] = checks_passed;
    const std::string log_path =
        config.log_path.value_or(default_log_path(config.output));
    std::ofstream log(log_path, std::ios::app);
    if (!log) {
      throw Error("cannot open log '" + log_path + "' for appending");
    }
    log << entry.dump() << '\n';

    std::printf("%s: wrote %s (%zu rows, %.3f s)%s\n", mode_name(config.mode),
                config.output.c_str(), table.rows.size(), duration,
                checks_passed ? "" : " [invariant checks FAILED]");
    if (!note.empty()) {
      std::printf("%s\n", note.c_str());
    }
    return 0;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

namespace {

struct CheckReporter {
  std::ostream& out;
  int failures = 0;

  void operator()(const std::string& name, bool ok, const std::string& detail) {
    out << (ok ? "ok   " : "FAIL ") << name;
    if (!ok && !detail.empty()) {
      out << " (" << detail << ")";
    }
    out << '\n';
    failures += ok ? 0 : 1;
  }
};

SystemParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> gamma(0.05, 20.0);
  std::uniform_real_distribution<double> delta(-20.0, 20.0);
  std::uniform_real_distribution<double> rabi(0.5, 30.0);
  std::uniform_real_distribution<double> rabi3(0.0, 15.0);
  std::uniform_real_distribution<double> phase(-M_PI, M_PI);
  return make_params(gamma(rng), 1.0, delta(rng), delta(rng), rabi(rng),
                     rabi(rng), rabi3(rng), phase(rng));
}

}  // namespace

int run_check(std::ostream& out) {
  std::mt19937_64 rng(0x5eedULL);
  CheckReporter report{out};

  {
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const SystemParams p = random_params(rng);
      const DressedBasis basis = [&] {
        try {
          return diagonalize(p);
        } catch (const DegenerateSpectrum&) {
          return DressedBasis{};  // skip: trace rule checked on valid bases
        }
      }();
      if (basis.coeffs.isZero()) {
        continue;
      }
      worst = std::max(worst, std::abs(basis.lambdas.sum() + p.delta1 +
                                       (p.delta1 - p.delta2)));
    }
    report("eigenvalue trace rule", worst <= 1e-10,
           "worst " + format_double(worst));
  }

  {
    const SystemParams p = make_params(0.5, 1.0, 0.0, 0.0, 5.0, 5.0, 0.0, 0.3);
    const StateVector psi = steady_for(p);
    const double err =
        std::max({std::abs(psi.rho11()), std::abs(psi.rho22() - 0.5),
                  std::abs(psi.rho23() + 0.5)});
    report("population-trapping dark state", err <= 1e-10,
           "deviation " + format_double(err));
  }

  {
    bool ok = true;
    std::string detail;
    for (int k = 0; k < 200 && ok; ++k) {
      const SystemParams p = random_params(rng);
      const LiouvilleSystem sys = build_liouvillian(p);
      StateVector psi;
      try {
        psi = steady_state(sys);
      } catch (const SingularLiouvillian&) {
        continue;
      }
      if (!steady_checks(sys, psi)) {
        ok = false;
        detail = "draw " + std::to_string(k);
      }
      const auto eigs = to_density_matrix(psi)
                            .rho.selfadjointView<Eigen::Lower>()
                            .eigenvalues();
      if (eigs.minCoeff() < -1e-10) {
        ok = false;
        detail = "negative population, draw " + std::to_string(k);
      }
    }
    report("steady-state residual / physicality", ok, detail);
  }

  {
    SystemParams a = make_params(0.1, 1.0, 15.0, -15.0, 30.0, 30.0, 0.0, 0.0);
    SystemParams b = make_params(0.1, 1.0, 15.0, -15.0, 30.0, 30.0, 0.0, 2.0);
    const double diff =
        (steady_for(a).psi - steady_for(b).psi).cwiseAbs().maxCoeff();
    report("phase decoupling without the low-frequency field", diff <= 1e-12,
           "max diff " + format_double(diff));
  }

  {
    double worst = 0.0;
    std::uniform_real_distribution<double> rabi(1.0, 15.0);
    std::uniform_real_distribution<double> phase(-M_PI, M_PI);
    std::uniform_real_distribution<double> gamma(1.5, 25.0);
    for (int k = 0; k < 100; ++k) {
      const SystemParams p = make_params(gamma(rng), 1.0, 0.0, 0.0, rabi(rng),
                                         0.0, rabi(rng), phase(rng));
      SystemParams q = p;
      q.omega2 = q.omega1;
      const double fn = squeezing_parameter(steady_for(q)).f_numeric;
      worst = std::max(worst, std::abs(fn - squeezing_parameter_analytic(q)));
    }
    report("closed-form vs numeric squeezing parameter", worst <= 1e-8,
           "worst " + format_double(worst));
  }

  {
    const SystemParams p = random_params(rng);
    const LiouvilleSystem sys = build_liouvillian(p);
    const Mat8 diff = resolvent(sys, 7.5) - resolvent(sys, -7.5);
    report("resolvent evenness", diff.cwiseAbs().maxCoeff() <= 1e-12, "");
  }

  return report.failures == 0 ? 0 : 1;
}

}  // namespace lsq
