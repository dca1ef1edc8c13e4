#include "noon/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <json.hpp>

#include "noon/fidelity.hpp"
#include "noon/pulses.hpp"
#include "noon/spectral.hpp"

namespace noon::cli {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

/// Runs `body` against the configured output stream, stdout if no path.
template <typename Body>
void with_output(const std::string& path, Body&& body) {
  if (path.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file: " + path);
  body(out);
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

std::string sidecar_path(const std::string& out) {
  const std::string suffix = ".csv";
  if (out.size() > suffix.size() &&
      out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return out.substr(0, out.size() - suffix.size()) + ".params.json";
  }
  return out + ".params.json";
}

std::vector<double> sample_times(double total_time, double step) {
  std::vector<double> times;
  const long n = std::max<long>(1, std::lround(total_time / step));
  times.reserve(static_cast<std::size_t>(n) + 1);
  for (long i = 0; i < n; ++i) {
    times.push_back(total_time * static_cast<double>(i) /
                    static_cast<double>(n));
  }
  times.push_back(total_time);
  return times;
}

double dark_overlap(double t, const SystemParams& p, const StateVector& psi) {
  try {
    return std::norm(analytic_dark_left(t, p).dot(psi)) +
           std::norm(analytic_dark_right(t, p).dot(psi));
  } catch (const DegenerateDarkState&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

void write_sweep_outputs(const SweepTable& table, const RunConfig& cfg,
                         const std::string& command) {
  const bool has_overlay = !table.overlay.empty();
  with_output(cfg.out, [&](std::ostream& out) {
    out << "x,fidelity";
    if (has_overlay) out << ",overlay_value";
    out << "\n";
    for (std::size_t i = 0; i < table.x.size(); ++i) {
      out << fmt(table.x[i]) << ',' << fmt(table.fidelity[i]);
      if (has_overlay) out << ',' << fmt(table.overlay[i]);
      out << "\n";
    }
  });

  nlohmann::json meta{
      {"command", command},
      {"variable", table.variable},
      {"overlay_name", has_overlay ? table.overlay_name : ""},
      {"params", params_to_json(table.base)},
  };
  nlohmann::json failures = nlohmann::json::array();
  for (std::size_t i = 0; i < table.failure.size(); ++i) {
    if (!table.failure[i].empty()) {
      failures.push_back({{"row", i}, {"error", table.failure[i]}});
    }
  }
  meta["failures"] = failures;
  if (!cfg.out.empty()) {
    with_output(sidecar_path(cfg.out),
                [&](std::ostream& out) { out << meta.dump(2) << "\n"; });
  }
}

std::vector<double> overlay_defaults(const std::string& overlay_name) {
  if (overlay_name == "omega0") return {0.75, 1.5, 2.25};
  return {0.05, 0.1, 0.2};
}

const char* ancilla_name(AncillaLevel level) {
  return level == AncillaLevel::F ? "f" : "g";
}

nlohmann::json register_to_json(const NoonRegister& reg) {
  return nlohmann::json{
      {"n", reg.n},
      {"amp_l", {reg.amp_l.real(), reg.amp_l.imag()}},
      {"amp_r", {reg.amp_r.real(), reg.amp_r.imag()}},
      {"ancilla_level", ancilla_name(reg.ancilla_level)},
      {"est_fidelity", reg.est_fidelity},
  };
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
  GridSpec spec;
  char trailing = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &spec.start, &spec.stop,
                  &spec.steps, &trailing) != 3) {
    throw ConfigError("grid must be start:stop:steps, got '" + text + "'");
  }
  if (spec.steps < 1 || !std::isfinite(spec.start) ||
      !std::isfinite(spec.stop)) {
    throw ConfigError("grid values out of range: '" + text + "'");
  }
  return spec;
}

std::vector<double> expand_grid(const GridSpec& grid) {
  std::vector<double> values(static_cast<std::size_t>(grid.steps));
  if (grid.steps == 1) {
    values[0] = grid.start;
    return values;
  }
  for (int i = 0; i < grid.steps; ++i) {
    values[static_cast<std::size_t>(i)] =
        grid.start + (grid.stop - grid.start) * static_cast<double>(i) /
                         static_cast<double>(grid.steps - 1);
  }
  return values;
}

RunConfig config_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }

  RunConfig cfg;
  try {
    cfg.params = params_from_json(j);
    if (j.contains("dt")) cfg.dt = j.at("dt").get<double>();
    if (j.contains("sample_every")) {
      cfg.sample_every = j.at("sample_every").get<int>();
    }
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("decay")) cfg.decay = j.at("decay").get<bool>();
    if (j.contains("stark")) cfg.stark = j.at("stark").get<bool>();
    if (j.contains("n")) cfg.rounds = j.at("n").get<int>();
    if (j.contains("grid")) {
      cfg.grid = parse_grid(j.at("grid").get<std::string>());
    }
    if (j.contains("variable")) {
      cfg.variable = j.at("variable").get<std::string>();
    }
    if (j.contains("overlays")) {
      cfg.overlays = j.at("overlays").get<std::vector<double>>();
    }
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    if (j.contains("mode")) {
      const auto mode = j.at("mode").get<std::string>();
      if (mode == "analytic") {
        cfg.mode = RoundMode::Analytic;
      } else if (mode == "simulated") {
        cfg.mode = RoundMode::Simulated;
      } else {
        throw ConfigError("mode must be analytic|simulated, got '" + mode +
                          "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config field error in " + path + ": " + e.what());
  }
  return cfg;
}

int resolved_threads(const RunConfig& cfg) {
  int threads = cfg.threads > 0
                    ? cfg.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(threads, 1);
  if (const char* cap_text = std::getenv("NOON_PASSAGE_THREADS")) {
    const int cap = std::atoi(cap_text);
    if (cap > 0) threads = std::min(threads, cap);
  }
  return threads;
}

void cmd_pulses(const RunConfig& cfg) {
  cfg.params.validate();
  const SystemParams& p = cfg.params;
  const auto shape = [&p](double t, PulseId xi) {
    const double d = t - pulse_center(xi, p);
    return std::exp(-d * d / (2.0 * p.tau_pulse * p.tau_pulse));
  };
  with_output(cfg.out, [&](std::ostream& out) {
    out << "t,omega_L_norm,omega_R_norm,omega_1_norm\n";
    for (double t : sample_times(p.total_time, cfg.dt * cfg.sample_every)) {
      out << fmt(t) << ',' << fmt(shape(t, PulseId::L)) << ','
          << fmt(shape(t, PulseId::R)) << ',' << fmt(shape(t, PulseId::One))
          << "\n";
    }
  });
}

void cmd_simulate(const RunConfig& cfg) {
  StateVector psi0 = StateVector::Zero();
  psi0[0] = psi0[5] = Complex(1.0 / std::sqrt(2.0), 0.0);
  const Trajectory traj = evolve(psi0, cfg.params,
                                 BuildOptions{cfg.stark, cfg.decay}, cfg.dt,
                                 cfg.sample_every);
  with_output(cfg.out, [&](std::ostream& out) {
    out << "t,p1,p2,p3,p4,p5,p6,p7,p8,p9,p10,norm2,dark_overlap\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      const double t = traj.times[i];
      const StateVector& psi = traj.states[i];
      out << fmt(t);
      const Vector10d pop = populations(psi);
      for (int k = 0; k < kDim; ++k) out << ',' << fmt(pop[k]);
      out << ',' << fmt(psi.squaredNorm()) << ','
          << fmt(dark_overlap(t, cfg.params, psi)) << "\n";
    }
  });
}

void cmd_spectrum(const RunConfig& cfg) {
  cfg.params.validate();
  with_output(cfg.out, [&](std::ostream& out) {
    out << "t,e1,e2,e3,e4,e5,e6,e7,e8,e9,e10,n_dark\n";
    for (double t :
         sample_times(cfg.params.total_time, cfg.dt * cfg.sample_every)) {
      const SpectrumSnapshot snap = instantaneous_spectrum(t, cfg.params);
      out << fmt(t);
      for (int k = 0; k < kDim; ++k) out << ',' << fmt(snap.eigenvalues[k]);
      out << ',' << snap.dark_indices.size() << "\n";
    }
  });
}

void cmd_fidelity_sweep(const RunConfig& cfg) {
  SweepVariable variable;
  GridSpec default_grid;
  if (cfg.variable == "gamma_f") {
    variable = SweepVariable::GammaF;
    default_grid = GridSpec{0.0, 0.3, 61};
  } else if (cfg.variable == "eta") {
    variable = SweepVariable::Eta;
    default_grid = GridSpec{0.05, 1.5, 30};
  } else {
    throw ConfigError("fidelity-sweep variable must be gamma_f|eta, got '" +
                      cfg.variable + "'");
  }
  const std::vector<double> grid =
      expand_grid(cfg.grid.value_or(default_grid));
  const std::vector<double> overlays =
      cfg.overlays.empty()
          ? overlay_defaults(variable == SweepVariable::GammaF ? "omega0"
                                                               : "gamma_f")
          : cfg.overlays;
  const SweepTable table =
      sweep(cfg.params, variable, grid, overlays, resolved_threads(cfg));
  write_sweep_outputs(table, cfg, "fidelity-sweep");
}

void cmd_noon_scaling(const RunConfig& cfg) {
  const std::vector<double> grid =
      expand_grid(cfg.grid.value_or(GridSpec{1.0, 20.0, 20}));
  const std::vector<double> overlays =
      cfg.overlays.empty() ? overlay_defaults("gamma_f") : cfg.overlays;
  const SweepTable table = sweep(cfg.params, SweepVariable::Rounds, grid,
                                 overlays, resolved_threads(cfg));
  write_sweep_outputs(table, cfg, "noon-scaling");
}

void cmd_protocol(const RunConfig& cfg) {
  const ProtocolResult result =
      run_protocol(cfg.rounds, cfg.params, cfg.seed, cfg.mode);

  nlohmann::json steps = nlohmann::json::array();
  for (const ProtocolStep& step : result.transcript) {
    nlohmann::json entry{{"name", step.name},
                         {"register", register_to_json(step.reg)}};
    if (step.transfer_probability) {
      entry["transfer_probability"] = *step.transfer_probability;
    }
    steps.push_back(std::move(entry));
  }
  const nlohmann::json doc{
      {"command", "protocol"},
      {"n", cfg.rounds},
      {"seed", cfg.seed},
      {"mode", cfg.mode == RoundMode::Analytic ? "analytic" : "simulated"},
      {"params", params_to_json(cfg.params)},
      {"est_fidelity", result.est_fidelity},
      {"outcome",
       {{"detected", result.outcome.detected == Detected::GL ? "g_L" : "g_R"},
        {"resulting_state",
         result.outcome.resulting_state == NoonSign::Plus ? "NOON+"
                                                          : "NOON-"},
        {"n", result.outcome.n}}},
      {"steps", steps},
  };
  with_output(cfg.out,
              [&](std::ostream& out) { out << doc.dump(2) << "\n"; });
}

namespace {

/// Pre-scan for --config so file values become the defaults that the
/// remaining flags override.
std::string find_config_path(int argc, const char* const* argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return argv[i + 1];
    if (arg.rfind("--config=", 0) == 0) {
      return std::string(arg.substr(std::string_view("--config=").size()));
    }
  }
  return {};
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  try {
    RunConfig cfg;
    const std::string config_path = find_config_path(argc, argv);
    if (!config_path.empty()) cfg = config_from_json_file(config_path);

    CLI::App app{
        "Adiabatic-passage NOON-state generation on a three-cavity, "
        "two-fiber network: dynamics, spectra, fidelity sweeps, protocol "
        "runs."};
    app.fallthrough();
    app.require_subcommand(1);

    std::string config_opt;
    app.add_option("--config", config_opt, "JSON config file");
    app.add_option("--out", cfg.out, "output path (default stdout)");
    app.add_option("--dt", cfg.dt, "integrator step");
    app.add_option("--sample-every", cfg.sample_every,
                   "record every k-th step");
    app.add_option("--seed", cfg.seed, "measurement RNG seed");
    app.add_option("--gamma-f", cfg.params.gamma_f, "fiber decay rate");
    double eta = cfg.params.eta_a;
    auto* eta_opt =
        app.add_option("--eta", eta, "fiber-cavity coupling (both fibers)");
    app.add_option("--omega0", cfg.params.omega0, "pulse amplitude");
    app.add_option("--delta", cfg.params.delta, "common detuning");
    app.add_option("--kappa-c", cfg.params.kappa_c, "cavity decay rate");
    app.add_option("--total-time", cfg.params.total_time, "adiabatic window");
    app.add_option("--n", cfg.rounds, "protocol rounds / NOON size");
    std::string grid_text;
    auto* grid_opt =
        app.add_option("--grid", grid_text, "sweep grid start:stop:steps");
    app.add_flag("--decay", cfg.decay, "include loss terms");
    app.add_flag("--stark", cfg.stark, "include drive level shifts");
    std::string mode_text =
        cfg.mode == RoundMode::Analytic ? "analytic" : "simulated";
    auto* mode_opt = app.add_option("--mode", mode_text,
                                    "protocol round mode analytic|simulated");
    app.add_option("--variable", cfg.variable,
                   "fidelity-sweep variable gamma_f|eta");
    app.add_option("--overlays", cfg.overlays,
                   "overlay parameter values for sweeps");
    app.add_option("--threads", cfg.threads,
                   "sweep threads (0 = hardware, capped by "
                   "NOON_PASSAGE_THREADS)");

    void (*command)(const RunConfig&) = nullptr;
    app.add_subcommand("pulses", "normalized pulse shapes CSV")
        ->callback([&] { command = cmd_pulses; });
    app.add_subcommand("simulate", "population trajectory CSV")
        ->callback([&] { command = cmd_simulate; });
    app.add_subcommand("spectrum", "instantaneous eigenvalue CSV")
        ->callback([&] { command = cmd_spectrum; });
    app.add_subcommand("fidelity-sweep", "fidelity vs gamma_f or eta CSV")
        ->callback([&] { command = cmd_fidelity_sweep; });
    app.add_subcommand("noon-scaling", "fidelity vs round count CSV")
        ->callback([&] { command = cmd_noon_scaling; });
    app.add_subcommand("protocol", "protocol transcript JSON")
        ->callback([&] { command = cmd_protocol; });

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e);
      return code == 0 ? 0 : 2;
    }

    if (eta_opt->count() > 0) cfg.params.eta_a = cfg.params.eta_b = eta;
    if (grid_opt->count() > 0) cfg.grid = parse_grid(grid_text);
    if (mode_opt->count() > 0) {
      if (mode_text == "analytic") {
        cfg.mode = RoundMode::Analytic;
      } else if (mode_text == "simulated") {
        cfg.mode = RoundMode::Simulated;
      } else {
        throw ConfigError("mode must be analytic|simulated, got '" +
                          mode_text + "'");
      }
    }

    command(cfg);
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidParameters& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace noon::cli
