#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noon/dynamics.hpp"
#include "noon/model.hpp"
#include "noon/protocol.hpp"

namespace noon::cli {

/// Inclusive linear grid, "start:stop:steps" on the command line.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;  ///< number of points
};

GridSpec parse_grid(const std::string& text);
std::vector<double> expand_grid(const GridSpec& grid);

struct RunConfig {
  SystemParams params;
  double dt = kDefaultDt;
  int sample_every = kDefaultSampleEvery;
  std::string out;  ///< output path; empty writes to stdout
  std::uint64_t seed = 0;
  bool decay = false;
  bool stark = false;
  RoundMode mode = RoundMode::Analytic;
  int rounds = 10;
  std::optional<GridSpec> grid;
  std::string variable = "gamma_f";  ///< fidelity-sweep: gamma_f | eta
  std::vector<double> overlays;      ///< empty = command default
  int threads = 0;  ///< 0 = hardware; capped by NOON_PASSAGE_THREADS
};

/// Loads a flat JSON config (system parameters plus command options).
RunConfig config_from_json_file(const std::string& path);

/// Thread budget for sweeps after applying the environment cap.
int resolved_threads(const RunConfig& cfg);

void cmd_pulses(const RunConfig& cfg);
void cmd_simulate(const RunConfig& cfg);
void cmd_spectrum(const RunConfig& cfg);
void cmd_fidelity_sweep(const RunConfig& cfg);
void cmd_noon_scaling(const RunConfig& cfg);
void cmd_protocol(const RunConfig& cfg);

/// Full argument parse and dispatch. Exit codes: 0 success, 2 config
/// error, 3 I/O error, 4 numeric error.
int run_cli(int argc, const char* const* argv);

}  // namespace noon::cli
