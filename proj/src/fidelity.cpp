#include "noon/fidelity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "noon/pulses.hpp"

namespace noon {

namespace {

constexpr double kDenominatorFloor = 1e-300;

double loss_term(double omega_endpoint, double omega_mid, double eta) {
  const double a2 = omega_endpoint * omega_endpoint;
  const double b2 = omega_mid * omega_mid;
  const double e2 = eta * eta;
  const double k2 = a2 * e2 + a2 * b2 + b2 * e2;
  if (k2 < kDenominatorFloor) return 0.0;  // both numerator factors vanish faster
  return a2 * b2 / k2;
}

}  // namespace

double round_fidelity(const SystemParams& p, int nodes) {
  p.validate();
  if (nodes < 3 || nodes % 2 == 0) {
    throw InvalidParameters("Simpson quadrature needs an odd node count >= 3");
  }

  const double T = p.total_time;
  const double h = T / static_cast<double>(nodes - 1);
  double sum = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double t = h * static_cast<double>(i);
    const double o1 = effective_rabi(t, PulseId::One, p);
    const double f = loss_term(effective_rabi(t, PulseId::L, p), o1, p.eta_a) +
                     loss_term(effective_rabi(t, PulseId::R, p), o1, p.eta_b);
    const double w = (i == 0 || i == nodes - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += w * f;
  }
  const double integral = sum * h / 3.0;
  const double fidelity = 1.0 - 0.5 * p.gamma_f * integral;
  if (fidelity < 0.0) {
    std::ostringstream msg;
    msg << "perturbative fidelity " << fidelity
        << " is negative: outside the formula's validity range";
    throw InvalidParameters(msg.str());
  }
  return fidelity;
}

double noon_fidelity(const SystemParams& p, int n, Compounding rule) {
  if (n < 1) throw InvalidParameters("noon_fidelity needs n >= 1");
  const double f = round_fidelity(p);
  switch (rule) {
    case Compounding::IndependentRounds:
      return std::pow(f, n);
    case Compounding::FirstOrder:
      return 1.0 - static_cast<double>(n) * (1.0 - f);
  }
  throw InvalidParameters("unknown compounding rule");
}

SweepTable sweep(const SystemParams& p, SweepVariable variable,
                 const std::vector<double>& grid,
                 const std::vector<double>& overlays, int max_threads) {
  p.validate();
  if (grid.empty()) throw InvalidParameters("sweep grid must be nonempty");
  if (variable == SweepVariable::Rounds) {
    for (double x : grid) {
      if (!(x >= 1.0) || x != std::floor(x)) {
        throw InvalidParameters("round-count grid values must be integers >= 1");
      }
    }
  }

  SweepTable table;
  table.base = p;
  switch (variable) {
    case SweepVariable::GammaF:
      table.variable = "gamma_f";
      table.overlay_name = "omega0";
      break;
    case SweepVariable::Eta:
      table.variable = "eta";
      table.overlay_name = "gamma_f";
      break;
    case SweepVariable::Rounds:
      table.variable = "n";
      table.overlay_name = "gamma_f";
      break;
  }

  const bool has_overlay = !overlays.empty();
  const std::size_t n_curves = has_overlay ? overlays.size() : 1;
  const std::size_t n_rows = n_curves * grid.size();
  table.x.resize(n_rows);
  table.overlay.resize(has_overlay ? n_rows : 0);
  table.fidelity.resize(n_rows);
  table.failure.resize(n_rows);

  auto evaluate = [&](std::size_t row) {
    const std::size_t ci = row / grid.size();
    const double x = grid[row % grid.size()];
    table.x[row] = x;

    SystemParams pt = p;
    if (has_overlay) {
      table.overlay[row] = overlays[ci];
      if (table.overlay_name == "omega0") {
        pt.omega0 = overlays[ci];
      } else {
        pt.gamma_f = overlays[ci];
      }
    }
    try {
      switch (variable) {
        case SweepVariable::GammaF:
          pt.gamma_f = x;
          table.fidelity[row] = round_fidelity(pt);
          break;
        case SweepVariable::Eta:
          pt.eta_a = pt.eta_b = x;
          table.fidelity[row] = round_fidelity(pt);
          break;
        case SweepVariable::Rounds:
          table.fidelity[row] = noon_fidelity(pt, static_cast<int>(x));
          break;
      }
    } catch (const Error& e) {
      table.fidelity[row] = std::numeric_limits<double>::quiet_NaN();
      table.failure[row] = e.what();
    }
  };

  const int n_threads = std::clamp<int>(max_threads, 1,
                                        static_cast<int>(n_rows));
  if (n_threads == 1) {
    for (std::size_t row = 0; row < n_rows; ++row) evaluate(row);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(n_threads));
    for (int w = 0; w < n_threads; ++w) {
      workers.emplace_back([&]() {
        for (std::size_t row = next.fetch_add(1); row < n_rows;
             row = next.fetch_add(1)) {
          evaluate(row);
        }
      });
    }
    for (auto& worker : workers) worker.join();
  }
  return table;
}

}  // namespace noon
