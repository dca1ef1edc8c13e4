#pragma once

#include <vector>

#include "noon/hamiltonian.hpp"
#include "noon/model.hpp"

namespace noon {

inline constexpr double kDefaultDt = 1e-3;
inline constexpr int kDefaultSampleEvery = 100;

/// Sampled result of an integration run over [0, T].
struct Trajectory {
  std::vector<double> times;
  std::vector<StateVector> states;
  double step_size = 0.0;
};

/// Ratio between the couplings driving the time evolution and the
/// two-photon couplings stored in the built matrix. The drive enters the
/// integrator in raw pulse units (a factor delta/g above the Raman-
/// eliminated values); all coupling ratios, and hence the dark-state
/// geometry, are unchanged. Loss rates enter unscaled.
double drive_scale(const SystemParams& p);

/// Fixed-step classical RK4 for i dpsi/dt = H(t) psi, where H is the
/// drive-scaled Hermitian part of `build` plus (optionally) the loss
/// diagonal. Samples every `sample_every` steps plus the final point.
/// Throws StepTooLarge if the norm drifts more than 1e-6 in a Hermitian
/// run (rerun with a smaller dt).
Trajectory evolve(const StateVector& psi0, const SystemParams& p,
                  const BuildOptions& opts = {}, double dt = kDefaultDt,
                  int sample_every = kDefaultSampleEvery);

/// |amp_i|^2 per basis label; sums to the squared norm.
Vector10d populations(const StateVector& s);

/// P(Psi5) + P(Psi10) at the final sample.
double transfer_probability(const Trajectory& traj);

/// |<target|psi(T)>|^2 under evolution with the loss terms on.
double survival_fidelity(const StateVector& psi0, const StateVector& target,
                         const SystemParams& p, double dt = kDefaultDt);

}  // namespace noon
