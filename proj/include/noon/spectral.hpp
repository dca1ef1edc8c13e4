#pragma once

#include <vector>

#include "noon/model.hpp"

namespace noon {

enum class Side { Left, Right };

/// Normalized zero-energy eigenstate of the left chain,
///   (OL*etaA |Psi1> - OL*O1 |Psi3> + O1*etaA |Psi5>) / K0,
/// with the leading nonzero coefficient (in label order) made real and
/// non-negative. Throws DegenerateDarkState when K0 underflows.
StateVector analytic_dark_left(double t, const SystemParams& p);

/// Mirror of analytic_dark_left on {Psi6, Psi8, Psi10} with (OR, etaB).
StateVector analytic_dark_right(double t, const SystemParams& p);

/// Strong-fiber-coupling limit of the dark state:
///   (OL |Psi1> + O1 |Psi5>) / sqrt(OL^2 + O1^2)  (or the mirror).
StateVector reduced_dark(double t, const SystemParams& p, Side side);

struct SpectrumSnapshot {
  double time;
  Vector10d eigenvalues;  ///< ascending
  Matrix10 eigenvectors;  ///< orthonormal columns, phase-fixed
  std::vector<int> dark_indices;  ///< |E| <= 1e-9 * ||H||
};

/// Full Hermitian eigendecomposition of the chain Hamiltonian at t.
SpectrumSnapshot instantaneous_spectrum(double t, const SystemParams& p);

/// Worst nonadiabatic coupling ratio max_t max_k |<E_k|dD/dt>| / |E_k|
/// over both chains, with dD/dt by symmetric finite difference
/// (step T/1e5) and the gaps taken at the drive scale used by evolve.
/// Samples n_samples times uniformly over [0, T]. Samples where the
/// dark state is degenerate (all pulses off) contribute zero: the dark
/// state is frozen there.
double adiabaticity_metric(const SystemParams& p, int n_samples);

}  // namespace noon
