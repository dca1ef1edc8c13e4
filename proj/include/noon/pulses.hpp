#pragma once

#include "noon/model.hpp"

namespace noon {

/// Identifies the three classical driving fields.
enum class PulseId { L, R, One };

/// Center of the Gaussian for the given pulse: T/2 + t_xi.
double pulse_center(PulseId xi, const SystemParams& p);

/// Omega0 * exp(-(t - T/2 - t_xi)^2 / (2 tau^2)). Defined for all t;
/// the Gaussian is never truncated outside [0, T].
double gaussian_pulse(double t, PulseId xi, const SystemParams& p);

/// Two-photon Raman coupling after eliminating the excited level:
/// gaussian_pulse * g / delta. Throws InvalidParameters if delta <= 0.
double effective_rabi(double t, PulseId xi, const SystemParams& p);

struct BoundaryRatios {
  double ratio_start;  ///< max(O1/OL, O1/OR) at t = 0
  double ratio_end;    ///< max(OL/O1, OR/O1) at t = T
};

/// Reports the pulse-ratio boundary conditions on the finite window
/// [0, T]. Both ratios must be small for a valid adiabatic transfer;
/// this only reports, it does not enforce. Throws DegeneratePulse if a
/// denominator underflows to zero at the evaluation point.
BoundaryRatios boundary_ratio_check(const SystemParams& p);

}  // namespace noon
