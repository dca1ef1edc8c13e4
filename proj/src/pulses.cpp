#include "noon/pulses.hpp"

#include <algorithm>
#include <cmath>

namespace noon {

double pulse_center(PulseId xi, const SystemParams& p) {
  switch (xi) {
    case PulseId::L:
      return 0.5 * p.total_time + p.t_l;
    case PulseId::R:
      return 0.5 * p.total_time + p.t_r;
    case PulseId::One:
      return 0.5 * p.total_time + p.t_1;
  }
  throw InvalidParameters("unknown pulse id");
}

double gaussian_pulse(double t, PulseId xi, const SystemParams& p) {
  const double d = t - pulse_center(xi, p);
  return p.omega0 * std::exp(-d * d / (2.0 * p.tau_pulse * p.tau_pulse));
}

double effective_rabi(double t, PulseId xi, const SystemParams& p) {
  if (!(p.delta > 0.0)) {
    throw InvalidParameters("effective_rabi requires delta > 0");
  }
  return gaussian_pulse(t, xi, p) * p.g / p.delta;
}

BoundaryRatios boundary_ratio_check(const SystemParams& p) {
  // The g/delta factor cancels in every ratio, so the raw pulses suffice.
  const double o1_start = gaussian_pulse(0.0, PulseId::One, p);
  const double ol_start = gaussian_pulse(0.0, PulseId::L, p);
  const double or_start = gaussian_pulse(0.0, PulseId::R, p);
  const double T = p.total_time;
  const double o1_end = gaussian_pulse(T, PulseId::One, p);
  const double ol_end = gaussian_pulse(T, PulseId::L, p);
  const double or_end = gaussian_pulse(T, PulseId::R, p);

  if (ol_start == 0.0 || or_start == 0.0 || o1_end == 0.0) {
    throw DegeneratePulse(
        "pulse denominator underflowed at the window boundary");
  }
  return BoundaryRatios{
      std::max(o1_start / ol_start, o1_start / or_start),
      std::max(ol_end / o1_end, or_end / o1_end),
  };
}

}  // namespace noon
