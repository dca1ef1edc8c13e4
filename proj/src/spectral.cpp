#include "noon/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "noon/dynamics.hpp"
#include "noon/hamiltonian.hpp"
#include "noon/pulses.hpp"

namespace noon {

namespace {

constexpr double kDarkTolFactor = 1e-9;
constexpr double kLeadingCoeffTol = 1e-12;

StateVector chain_dark(double omega_endpoint, double omega_mid, double eta,
                       int i_first, int i_fiber, int i_last) {
  const double c_first = omega_endpoint * eta;
  const double c_fiber = -omega_endpoint * omega_mid;
  const double c_last = omega_mid * eta;
  const double k = std::sqrt(c_first * c_first + c_fiber * c_fiber +
                             c_last * c_last);
  if (!(k > 0.0)) {
    throw DegenerateDarkState(
        "dark-state normalization underflowed (all couplings off)");
  }
  StateVector d = StateVector::Zero();
  d[i_first] = Complex(c_first / k, 0.0);
  d[i_fiber] = Complex(c_fiber / k, 0.0);
  d[i_last] = Complex(c_last / k, 0.0);
  // Leading nonzero coefficient real non-negative. Coefficients are
  // real here, so this is a sign flip at most.
  for (int i = 0; i < kDim; ++i) {
    if (std::abs(d[i]) > kLeadingCoeffTol) {
      if (d[i].real() < 0.0) d = -d;
      break;
    }
  }
  return d;
}

}  // namespace

StateVector analytic_dark_left(double t, const SystemParams& p) {
  return chain_dark(effective_rabi(t, PulseId::L, p),
                    effective_rabi(t, PulseId::One, p), p.eta_a, 0, 2, 4);
}

StateVector analytic_dark_right(double t, const SystemParams& p) {
  return chain_dark(effective_rabi(t, PulseId::R, p),
                    effective_rabi(t, PulseId::One, p), p.eta_b, 5, 7, 9);
}

StateVector reduced_dark(double t, const SystemParams& p, Side side) {
  const PulseId endpoint = side == Side::Left ? PulseId::L : PulseId::R;
  const double oe = effective_rabi(t, endpoint, p);
  const double o1 = effective_rabi(t, PulseId::One, p);
  const double k = std::hypot(oe, o1);
  if (!(k > 0.0)) {
    throw DegenerateDarkState("reduced dark state degenerate (pulses off)");
  }
  StateVector d = StateVector::Zero();
  const int base = side == Side::Left ? 0 : 5;
  d[base] = Complex(oe / k, 0.0);
  d[base + 4] = Complex(o1 / k, 0.0);
  return d;
}

SpectrumSnapshot instantaneous_spectrum(double t, const SystemParams& p) {
  const HamiltonianMatrix h = build(t, p);
  Eigen::SelfAdjointEigenSolver<Matrix10> solver(h.entries);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("eigendecomposition did not converge");
  }

  SpectrumSnapshot snap;
  snap.time = t;
  snap.eigenvalues = solver.eigenvalues();
  snap.eigenvectors = solver.eigenvectors();

  // Phase-fix each eigenvector: leading coefficient real non-negative.
  for (int k = 0; k < kDim; ++k) {
    for (int i = 0; i < kDim; ++i) {
      const Complex c = snap.eigenvectors(i, k);
      if (std::abs(c) > kLeadingCoeffTol) {
        snap.eigenvectors.col(k) *= std::conj(c) / std::abs(c);
        break;
      }
    }
  }

  const double norm = std::max(std::abs(snap.eigenvalues[0]),
                               std::abs(snap.eigenvalues[kDim - 1]));
  const double tol = kDarkTolFactor * norm;
  for (int k = 0; k < kDim; ++k) {
    if (std::abs(snap.eigenvalues[k]) <= tol) snap.dark_indices.push_back(k);
  }
  return snap;
}

double adiabaticity_metric(const SystemParams& p, int n_samples) {
  p.validate();
  if (n_samples < 10) {
    throw InvalidParameters("adiabaticity_metric needs n_samples >= 10");
  }

  const double T = p.total_time;
  const double fd_step = T / 1e5;
  const double scale = drive_scale(p);
  double worst = 0.0;

  for (int s = 0; s < n_samples; ++s) {
    const double t = T * static_cast<double>(s) /
                     static_cast<double>(n_samples - 1);
    const SpectrumSnapshot snap = instantaneous_spectrum(t, p);

    for (Side side : {Side::Left, Side::Right}) {
      StateVector ddt;
      try {
        auto dark = [&](double tt) {
          return side == Side::Left ? analytic_dark_left(tt, p)
                                    : analytic_dark_right(tt, p);
        };
        ddt = (dark(t + fd_step) - dark(t - fd_step)) / (2.0 * fd_step);
      } catch (const DegenerateDarkState&) {
        continue;  // pulses off: dark state frozen, zero contribution
      }

      for (int k = 0; k < kDim; ++k) {
        bool dark_k = false;
        for (int d : snap.dark_indices) dark_k |= (d == k);
        if (dark_k) continue;
        const double gap = scale * std::abs(snap.eigenvalues[k]);
        if (gap < 1e-12) {
          throw DegenerateGap("non-dark eigenvalue below tolerance at t=" +
                              std::to_string(t));
        }
        const double coupling = std::abs(snap.eigenvectors.col(k).dot(ddt));
        worst = std::max(worst, coupling / gap);
      }
    }
  }
  return worst;
}

}  // namespace noon
