#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "noon/dynamics.hpp"
#include "noon/hamiltonian.hpp"
#include "noon/spectral.hpp"

using namespace noon;

namespace {

StateVector branch_superposition() {
  StateVector psi = StateVector::Zero();
  psi[0] = psi[5] = Complex(1.0 / std::sqrt(2.0), 0.0);
  return psi;
}

/// Parameters where one pulse underflows to exactly zero at the other
/// pulse's center (narrow waist, default centers 35 and 65).
SystemParams narrow_waist() {
  SystemParams p;
  p.tau_pulse = 1e-3;
  return p;
}

}  // namespace

TEST_CASE("dark state limits with a single pulse on") {
  const SystemParams p = narrow_waist();
  const double t_l_peak = 0.5 * p.total_time + p.t_l;
  const double t_1_peak = 0.5 * p.total_time + p.t_1;

  // Omega_1e = 0: the dark state is exactly Psi1.
  const StateVector d1 = analytic_dark_left(t_l_peak, p);
  CHECK((d1 - basis_state(BasisLabel::Psi1)).norm() <= 1e-15);
  // Omega_Le = 0: exactly Psi5.
  const StateVector d5 = analytic_dark_left(t_1_peak, p);
  CHECK((d5 - basis_state(BasisLabel::Psi5)).norm() <= 1e-15);
  // Mirrors.
  CHECK((analytic_dark_right(t_l_peak, p) - basis_state(BasisLabel::Psi6))
            .norm() <= 1e-15);
  CHECK((analytic_dark_right(t_1_peak, p) - basis_state(BasisLabel::Psi10))
            .norm() <= 1e-15);
}

TEST_CASE("dark states annihilate the hamiltonian") {
  const SystemParams p;
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> time(0.0, p.total_time);
  for (int i = 0; i < 100; ++i) {
    const double t = time(rng);
    const Matrix10 h = build(t, p).entries;
    const double scale = h.norm();
    CHECK((h * analytic_dark_left(t, p)).norm() <= 1e-12 * scale);
    CHECK((h * analytic_dark_right(t, p)).norm() <= 1e-12 * scale);
    CHECK(analytic_dark_left(t, p).norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(analytic_dark_right(t, p).norm() ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("dark state with zero fiber coupling is the bare fiber label") {
  SystemParams p;
  p.eta_a = 0.0;
  const StateVector d = analytic_dark_left(50.0, p);
  // Only the Psi3 component survives; the phase convention makes it +1.
  CHECK(d[2].real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d[2].imag() == 0.0);
  CHECK(d.norm() == doctest::Approx(1.0));
}

TEST_CASE("degenerate dark state is reported") {
  SystemParams p;
  p.omega0 = 0.0;
  CHECK_THROWS_AS(analytic_dark_left(50.0, p), DegenerateDarkState);
  CHECK_THROWS_AS(reduced_dark(50.0, p, Side::Left), DegenerateDarkState);
}

TEST_CASE("reduced dark state against the full one") {
  SUBCASE("strong fiber coupling: overlap above 1 - 1e-4") {
    SystemParams p;
    p.eta_a = p.eta_b = 10.0;  // 100 x the peak effective Rabi frequency
    for (double t : {20.0, 35.0, 50.0, 65.0, 80.0}) {
      const double ov = std::abs(
          reduced_dark(t, p, Side::Left).dot(analytic_dark_left(t, p)));
      CHECK(ov * ov >= 1.0 - 1e-4);
      const double ovr = std::abs(
          reduced_dark(t, p, Side::Right).dot(analytic_dark_right(t, p)));
      CHECK(ovr * ovr >= 1.0 - 1e-4);
    }
  }
  SUBCASE("fiber coupling at the pulse scale: fiber component shows") {
    SystemParams p;
    p.eta_a = 0.1;  // equal to the peak effective Rabi frequency
    const double t = 50.0;  // pulse crossing
    const double ov = std::abs(
        reduced_dark(t, p, Side::Left).dot(analytic_dark_left(t, p)));
    CHECK(ov * ov < 1.0 - 1e-4);
  }
  SUBCASE("single pulse: reduced equals full") {
    const SystemParams p = narrow_waist();
    const double t = 0.5 * p.total_time + p.t_l;
    CHECK((reduced_dark(t, p, Side::Left) - analytic_dark_left(t, p))
              .norm() <= 1e-15);
  }
}

TEST_CASE("instantaneous spectrum") {
  const SystemParams p;
  const SpectrumSnapshot snap = instantaneous_spectrum(50.0, p);

  SUBCASE("eigenvalues ascend and pair up as +/-") {
    for (int k = 1; k < kDim; ++k) {
      CHECK(snap.eigenvalues[k] >= snap.eigenvalues[k - 1]);
    }
    const double scale = std::abs(snap.eigenvalues[kDim - 1]);
    for (int k = 0; k < kDim; ++k) {
      CHECK(std::abs(snap.eigenvalues[k] + snap.eigenvalues[kDim - 1 - k]) <=
            1e-10 * scale);
    }
  }

  SUBCASE("eigenvectors orthonormal and residuals small") {
    const Matrix10 id = Matrix10::Identity();
    CHECK((snap.eigenvectors.adjoint() * snap.eigenvectors - id).norm() <=
          1e-10);
    const Matrix10 h = build(50.0, p).entries;
    for (int k = 0; k < kDim; ++k) {
      CHECK((h * snap.eigenvectors.col(k) -
             snap.eigenvalues[k] * snap.eigenvectors.col(k))
                .norm() <= 1e-10 * h.norm());
    }
  }

  SUBCASE("one dark state per chain, spanned by the analytic forms") {
    CHECK(snap.dark_indices.size() >= 2);
    for (const StateVector& d : {analytic_dark_left(50.0, p),
                                 analytic_dark_right(50.0, p)}) {
      StateVector projected = StateVector::Zero();
      for (int k : snap.dark_indices) {
        projected += snap.eigenvectors.col(k) *
                     snap.eigenvectors.col(k).dot(d);
      }
      CHECK((d - projected).norm() <= 1e-8);
    }
  }
}

TEST_CASE("all couplings off: the spectrum collapses to zero") {
  SystemParams p;
  p.omega0 = 0.0;
  p.eta_a = p.eta_b = 0.0;
  const SpectrumSnapshot snap = instantaneous_spectrum(10.0, p);
  for (int k = 0; k < kDim; ++k) CHECK(snap.eigenvalues[k] == 0.0);
  CHECK(snap.dark_indices.size() == kDim);
}

TEST_CASE("trajectory tracks the instantaneous dark states") {
  const SystemParams p;
  const Trajectory traj = evolve(branch_superposition(), p);
  double min_overlap = 2.0;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const double t = traj.times[i];
    const double overlap =
        std::norm(analytic_dark_left(t, p).dot(traj.states[i])) +
        std::norm(analytic_dark_right(t, p).dot(traj.states[i]));
    min_overlap = std::min(min_overlap, overlap);
  }
  // The reference schedule is marginally adiabatic: the worst transient
  // excursion out of the dark pair is about 3%.
  CHECK(min_overlap >= 0.96);
  const double final_overlap =
      std::norm(analytic_dark_left(p.total_time, p).dot(traj.states.back())) +
      std::norm(analytic_dark_right(p.total_time, p).dot(traj.states.back()));
  CHECK(final_overlap >= 0.999);
}

TEST_CASE("fiber amplitude of the dark state stays negligible") {
  const SystemParams p;
  double worst = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double t = p.total_time * static_cast<double>(i) / 1000.0;
    worst = std::max(worst, std::norm(analytic_dark_left(t, p)[2]));
    worst = std::max(worst, std::norm(analytic_dark_right(t, p)[7]));
  }
  CHECK(worst <= 0.03);
}

TEST_CASE("adiabaticity metric") {
  const SystemParams p;
  const double metric = adiabaticity_metric(p, 201);
  CHECK(metric < 1.0);
  CHECK(metric == doctest::Approx(0.1070986).epsilon(1e-4));  // regression

  SUBCASE("stretching the schedule tenfold improves it tenfold") {
    SystemParams slow = p;
    slow.total_time *= 10.0;
    slow.tau_pulse *= 10.0;
    slow.t_l *= 10.0;
    slow.t_r *= 10.0;
    slow.t_1 *= 10.0;
    const double slow_metric = adiabaticity_metric(slow, 201);
    const double ratio = metric / slow_metric;
    CHECK(ratio > 9.0);
    CHECK(ratio < 11.0);
  }

  SUBCASE("no drive, frozen dark state, zero metric") {
    SystemParams off = p;
    off.omega0 = 0.0;
    CHECK(adiabaticity_metric(off, 51) == 0.0);
  }

  SUBCASE("needs enough samples") {
    CHECK_THROWS_AS(adiabaticity_metric(p, 9), InvalidParameters);
  }
}
