#include "noon/dynamics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace noon {

namespace {

constexpr Complex kMinusI(0.0, -1.0);
constexpr double kNormDriftLimit = 1e-6;
constexpr double kNormTolerance = 1e-9;

}  // namespace

double drive_scale(const SystemParams& p) { return p.delta / p.g; }

Trajectory evolve(const StateVector& psi0, const SystemParams& p,
                  const BuildOptions& opts, double dt, int sample_every) {
  p.validate();
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw InvalidParameters("evolve requires dt > 0");
  }
  if (sample_every < 1) {
    throw InvalidParameters("evolve requires sample_every >= 1");
  }
  if (std::abs(psi0.norm() - 1.0) > kNormTolerance) {
    throw InvalidParameters("evolve requires a normalized initial state");
  }

  const double T = p.total_time;
  const long n_steps = std::max<long>(1, std::lround(T / dt));
  const double h = T / static_cast<double>(n_steps);
  const double scale = drive_scale(p);
  const BuildOptions herm{opts.include_stark, false};
  const StateVector loss =
      opts.include_decay ? decay_diagonal(p) : StateVector::Zero().eval();

  auto hamiltonian_at = [&](double t) {
    Matrix10 m = scale * build(t, p, herm).entries;
    if (opts.include_decay) m += loss.asDiagonal().toDenseMatrix();
    return m;
  };

  Trajectory traj;
  traj.step_size = h;
  traj.times.reserve(static_cast<std::size_t>(n_steps / sample_every) + 2);
  traj.states.reserve(traj.times.capacity());

  StateVector psi = psi0;
  Matrix10 h_lo = hamiltonian_at(0.0);
  for (long i = 0; i < n_steps; ++i) {
    const double t = static_cast<double>(i) * h;
    if (i % sample_every == 0) {
      traj.times.push_back(t);
      traj.states.push_back(psi);
    }

    const Matrix10 h_mid = hamiltonian_at(t + 0.5 * h);
    const Matrix10 h_hi = hamiltonian_at(t + h);
    const StateVector k1 = kMinusI * (h_lo * psi);
    const StateVector k2 = kMinusI * (h_mid * (psi + (0.5 * h) * k1));
    const StateVector k3 = kMinusI * (h_mid * (psi + (0.5 * h) * k2));
    const StateVector k4 = kMinusI * (h_hi * (psi + h * k3));
    psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    h_lo = h_hi;

    if (!opts.include_decay) {
      const double drift = std::abs(psi.squaredNorm() - 1.0);
      if (drift > kNormDriftLimit) {
        std::ostringstream msg;
        msg << "norm drift " << drift << " at t=" << t + h
            << " exceeds " << kNormDriftLimit
            << " in a Hermitian run; rerun with a smaller dt (current dt="
            << h << ")";
        throw StepTooLarge(msg.str());
      }
    }
  }
  traj.times.push_back(T);
  traj.states.push_back(psi);
  return traj;
}

Vector10d populations(const StateVector& s) { return s.cwiseAbs2(); }

double transfer_probability(const Trajectory& traj) {
  if (traj.states.empty()) {
    throw InvalidParameters("transfer_probability needs a nonempty trajectory");
  }
  const Vector10d pop = populations(traj.states.back());
  return pop[4] + pop[9];
}

double survival_fidelity(const StateVector& psi0, const StateVector& target,
                         const SystemParams& p, double dt) {
  if (std::abs(target.norm() - 1.0) > kNormTolerance) {
    throw InvalidParameters("survival_fidelity requires a normalized target");
  }
  const Trajectory traj =
      evolve(psi0, p, BuildOptions{false, true}, dt,
             std::numeric_limits<int>::max());
  return std::norm(target.dot(traj.states.back()));
}

}  // namespace noon
