#include "noon/protocol.hpp"

#include <cmath>
#include <random>

#include "noon/fidelity.hpp"

namespace noon {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

StateVector round_initial_state() {
  StateVector psi = StateVector::Zero();
  psi[0] = Complex(kInvSqrt2, 0.0);
  psi[5] = Complex(kInvSqrt2, 0.0);
  return psi;
}

/// 53-bit uniform in [0, 1) from a fixed, portable generator.
double uniform01(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

NoonRegister init_register() {
  NoonRegister reg;
  reg.n = 0;
  reg.amp_l = Complex(kInvSqrt2, 0.0);
  reg.amp_r = Complex(kInvSqrt2, 0.0);
  reg.ancilla_level = AncillaLevel::F;
  reg.est_fidelity = 1.0;
  return reg;
}

NoonRegister adiabatic_round(const NoonRegister& reg, const SystemParams& p,
                             RoundMode mode, Trajectory* recorded) {
  if (reg.ancilla_level != AncillaLevel::F) {
    throw ProtocolOrderError(
        "adiabatic round requires the ancilla in level f (reset first)");
  }
  NoonRegister out = reg;
  out.n = reg.n + 1;
  out.ancilla_level = AncillaLevel::G;
  out.hadamard_applied = false;
  out.est_fidelity = reg.est_fidelity * round_fidelity(p);
  if (mode == RoundMode::Simulated) {
    Trajectory traj = evolve(round_initial_state(), p);
    out.est_fidelity *= transfer_probability(traj);
    if (recorded != nullptr) *recorded = std::move(traj);
  }
  return out;
}

NoonRegister reset_pulse(const NoonRegister& reg) {
  if (reg.ancilla_level != AncillaLevel::G) {
    throw ProtocolOrderError("reset pulse requires the ancilla in level g");
  }
  NoonRegister out = reg;
  out.ancilla_level = AncillaLevel::F;
  out.hadamard_applied = false;
  return out;
}

NoonRegister hadamard(const NoonRegister& reg) {
  if (reg.ancilla_level != AncillaLevel::G) {
    throw ProtocolOrderError("hadamard requires the ancilla in level g");
  }
  NoonRegister out = reg;
  out.amp_l = (reg.amp_l + reg.amp_r) * kInvSqrt2;
  out.amp_r = (reg.amp_l - reg.amp_r) * kInvSqrt2;
  out.hadamard_applied = true;
  return out;
}

MeasurementOutcome measure(const NoonRegister& reg, std::uint64_t seed) {
  if (!reg.hadamard_applied) {
    throw ProtocolOrderError("measure requires a preceding hadamard");
  }
  // Expanding over the branch structure, the |n,0> and |0,n> components
  // are orthogonal, so each ancilla level carries half the total weight.
  const double weight = std::norm(reg.amp_l) + std::norm(reg.amp_r);
  const double p_gl = 0.5 * weight;
  const Detected detected =
      uniform01(seed) < p_gl ? Detected::GL : Detected::GR;
  return MeasurementOutcome{
      detected,
      detected == Detected::GL ? NoonSign::Plus : NoonSign::Minus,
      reg.n,
  };
}

ProtocolResult run_protocol(int n, const SystemParams& p, std::uint64_t seed,
                            RoundMode mode) {
  if (n < 1) throw InvalidParameters("run_protocol needs n >= 1");
  p.validate();

  ProtocolResult result;
  NoonRegister reg = init_register();
  result.transcript.push_back({"init", reg, std::nullopt});

  auto guarded = [&result](const std::string& name, auto&& step) {
    try {
      return step();
    } catch (const Error& e) {
      throw ProtocolStepError("step " +
                              std::to_string(result.transcript.size()) + " (" +
                              name + "): " + e.what());
    }
  };

  for (int round = 1; round <= n; ++round) {
    if (round > 1) {
      reg = guarded("reset", [&] { return reset_pulse(reg); });
      result.transcript.push_back({"reset", reg, std::nullopt});
    }
    Trajectory traj;
    reg = guarded("round", [&] {
      return adiabatic_round(reg, p, mode,
                             mode == RoundMode::Simulated ? &traj : nullptr);
    });
    std::optional<double> tp;
    if (mode == RoundMode::Simulated) tp = transfer_probability(traj);
    result.transcript.push_back({"round", reg, tp});
  }

  reg = guarded("hadamard", [&] { return hadamard(reg); });
  result.transcript.push_back({"hadamard", reg, std::nullopt});

  result.outcome = guarded("measure", [&] { return measure(reg, seed); });
  result.transcript.push_back({"measure", reg, std::nullopt});
  result.est_fidelity = reg.est_fidelity;
  return result;
}

}  // namespace noon
