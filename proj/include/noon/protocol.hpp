#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noon/dynamics.hpp"
#include "noon/model.hpp"

namespace noon {

enum class AncillaLevel { F, G };

/// Symbolic protocol state. The register always has the rank-2 form
/// amp_l |x_L>|n,0> + amp_r |x_R>|0,n> with x the ancilla level, so the
/// integer round count plus two branch amplitudes represent it exactly.
struct NoonRegister {
  int n = 0;  ///< completed adiabatic rounds
  Complex amp_l{0.0, 0.0};
  Complex amp_r{0.0, 0.0};
  AncillaLevel ancilla_level = AncillaLevel::F;
  double est_fidelity = 1.0;
  /// Internal: set once the Hadamard has been applied, consumed by measure.
  bool hadamard_applied = false;
};

enum class Detected { GL, GR };
enum class NoonSign { Plus, Minus };

struct MeasurementOutcome {
  Detected detected;
  NoonSign resulting_state;  ///< GL detects NOON+, GR detects NOON-
  int n;
};

enum class RoundMode { Analytic, Simulated };

/// Register for the prepared ancilla superposition: n = 0,
/// amp_l = amp_r = 1/sqrt(2), ancilla level f.
NoonRegister init_register();

/// One adiabatic transfer round: n -> n+1, ancilla f -> g, amplitudes
/// unchanged, est_fidelity *= round_fidelity(p). In Simulated mode the
/// round additionally integrates the transfer from (Psi1+Psi6)/sqrt(2)
/// and multiplies est_fidelity by the transfer probability; the
/// trajectory is stored in *recorded when given.
NoonRegister adiabatic_round(const NoonRegister& reg, const SystemParams& p,
                             RoundMode mode, Trajectory* recorded = nullptr);

/// Instantaneous pi/2 rotation g -> f on both branches.
NoonRegister reset_pulse(const NoonRegister& reg);

/// (amp_l, amp_r) -> ((amp_l+amp_r)/sqrt(2), (amp_l-amp_r)/sqrt(2)).
NoonRegister hadamard(const NoonRegister& reg);

/// Projective detection of the ancilla ground level. The Born weights
/// come from expanding the Hadamard over the entangled branch structure;
/// for the ideal protocol both outcomes have weight 1/2. Deterministic
/// given seed.
MeasurementOutcome measure(const NoonRegister& reg, std::uint64_t seed);

struct ProtocolStep {
  std::string name;
  NoonRegister reg;  ///< register after the step
  std::optional<double> transfer_probability;  ///< simulated rounds only
};

struct ProtocolResult {
  MeasurementOutcome outcome;
  double est_fidelity;
  std::vector<ProtocolStep> transcript;
};

/// init -> (round -> reset)^(n-1) -> round -> hadamard -> measure.
/// The transcript has 2n+2 entries. Step failures are rethrown as
/// ProtocolStepError carrying the step index.
ProtocolResult run_protocol(int n, const SystemParams& p, std::uint64_t seed,
                            RoundMode mode);

}  // namespace noon
