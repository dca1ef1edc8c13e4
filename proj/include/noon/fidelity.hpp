#pragma once

#include <string>
#include <vector>

#include "noon/model.hpp"

namespace noon {

inline constexpr int kQuadratureNodes = 10001;

/// Single-round fidelity under fiber photon loss,
///   F = 1 - (gamma_f/2) * Int_0^T [ OL^2 O1^2 / K0^2 + OR^2 O1^2 / K1^2 ] dt,
/// by composite Simpson quadrature. An integrand term is 0 whenever its
/// K^2 denominator underflows below 1e-300. Throws InvalidParameters if
/// the computed F is negative (outside perturbative validity; reported,
/// not clamped).
double round_fidelity(const SystemParams& p, int nodes = kQuadratureNodes);

enum class Compounding {
  IndependentRounds,  ///< F(n) = F_round^n
  FirstOrder,         ///< F(n) = 1 - n (1 - F_round), for comparison
};

/// Fidelity of the n-round register.
double noon_fidelity(const SystemParams& p, int n,
                     Compounding rule = Compounding::IndependentRounds);

enum class SweepVariable { GammaF, Eta, Rounds };

/// One fidelity curve set. Rows are ordered overlay-major; `overlay`
/// is empty when the sweep has no overlay parameter. Failed points
/// carry NaN fidelity and a message in `failure`.
struct SweepTable {
  std::string variable;
  std::string overlay_name;
  std::vector<double> x;
  std::vector<double> overlay;
  std::vector<double> fidelity;
  std::vector<std::string> failure;
  SystemParams base;
};

/// Evaluates round/noon fidelity over `grid` for each overlay value.
/// GammaF sweeps overlay omega0; Eta sweeps (setting eta_a = eta_b = x)
/// overlay gamma_f; Rounds sweeps overlay gamma_f. Points may be
/// evaluated on up to max_threads threads; output is independent of the
/// thread count.
SweepTable sweep(const SystemParams& p, SweepVariable variable,
                 const std::vector<double>& grid,
                 const std::vector<double>& overlays, int max_threads = 1);

}  // namespace noon
