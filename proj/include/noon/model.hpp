#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <string>
#include <string_view>

#include <json.hpp>

#include "noon/errors.hpp"

namespace noon {

using Complex = std::complex<double>;

inline constexpr int kDim = 10;

using StateVector = Eigen::Vector<Complex, kDim>;
using Matrix10 = Eigen::Matrix<Complex, kDim, kDim>;
using Vector10d = Eigen::Vector<double, kDim>;

/// Physical rates and the pulse schedule, all in units of the cavity
/// coupling g (time in 1/g). Default construction is the reference
/// parameter set: Omega0 = 1.5g, T = 100/g, tau = 12/g,
/// t_L = t_R = -15/g, t_1 = 15/g, Delta = 15g, eta = 0.6g.
struct SystemParams {
  double g = 1.0;          ///< cavity coupling constant (the global unit)
  double delta = 15.0;     ///< common detuning Delta
  double eta_a = 0.6;      ///< fiber A - cavity coupling
  double eta_b = 0.6;      ///< fiber B - cavity coupling
  double gamma_f = 0.0;    ///< fiber decay rate (both fibers)
  double kappa_c = 0.0;    ///< cavity decay rate (what-if knob)
  double omega0 = 1.5;     ///< pulse amplitude
  double total_time = 100.0;  ///< adiabatic window T
  double tau_pulse = 12.0;    ///< Gaussian waist
  double t_l = -15.0;      ///< turn-on offset of the left pulse
  double t_r = -15.0;      ///< turn-on offset of the right pulse
  double t_1 = 15.0;       ///< turn-on offset of the ancilla pulse

  /// Throws InvalidParameters unless all rates are finite and >= 0,
  /// g > 0, delta > 0, total_time > 0 and tau_pulse > 0.
  void validate() const;
};

SystemParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const SystemParams& p);

/// The ten single-excitation basis vectors. Psi1..Psi5 span the left
/// chain (ancilla f_L / g_L), Psi6..Psi10 the right chain.
enum class BasisLabel {
  Psi1,
  Psi2,
  Psi3,
  Psi4,
  Psi5,
  Psi6,
  Psi7,
  Psi8,
  Psi9,
  Psi10,
};

/// Physical content of a basis label: ancilla level, atom levels, and
/// photon occupations of (cavity1, cavity2l, cavity2r, cavity3, fiberA,
/// fiberB).
struct LabelInfo {
  std::string_view ancilla;  ///< one of "fL", "gL", "fR", "gR"
  char atom_left;            ///< 's' or 'k'
  char atom_right;           ///< 's' or 'k'
  std::array<int, 6> photons;
};

int index_of(BasisLabel label);
BasisLabel label_of(int index);
const LabelInfo& label_info(BasisLabel label);

/// Ket string of the label, e.g. "|fL⟩|s⟩L|s⟩R|000⟩c|00⟩f".
std::string describe(BasisLabel label);

/// Total excitation number of the label: |f⟩ and |k⟩ count 1, photons
/// count 1 each, |g⟩ and |s⟩ count 0. Equals 1 for every label.
int excitation_number(BasisLabel label);

/// True for Psi1..Psi5.
bool is_left_chain(BasisLabel label);

StateVector basis_state(BasisLabel label);

}  // namespace noon
